#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paraverify/error.hpp"
#include "paraverify/linalg.hpp"
#include "paraverify/parser.hpp"

namespace paraverify {

inline constexpr double inf = std::numeric_limits<double>::infinity();

/// Open interval (lo, hi); either end may be infinite.
struct Interval {
  double lo = -inf;
  double hi = inf;

  bool contains(double x) const { return x > lo && x < hi; }
  bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }
};

/// A coordinate chart: named coordinates, an open domain box, and the finite
/// box sample points are drawn from.
struct Chart {
  std::string name;
  std::vector<std::string> coords;
  std::vector<Interval> domain;
  std::vector<Interval> box;

  Chart() = default;
  Chart(std::string n, std::vector<std::string> c, std::vector<Interval> sample_box,
        std::vector<Interval> dom = {})
      : name(std::move(n)), coords(std::move(c)), domain(std::move(dom)), box(std::move(sample_box)) {
    if (domain.empty()) domain.assign(coords.size(), Interval{});
    validate();
  }

  int dim() const { return static_cast<int>(coords.size()); }

  int index_of(std::string_view coord) const {
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] == coord) return static_cast<int>(i);
    return -1;
  }

  ScalarExpr parse(std::string_view text) const { return parse_expression(text, coords); }

  void validate() const {
    if (coords.empty()) throw Error(ErrorKind::schema, "chart '" + name + "' has no coordinates");
    std::set<std::string> seen;
    for (const auto& c : coords) {
      if (c.empty()) throw Error(ErrorKind::schema, "chart '" + name + "' has an empty coordinate name");
      if (!seen.insert(c).second)
        throw Error(ErrorKind::schema, "chart '" + name + "' repeats coordinate '" + c + "'");
    }
    if (domain.size() != coords.size() || box.size() != coords.size())
      throw Error(ErrorKind::schema, "chart '" + name + "' box/domain size does not match coordinates");
    for (std::size_t i = 0; i < coords.size(); ++i) {
      const auto& b = box[i];
      const auto& d = domain[i];
      if (!b.bounded() || !(b.lo <= b.hi))
        throw Error(ErrorKind::schema,
                    "chart '" + name + "' sampling box for '" + coords[i] + "' must be finite");
      if (b.lo < d.lo || b.hi > d.hi)
        throw Error(ErrorKind::schema,
                    "chart '" + name + "' sampling box for '" + coords[i] + "' leaves the domain");
    }
  }
};

/// Deterministic generator for one (seed, stream, index) triple, so samples
/// and per-sample random vectors do not depend on evaluation order.
inline std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  // 53-bit mantissa draw; std::uniform_real_distribution is not specified
  // bit-for-bit across standard libraries.
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

inline Vec<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo = -1.0,
                                 double hi = 1.0) {
  Vec<double> v(n);
  for (auto& x : v) x = uniform(rng, lo, hi);
  return v;
}

/// Points drawn uniformly from a sampling box; points landing on an open
/// domain boundary are redrawn.
inline std::vector<Vec<double>> sample_points(const Chart& chart, int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::config, "at least one sample point is required");
  std::vector<Vec<double>> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    auto rng = rng_for(seed, 0x5a3b1e, static_cast<std::uint64_t>(s));
    Vec<double> p(chart.coords.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto& b = chart.box[i];
      do {
        p[i] = uniform(rng, b.lo, b.hi);
      } while (!chart.domain[i].contains(p[i]) && b.lo != b.hi);
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace paraverify
