#pragma once

// Test-side oracles that share nothing with the engine's differentiation or
// linear algebra: central differences, Gauss-Jordan inversion, and random
// metrics whose signature is fixed by diagonal dominance.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "paraverify/fields.hpp"

namespace oracle {

using Mat = std::vector<std::vector<double>>;

inline Mat metric_at(const paraverify::MetricField& g, const std::vector<double>& p) {
  const int n = g.dim();
  Mat m(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = g.entry(i, j).eval<double>(p);
  return m;
}

inline Mat invert(Mat a) {
  const std::size_t n = a.size();
  Mat inv(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    std::swap(inv[c], inv[piv]);
    const double d = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] /= d;
      inv[c][k] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

/// Gamma[k][i][j] from central differences of the metric with step h.
inline std::vector<Mat> christoffel_fd(const paraverify::MetricField& g, const std::vector<double>& p,
                                       double h = 1e-5) {
  const std::size_t n = p.size();
  std::vector<Mat> dg(n);
  for (std::size_t l = 0; l < n; ++l) {
    std::vector<double> up = p, dn = p;
    up[l] += h;
    dn[l] -= h;
    const Mat a = metric_at(g, up), b = metric_at(g, dn);
    dg[l] = Mat(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) dg[l][i][j] = (a[i][j] - b[i][j]) / (2 * h);
  }
  const Mat ginv = invert(metric_at(g, p));
  std::vector<Mat> gam(n, Mat(n, std::vector<double>(n, 0.0)));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
          gam[k][i][j] += 0.5 * ginv[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
  return gam;
}

struct RandomMetric {
  std::vector<std::string> entries;  // row-major expression strings
  int positive = 0, negative = 0;
};

/// Smooth metric on coordinates c0..c{n-1}: diagonal s_i (2 + 0.4 sin(...)),
/// off-diagonal 0.25 cos(...) / n, so Gershgorin fixes the signature.
inline RandomMetric random_metric(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto lin = [&] {
    std::string s = std::to_string(u(rng));
    for (int k = 0; k < n; ++k) s += " + " + std::to_string(u(rng)) + "*c" + std::to_string(k);
    return s;
  };
  RandomMetric m;
  m.entries.assign(static_cast<std::size_t>(n * n), "0");
  for (int i = 0; i < n; ++i) {
    const bool neg = i > 0 && u(rng) < 0.0;
    (neg ? m.negative : m.positive)++;
    m.entries[static_cast<std::size_t>(i * n + i)] =
        std::string(neg ? "-" : "") + "(2 + 0.4*sin(" + lin() + "))";
    for (int j = i + 1; j < n; ++j) {
      const std::string e = "0.25*cos(" + lin() + ")/" + std::to_string(n) + " + 0.1*exp(" +
                            std::to_string(0.3 * u(rng)) + "*c" + std::to_string(j) + ")/" + std::to_string(n);
      m.entries[static_cast<std::size_t>(i * n + j)] = e;
      m.entries[static_cast<std::size_t>(j * n + i)] = e;
    }
  }
  return m;
}

inline std::vector<std::string> coordinate_names(int n) {
  std::vector<std::string> c;
  for (int k = 0; k < n; ++k) c.push_back("c" + std::to_string(k));
  return c;
}

}  // namespace oracle
