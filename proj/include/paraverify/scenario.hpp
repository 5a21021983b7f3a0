#pragma once

// Scenario documents (JSON), their compilation into engine objects, and the
// full verification battery.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "paraverify/metric_checks.hpp"
#include "paraverify/paracontact.hpp"
#include "paraverify/submanifold.hpp"
#include "paraverify/warped.hpp"

namespace paraverify {

using json = nlohmann::ordered_json;

struct WarpCriterionSpec {
  std::string distribution;
  WarpCriterionOptions options;
};

struct SplittingSpec {
  std::string metric;  // a metric on the immersion source chart, or "induced"
  std::vector<int> base;
  std::vector<int> fiber;
  std::optional<ScalarExpr> candidate;
  bool xi_check = false;
};

struct BxfSpec {
  std::vector<VectorFieldExpr> base;
  std::vector<VectorFieldExpr> fiber;
  ScalarExpr log_warp;
};

struct LeafSpec {
  std::string name;
  Immersion immersion;
  std::optional<std::string> expect;
};

struct ChristoffelTable {
  std::string metric;
  std::vector<ChristoffelEntry> entries;
  bool complete = true;
};

struct NamedMetric {
  std::string chart;
  MetricField metric;
};

/// A scenario compiled from its JSON document.
struct Scenario {
  json document;
  std::string name;
  std::string description;
  std::map<std::string, Chart> charts;
  std::map<std::string, NamedMetric> metrics;
  std::vector<std::string> metric_order;
  std::optional<ParacontactStructure> structure;
  std::optional<Immersion> immersion;
  std::optional<std::string> intrinsic_metric;
  bool umbilic = false;
  std::optional<ChristoffelTable> christoffel_table;
  std::vector<DistributionSpec> distributions;
  std::vector<WarpCriterionSpec> warp_criteria;
  std::optional<SplittingSpec> splitting;
  std::optional<BxfSpec> bxf;
  std::optional<WarpedSpec> warped;
  std::vector<LeafSpec> leaves;
  std::vector<std::pair<std::string, std::string>> expect;
  VerifyConfig sampling;
  std::vector<std::string> notes;
};

namespace detail {

[[noreturn]] inline void schema_error(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::schema, "field '" + path + "': " + msg);
}

inline const json& need(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

inline std::string str(const json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

inline double num(const json& j, const std::string& path) {
  if (!j.is_number()) schema_error(path, "expected a number");
  return j.get<double>();
}

inline std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

inline std::string at_index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

inline const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

inline ScalarExpr expr(const json& j, const Chart& chart, const std::string& path) {
  if (j.is_number()) return cst(j.get<double>());
  const std::string text = str(j, path);
  try {
    return chart.parse(text);
  } catch (const Error& e) {
    throw Error(e.kind(), "field '" + path + "': " + e.message());
  }
}

inline std::vector<ScalarExpr> exprs(const json& j, const Chart& chart, const std::string& path,
                                     std::size_t expect) {
  array(j, path);
  if (j.size() != expect)
    schema_error(path, "expected " + std::to_string(expect) + " entries, got " + std::to_string(j.size()));
  std::vector<ScalarExpr> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(expr(j[i], chart, at_index(path, i)));
  return out;
}

inline Interval interval(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) schema_error(path, "expected [lo, hi]");
  Interval iv;
  iv.lo = j[0].is_null() ? -inf : num(j[0], path + "[0]");
  iv.hi = j[1].is_null() ? inf : num(j[1], path + "[1]");
  return iv;
}

inline std::vector<VectorFieldExpr> fields(const json& j, const Chart& chart, const std::string& path) {
  array(j, path);
  std::vector<VectorFieldExpr> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.emplace_back(exprs(j[i], chart, at_index(path, i), static_cast<std::size_t>(chart.dim())));
  return out;
}

inline std::vector<int> coord_list(const json& j, const Chart& chart, const std::string& path) {
  array(j, path);
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string c = str(j[i], at_index(path, i));
    const int k = chart.index_of(c);
    if (k < 0) schema_error(at_index(path, i), "unknown coordinate '" + c + "'");
    out.push_back(k);
  }
  return out;
}

}  // namespace detail

namespace detail {

inline Scenario compile_document(const json& doc) {
  Scenario s;
  s.document = doc;
  s.name = str(need(doc, "name", ""), "name");
  if (doc.contains("description")) s.description = str(doc["description"], "description");

  const json& charts = array(need(doc, "charts", ""), "charts");
  for (std::size_t i = 0; i < charts.size(); ++i) {
    const std::string path = at_index("charts", i);
    const json& c = charts[i];
    const std::string name = str(need(c, "name", path), join(path, "name"));
    std::vector<std::string> coords;
    const json& cj = array(need(c, "coords", path), join(path, "coords"));
    for (std::size_t k = 0; k < cj.size(); ++k) coords.push_back(str(cj[k], at_index(join(path, "coords"), k)));
    std::vector<Interval> box, domain;
    const json& bj = array(need(c, "box", path), join(path, "box"));
    for (std::size_t k = 0; k < bj.size(); ++k) box.push_back(interval(bj[k], at_index(join(path, "box"), k)));
    if (c.contains("domain")) {
      const json& dj = array(c["domain"], join(path, "domain"));
      for (std::size_t k = 0; k < dj.size(); ++k)
        domain.push_back(interval(dj[k], at_index(join(path, "domain"), k)));
    }
    if (s.charts.count(name)) schema_error(join(path, "name"), "duplicate chart '" + name + "'");
    try {
      s.charts.emplace(name, Chart(name, coords, box, domain));
    } catch (const Error& e) {
      schema_error(path, e.message());
    }
  }
  auto chart_ref = [&](const json& j, const std::string& path) -> const Chart& {
    const std::string n = str(j, path);
    auto it = s.charts.find(n);
    if (it == s.charts.end()) schema_error(path, "unknown chart '" + n + "'");
    return it->second;
  };

  const json& metrics = array(need(doc, "metrics", ""), "metrics");
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    const std::string path = at_index("metrics", i);
    const json& m = metrics[i];
    const std::string name = str(need(m, "name", path), join(path, "name"));
    const std::string cname = str(need(m, "chart", path), join(path, "chart"));
    const Chart& chart = chart_ref(m["chart"], join(path, "chart"));
    const std::size_t n = static_cast<std::size_t>(chart.dim());
    const auto entries = exprs(need(m, "entries", path), chart, join(path, "entries"), n * n);
    const json& sig = need(m, "signature", path);
    if (!sig.is_array() || sig.size() != 2) schema_error(join(path, "signature"), "expected [positive, negative]");
    if (s.metrics.count(name)) schema_error(join(path, "name"), "duplicate metric '" + name + "'");
    try {
      s.metrics.emplace(name, NamedMetric{cname, MetricField(static_cast<int>(n), entries, sig[0].get<int>(),
                                                             sig[1].get<int>(), chart.coords)});
    } catch (const Error& e) {
      schema_error(path, e.message());
    }
    s.metric_order.push_back(name);
  }
  auto metric_ref = [&](const json& j, const std::string& path, const Chart& on) -> const MetricField& {
    const std::string n = str(j, path);
    auto it = s.metrics.find(n);
    if (it == s.metrics.end()) schema_error(path, "unknown metric '" + n + "'");
    if (s.charts.at(it->second.chart).coords != on.coords)
      schema_error(path, "metric '" + n + "' lives on a different chart");
    return it->second.metric;
  };

  if (doc.contains("structure")) {
    const json& j = doc["structure"];
    const std::string path = "structure";
    const Chart& chart = chart_ref(need(j, "chart", path), join(path, "chart"));
    const std::size_t n = static_cast<std::size_t>(chart.dim());
    ParacontactStructure st{
        chart,
        TensorFieldExpr(chart.dim(), 1, 1, exprs(need(j, "phi", path), chart, join(path, "phi"), n * n)),
        VectorFieldExpr(exprs(need(j, "xi", path), chart, join(path, "xi"), n)),
        CovectorFieldExpr(exprs(need(j, "eta", path), chart, join(path, "eta"), n)),
        metric_ref(need(j, "metric", path), join(path, "metric"), chart)};
    s.structure = st;
  }

  if (doc.contains("christoffel_table")) {
    const json& j = doc["christoffel_table"];
    const std::string path = "christoffel_table";
    ChristoffelTable t;
    t.metric = str(need(j, "metric", path), join(path, "metric"));
    if (!s.metrics.count(t.metric)) schema_error(join(path, "metric"), "unknown metric '" + t.metric + "'");
    const Chart& chart = s.charts.at(s.metrics.at(t.metric).chart);
    if (j.contains("complete")) t.complete = j["complete"].get<bool>();
    const json& es = array(need(j, "entries", path), join(path, "entries"));
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string ep = at_index(join(path, "entries"), i);
      const json& idx = need(es[i], "index", ep);
      if (!idx.is_array() || idx.size() != 3) schema_error(join(ep, "index"), "expected [k, i, j]");
      t.entries.push_back({idx[0].get<int>(), idx[1].get<int>(), idx[2].get<int>(),
                           expr(need(es[i], "value", ep), chart, join(ep, "value"))});
    }
    s.christoffel_table = t;
  }

  if (doc.contains("immersion")) {
    const json& j = doc["immersion"];
    const std::string path = "immersion";
    const Chart& src = chart_ref(need(j, "source", path), join(path, "source"));
    const Chart& amb = chart_ref(need(j, "ambient", path), join(path, "ambient"));
    Immersion imm{src, amb,
                  exprs(need(j, "components", path), src, join(path, "components"), static_cast<std::size_t>(amb.dim())),
                  metric_ref(need(j, "metric", path), join(path, "metric"), amb), std::nullopt};
    if (j.value("structure", true) && s.structure) {
      if (s.structure->chart.coords != amb.coords) schema_error(path, "structure and ambient charts differ");
      imm.structure = s.structure;
    }
    try {
      imm.validate();
    } catch (const Error& e) {
      schema_error(path, e.message());
    }
    if (j.contains("intrinsic_metric")) {
      metric_ref(j["intrinsic_metric"], join(path, "intrinsic_metric"), src);
      s.intrinsic_metric = j["intrinsic_metric"].get<std::string>();
    }
    s.umbilic = j.value("umbilic", false);
    s.immersion = imm;
  }
  auto need_immersion = [&](const std::string& path) -> const Immersion& {
    if (!s.immersion) schema_error(path, "requires an immersion block");
    return *s.immersion;
  };

  if (doc.contains("distributions")) {
    const json& ds = array(doc["distributions"], "distributions");
    const Chart& src = need_immersion("distributions").source;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const std::string path = at_index("distributions", i);
      DistributionSpec d;
      d.name = str(need(ds[i], "name", path), join(path, "name"));
      d.invariant = fields(need(ds[i], "invariant", path), src, join(path, "invariant"));
      d.anti_invariant = fields(need(ds[i], "anti_invariant", path), src, join(path, "anti_invariant"));
      d.informational = ds[i].value("informational", false);
      s.distributions.push_back(std::move(d));
    }
  }

  if (doc.contains("warp_criteria")) {
    const json& ws = array(doc["warp_criteria"], "warp_criteria");
    const Chart& src = need_immersion("warp_criteria").source;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const std::string path = at_index("warp_criteria", i);
      WarpCriterionSpec w;
      w.distribution = str(need(ws[i], "distribution", path), join(path, "distribution"));
      if (std::none_of(s.distributions.begin(), s.distributions.end(),
                       [&](const DistributionSpec& d) { return d.name == w.distribution; }))
        schema_error(join(path, "distribution"), "unknown distribution '" + w.distribution + "'");
      w.options.log_warp = expr(need(ws[i], "log_warp", path), src, join(path, "log_warp"));
      if (ws[i].contains("orientation")) {
        const std::string o = str(ws[i]["orientation"], join(path, "orientation"));
        if (o == "fb") w.options.expected = WarpOrientation::fb;
        else if (o == "bf") w.options.expected = WarpOrientation::bf;
        else schema_error(join(path, "orientation"), "expected 'fb' or 'bf'");
      }
      if (ws[i].contains("stated_exponent"))
        w.options.stated_exponent = num(ws[i]["stated_exponent"], join(path, "stated_exponent"));
      s.warp_criteria.push_back(std::move(w));
    }
  }

  if (doc.contains("splitting")) {
    const json& j = doc["splitting"];
    const std::string path = "splitting";
    const Chart& src = need_immersion(path).source;
    SplittingSpec sp;
    sp.metric = str(need(j, "metric", path), join(path, "metric"));
    if (sp.metric != "induced") metric_ref(j["metric"], join(path, "metric"), src);
    sp.base = coord_list(need(j, "base", path), src, join(path, "base"));
    sp.fiber = coord_list(need(j, "fiber", path), src, join(path, "fiber"));
    if (j.contains("candidate")) sp.candidate = expr(j["candidate"], src, join(path, "candidate"));
    sp.xi_check = j.value("xi_check", false);
    s.splitting = sp;
  }

  if (doc.contains("bxf")) {
    const json& j = doc["bxf"];
    const std::string path = "bxf";
    const Chart& src = need_immersion(path).source;
    s.bxf = BxfSpec{fields(need(j, "base", path), src, join(path, "base")),
                    fields(need(j, "fiber", path), src, join(path, "fiber")),
                    expr(need(j, "log_warp", path), src, join(path, "log_warp"))};
  }

  if (doc.contains("warped")) {
    const json& j = doc["warped"];
    const std::string path = "warped";
    WarpedSpec w;
    w.base = chart_ref(need(j, "base", path), join(path, "base"));
    w.fiber = chart_ref(need(j, "fiber", path), join(path, "fiber"));
    w.g_base = metric_ref(need(j, "base_metric", path), join(path, "base_metric"), w.base);
    w.g_fiber = metric_ref(need(j, "fiber_metric", path), join(path, "fiber_metric"), w.fiber);
    w.f1 = expr(need(j, "f1", path), w.base, join(path, "f1"));
    if (j.contains("f2")) w.f2 = expr(j["f2"], w.fiber, join(path, "f2"));
    if (j.contains("xi_factor")) {
      const std::string f = str(j["xi_factor"], join(path, "xi_factor"));
      if (f == "base") w.xi_factor = Factor::base;
      else if (f == "fiber") w.xi_factor = Factor::fiber;
      else if (f != "none") schema_error(join(path, "xi_factor"), "expected 'base', 'fiber' or 'none'");
      w.xi_coord = j.value("xi_coord", 0);
    }
    try {
      w.validate();
    } catch (const Error& e) {
      schema_error(path, e.message());
    }
    s.warped = w;
  }

  if (doc.contains("leaves")) {
    const json& ls = array(doc["leaves"], "leaves");
    for (std::size_t i = 0; i < ls.size(); ++i) {
      const std::string path = at_index("leaves", i);
      const json& j = ls[i];
      const Chart& src = chart_ref(need(j, "source", path), join(path, "source"));
      const Chart& amb = chart_ref(need(j, "ambient", path), join(path, "ambient"));
      LeafSpec leaf{str(need(j, "name", path), join(path, "name")),
                    Immersion{src, amb,
                              exprs(need(j, "components", path), src, join(path, "components"),
                                    static_cast<std::size_t>(amb.dim())),
                              metric_ref(need(j, "metric", path), join(path, "metric"), amb), std::nullopt},
                    std::nullopt};
      if (j.contains("expect")) leaf.expect = str(j["expect"], join(path, "expect"));
      try {
        leaf.immersion.validate();
      } catch (const Error& e) {
        schema_error(path, e.message());
      }
      s.leaves.push_back(std::move(leaf));
    }
  }

  if (doc.contains("expect")) {
    const json& e = doc["expect"];
    if (!e.is_object()) schema_error("expect", "expected an object");
    for (auto it = e.begin(); it != e.end(); ++it)
      s.expect.emplace_back(it.key(), str(it.value(), join("expect", it.key())));
  }

  if (doc.contains("sampling")) {
    const json& j = doc["sampling"];
    if (j.contains("n")) s.sampling.samples = j["n"].get<int>();
    if (j.contains("seed")) s.sampling.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("tol")) s.sampling.tol = num(j["tol"], "sampling.tol");
    try {
      s.sampling.validate();
    } catch (const Error& e) {
      schema_error("sampling", e.message());
    }
  }

  if (doc.contains("notes")) {
    const json& ns = array(doc["notes"], "notes");
    for (std::size_t i = 0; i < ns.size(); ++i) s.notes.push_back(str(ns[i], at_index("notes", i)));
  }
  return s;
}

}  // namespace detail

/// Validates a scenario document and compiles it.
inline Scenario compile_scenario(const json& doc) {
  try {
    return detail::compile_document(doc);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::schema, std::string("malformed field: ") + e.what());
  }
}

inline Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::schema, std::string("invalid JSON: ") + e.what());
  }
  return compile_scenario(doc);
}

inline Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::config, "cannot open scenario file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

namespace detail {

template <class Fn>
void stage(VerificationReport& rep, const std::string& id, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    rep.error(id, "evaluation", e.what());
  }
}

}  // namespace detail

/// Runs every check the scenario supports: connection properties, tables,
/// structure, submanifold calculus, warp criteria and expected verdicts.
inline VerificationReport run_scenario(const Scenario& s, const VerifyConfig& cfg) {
  cfg.validate();
  VerificationReport rep(s.name);
  for (const auto& n : s.notes) rep.note(n);

  for (const auto& name : s.metric_order) {
    const auto& m = s.metrics.at(name);
    detail::stage(rep, name + ".connection", [&] {
      rep.append(check_connection_properties(m.metric, s.charts.at(m.chart), cfg), name);
    });
  }

  if (s.christoffel_table) {
    const auto& t = *s.christoffel_table;
    const auto& m = s.metrics.at(t.metric);
    detail::stage(rep, "christoffel_table", [&] {
      rep.append(check_christoffel_table(m.metric, s.charts.at(m.chart), t.entries, t.complete, cfg),
                 "christoffel_table");
    });
  }

  bool paracosymplectic = false;
  if (s.structure) {
    detail::stage(rep, "structure", [&] {
      rep.append(check_almost_paracontact_metric(*s.structure, cfg), "structure");
      const auto cls = classify_structure(*s.structure, cfg);
      paracosymplectic = cls.verdict == StructureClass::paracosymplectic;
      rep.append(cls.report, "structure");
    });
  }

  if (s.immersion) {
    const Immersion& imm = *s.immersion;
    detail::stage(rep, "submanifold.properties",
                  [&] { rep.append(check_submanifold_properties(imm, cfg), "submanifold"); });
    if (s.intrinsic_metric) {
      detail::stage(rep, "induced_metric", [&] {
        const MetricField& want = s.metrics.at(*s.intrinsic_metric).metric;
        const auto pts = sample_points(imm.source, cfg.samples, cfg.seed);
        auto per = parallel_map(pts.size(), [&](std::size_t i) {
          return max_abs(induced_metric(imm, pts[i]) - want.eval<double>(pts[i]));
        });
        rep.below("induced_metric", "Gram matrix of the frame = declared metric",
                  *std::max_element(per.begin(), per.end()), 1e-9, static_cast<int>(pts.size()));
      });
    }
    if (s.umbilic)
      detail::stage(rep, "umbilic", [&] { rep.append(classify_umbilic(imm, cfg).report, "umbilic"); });
    if (imm.structure) {
      detail::stage(rep, "submanifold.classify",
                    [&] { rep.append(classify_submanifold(imm, cfg).report, "submanifold"); });
      if (paracosymplectic)
        detail::stage(rep, "identities", [&] { rep.append(check_fundamental_identities(imm, cfg), "identities"); });
      else
        rep.note("submanifold identities skipped: ambient is not paracosymplectic");
      for (const auto& d : s.distributions) {
        const std::string id = "distribution." + d.name;
        detail::stage(rep, id, [&] {
          rep.append(validate_distributions(imm, d, cfg), id);
          rep.append(distribution_integrability(imm, d, cfg), id);
        });
      }
      for (const auto& w : s.warp_criteria) {
        const std::string id = "warp." + w.distribution;
        detail::stage(rep, id, [&] {
          const auto& d = *std::find_if(s.distributions.begin(), s.distributions.end(),
                                        [&](const DistributionSpec& x) { return x.name == w.distribution; });
          WarpCriterionOptions opt = w.options;
          if (d.informational) opt.expected.reset();
          rep.append(warped_shape_criterion(imm, d, opt, cfg).report, id);
        });
      }
      if (s.bxf)
        detail::stage(rep, "bxf", [&] {
          rep.append(check_bxf_identities(imm, s.bxf->base, s.bxf->fiber, s.bxf->log_warp, cfg), "bxf");
        });
    }
    if (s.splitting) {
      const auto& sp = *s.splitting;
      detail::stage(rep, "splitting", [&] {
        MetricAt fn;
        if (sp.metric == "induced") {
          fn = [&](std::span<const double> p) { return induced_metric(imm, p); };
        } else {
          const MetricField& g = s.metrics.at(sp.metric).metric;
          fn = [&g](std::span<const double> p) { return g.eval<double>(p); };
        }
        rep.append(detect_warped_splitting(fn, imm.source, sp.base, sp.fiber, sp.candidate, cfg).report, "splitting");
        if (sp.xi_check && imm.structure) rep.append(xi_fiber_projection(imm, sp.fiber, cfg), "splitting");
      });
    }
  }

  for (const auto& leaf : s.leaves) {
    const std::string id = "leaf." + leaf.name;
    detail::stage(rep, id, [&] {
      const auto u = classify_umbilic(leaf.immersion, cfg);
      rep.append(u.report, id, false);
      rep.verdict(id, to_string(u.verdict));
    });
  }

  if (s.warped) {
    const WarpedSpec& w = *s.warped;
    detail::stage(rep, "warped", [&] {
      const MetricField g = w.doubly() ? build_doubly_warped_metric(w) : build_warped_metric(w);
      const Chart product = w.product_chart();
      rep.append(check_connection_properties(g, product, cfg), "warped");
      if (w.doubly()) rep.append(verify_doubly_formula(w, cfg), "warped");
      else rep.append(verify_warped_formulas(w, cfg), "warped");
      if (!w.doubly()) {
        auto centre = [](const Chart& c) {
          Vec<double> p;
          for (const auto& b : c.box) p.push_back(0.5 * (b.lo + b.hi));
          return p;
        };
        const auto base = classify_umbilic(base_leaf(w, g, centre(w.fiber)), cfg);
        const auto fib = classify_umbilic(fiber_leaf(w, g, centre(w.base)), cfg);
        const int ns = cfg.samples;
        rep.below("warped.base_leaf_geodesic", "B x {q} totally geodesic", base.report.find("h_norm")->max_residual,
                  cfg.tol, ns);
        rep.below("warped.fiber_leaf_umbilic", "{p} x F totally umbilical",
                  fib.report.find("umbilic_residual")->max_residual, cfg.tol, ns);
      }
    });
  }

  for (const auto& [key, want] : s.expect) {
    const std::string* got = rep.find_verdict(key);
    const std::string have = got ? *got : "(none)";
    rep.below("expect." + key, "verdict " + key + " = " + want, have == want ? 0.0 : 1.0, 0.5, 0, "got " + have);
  }
  for (const auto& leaf : s.leaves)
    if (leaf.expect) {
      const std::string* got = rep.find_verdict("leaf." + leaf.name);
      const std::string have = got ? *got : "(none)";
      rep.below("expect.leaf." + leaf.name, "verdict leaf." + leaf.name + " = " + *leaf.expect,
                have == *leaf.expect ? 0.0 : 1.0, 0.5, 0, "got " + have);
    }
  return rep;
}

}  // namespace paraverify
