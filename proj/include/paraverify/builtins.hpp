#pragma once

// Built-in scenario registry. Each scenario is stored as the same JSON document
// a user would write, so export and reload go through the public loader.

#include <string>
#include <string_view>
#include <vector>

#include "paraverify/scenario.hpp"

namespace paraverify {

struct BuiltinScenario {
  std::string_view name;
  std::string_view summary;
  std::string_view document;
};

namespace detail {

inline constexpr std::string_view example21_json = R"json({
  "name": "example21",
  "description": "Five-dimensional paracosymplectic structure with metric diag(x^2, y^2, -x^2, -y^2, 1)",
  "charts": [
    {"name": "R5", "coords": ["x1", "x2", "y1", "y2", "t"],
     "box": [[0.5, 2], [0.5, 2], [-2, 2], [-2, 2], [-1, 1]],
     "domain": [[0, null], [0, null], [null, null], [null, null], [null, null]]}
  ],
  "metrics": [
    {"name": "g", "chart": "R5", "signature": [3, 2],
     "entries": ["x1^2", 0, 0, 0, 0,
                 0, "x2^2", 0, 0, 0,
                 0, 0, "-(x1^2)", 0, 0,
                 0, 0, 0, "-(x2^2)", 0,
                 0, 0, 0, 0, 1]}
  ],
  "structure": {
    "chart": "R5", "metric": "g",
    "phi": [0, 0, 1, 0, 0,
            0, 0, 0, 1, 0,
            1, 0, 0, 0, 0,
            0, 1, 0, 0, 0,
            0, 0, 0, 0, 0],
    "xi": [0, 0, 0, 0, 1],
    "eta": [0, 0, 0, 0, 1]
  },
  "christoffel_table": {
    "metric": "g", "complete": true,
    "entries": [
      {"index": [0, 0, 0], "value": "1/x1"},
      {"index": [2, 0, 2], "value": "1/x1"},
      {"index": [0, 2, 2], "value": "1/x1"},
      {"index": [1, 1, 1], "value": "1/x2"},
      {"index": [3, 1, 3], "value": "1/x2"},
      {"index": [1, 3, 3], "value": "1/x2"}
    ]
  },
  "expect": {"structure": "paracosymplectic"},
  "notes": [
    "metric symbols x, y read as the coordinates x1, x2; this is the reading under which the tabulated connection is consistent",
    "Christoffel indices are [k, i, j] for Gamma^k_ij, zero based"
  ]
})json";

inline constexpr std::string_view example51_json = R"json({
  "name": "example51",
  "description": "Four-dimensional immersion (v tan t, v tan b, v sec t, v sec b, u) in the flat five-dimensional paracosymplectic space",
  "charts": [
    {"name": "R5", "coords": ["x1", "x2", "y1", "y2", "t"],
     "box": [[-2, 2], [-2, 2], [-2, 2], [-2, 2], [0.2, 1.2]],
     "domain": [[null, null], [null, null], [null, null], [null, null], [0, null]]},
    {"name": "M", "coords": ["v", "theta", "beta", "u"],
     "box": [[0.5, 2], [0.2, 1.2], [0.2, 1.2], [0.2, 1.2]],
     "domain": [[0, null], [-1.5707963267948966, 1.5707963267948966], [-1.5707963267948966, 1.5707963267948966], [0, null]]},
    {"name": "L", "coords": ["theta", "beta"], "box": [[0.2, 1.2], [0.2, 1.2]]},
    {"name": "P", "coords": ["v", "u"], "box": [[0.5, 2], [0.2, 1.2]]}
  ],
  "metrics": [
    {"name": "flat", "chart": "R5", "signature": [3, 2],
     "entries": [1, 0, 0, 0, 0,
                 0, 1, 0, 0, 0,
                 0, 0, -1, 0, 0,
                 0, 0, 0, -1, 0,
                 0, 0, 0, 0, 1]},
    {"name": "gM", "chart": "M", "signature": [3, 1],
     "entries": [-2, 0, 0, 0,
                 0, "v^2*sec(theta)^2", 0, 0,
                 0, 0, "v^2*sec(beta)^2", 0,
                 0, 0, 0, 1]}
  ],
  "structure": {
    "chart": "R5", "metric": "flat",
    "phi": [0, 0, 1, 0, 0,
            0, 0, 0, 1, 0,
            1, 0, 0, 0, 0,
            0, 1, 0, 0, 0,
            0, 0, 0, 0, 0],
    "xi": [0, 0, 0, 0, 1],
    "eta": [0, 0, 0, 0, 1]
  },
  "immersion": {
    "source": "M", "ambient": "R5", "metric": "flat",
    "components": ["v*tan(theta)", "v*tan(beta)", "v*sec(theta)", "v*sec(beta)", "u"],
    "intrinsic_metric": "gM"
  },
  "distributions": [
    {"name": "computed",
     "invariant": [[1, 0, 0, 0], [0, "cos(theta)", "cos(beta)", 0]],
     "anti_invariant": [[0, "cos(theta)", "-cos(beta)", 0]]},
    {"name": "stated", "informational": true,
     "invariant": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]],
     "anti_invariant": [[0, 0, 0, 1]]}
  ],
  "warp_criteria": [
    {"distribution": "computed", "log_warp": "ln(v)", "orientation": "bf", "stated_exponent": 2},
    {"distribution": "stated", "log_warp": "ln(v)", "orientation": "fb", "stated_exponent": 2}
  ],
  "splitting": {"metric": "induced", "base": ["v", "u"], "fiber": ["theta", "beta"],
                "candidate": "v^2", "xi_check": true},
  "leaves": [
    {"name": "fiber", "source": "L", "ambient": "M", "metric": "gM",
     "components": [1.3, "theta", "beta", 0.5], "expect": "totally_umbilical"},
    {"name": "base", "source": "P", "ambient": "M", "metric": "gM",
     "components": ["v", 0.7, 0.4, "u"], "expect": "totally_geodesic"}
  ],
  "expect": {"structure": "paracosymplectic", "submanifold": "pr_semi_invariant"},
  "notes": [
    "distribution 'computed' is read off the engine's t and n operators; 'stated' is the literal reading span{X1,X2,X3} + span{X4} with X4 = xi, reported for information only",
    "the warp criterion is fitted with mu = c ln v; c is the fitted exponent of v in f"
  ]
})json";

inline constexpr std::string_view synthetic_warped_json = R"json({
  "name": "synthetic_warped",
  "description": "Riemannian warped product R x_f R with f = exp(x)",
  "charts": [
    {"name": "B", "coords": ["x"], "box": [[-1, 1]]},
    {"name": "F", "coords": ["u"], "box": [[-1, 1]]}
  ],
  "metrics": [
    {"name": "gB", "chart": "B", "signature": [1, 0], "entries": [1]},
    {"name": "gF", "chart": "F", "signature": [1, 0], "entries": [1]}
  ],
  "warped": {"base": "B", "base_metric": "gB", "fiber": "F", "fiber_metric": "gF", "f1": "exp(x)"}
})json";

inline constexpr std::string_view synthetic_doubly_json = R"json({
  "name": "synthetic_doubly",
  "description": "Doubly warped product with f1 = exp(x), f2 = exp(u) and xi along the fiber",
  "charts": [
    {"name": "B", "coords": ["x"], "box": [[-1, 1]]},
    {"name": "F", "coords": ["u"], "box": [[-1, 1]]}
  ],
  "metrics": [
    {"name": "gB", "chart": "B", "signature": [1, 0], "entries": [1]},
    {"name": "gF", "chart": "F", "signature": [1, 0], "entries": [1]}
  ],
  "warped": {"base": "B", "base_metric": "gB", "fiber": "F", "fiber_metric": "gF",
             "f1": "exp(x)", "f2": "exp(u)", "xi_factor": "fiber", "xi_coord": 0}
})json";

inline constexpr std::string_view synthetic_forced_json = R"json({
  "name": "synthetic_forced",
  "description": "Doubly warped product with a parallel unit field in the base; its fiber warp must be constant",
  "charts": [
    {"name": "B", "coords": ["x", "w"], "box": [[-1, 1], [-1, 1]]},
    {"name": "F", "coords": ["u"], "box": [[-1, 1]]}
  ],
  "metrics": [
    {"name": "gB", "chart": "B", "signature": [2, 0], "entries": [1, 0, 0, 1]},
    {"name": "gF", "chart": "F", "signature": [1, 0], "entries": [1]}
  ],
  "warped": {"base": "B", "base_metric": "gB", "fiber": "F", "fiber_metric": "gF",
             "f1": "exp(x)", "f2": 1, "xi_factor": "base", "xi_coord": 1}
})json";

inline constexpr std::string_view synthetic_bxf_json = R"json({
  "name": "synthetic_bxf",
  "description": "Proper warped product B x_f F with xi in B, immersed in the flat paracosymplectic space",
  "charts": [
    {"name": "R5", "coords": ["x1", "x2", "y1", "y2", "t"],
     "box": [[-2, 2], [-2, 2], [-2, 2], [-2, 2], [-1, 1]]},
    {"name": "N", "coords": ["v", "s", "r", "u"],
     "box": [[0.5, 2], [-0.5, 0.5], [-0.5, 0.5], [-1, 1]],
     "domain": [[0, null], [null, null], [null, null], [null, null]]}
  ],
  "metrics": [
    {"name": "flat", "chart": "R5", "signature": [3, 2],
     "entries": [1, 0, 0, 0, 0,
                 0, 1, 0, 0, 0,
                 0, 0, -1, 0, 0,
                 0, 0, 0, -1, 0,
                 0, 0, 0, 0, 1]},
    {"name": "gN", "chart": "N", "signature": [3, 1],
     "entries": [-2, 0, 0, 0,
                 0, "2*v^2", 0, 0,
                 0, 0, "2*v^2", 0,
                 0, 0, 0, 1]}
  ],
  "structure": {
    "chart": "R5", "metric": "flat",
    "phi": [0, 0, 1, 0, 0,
            0, 0, 0, 1, 0,
            1, 0, 0, 0, 0,
            0, 1, 0, 0, 0,
            0, 0, 0, 0, 0],
    "xi": [0, 0, 0, 0, 1],
    "eta": [0, 0, 0, 0, 1]
  },
  "immersion": {
    "source": "N", "ambient": "R5", "metric": "flat",
    "components": ["v*sinh(s+r)", "v*sinh(s-r)", "v*cosh(s+r)", "v*cosh(s-r)", "u"],
    "intrinsic_metric": "gN"
  },
  "distributions": [
    {"name": "product", "invariant": [[1, 0, 0, 0], [0, 1, 0, 0]], "anti_invariant": [[0, 0, 1, 0]]}
  ],
  "warp_criteria": [
    {"distribution": "product", "log_warp": "ln(v)", "orientation": "bf", "stated_exponent": 1}
  ],
  "splitting": {"metric": "induced", "base": ["v", "s", "u"], "fiber": ["r"], "candidate": "v^2", "xi_check": true},
  "bxf": {"base": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1]], "fiber": [[0, 0, 1, 0]], "log_warp": "ln(v)"},
  "expect": {"structure": "paracosymplectic", "submanifold": "pr_semi_invariant"},
  "notes": ["B = (v, s, u) with xi = d/du, F = r, f = sqrt(2) v"]
})json";

inline constexpr std::string_view synthetic_product_json = R"json({
  "name": "synthetic_product",
  "description": "Totally geodesic PR-semi-invariant product (a, c, b, 0, u); the warp criterion must fit a zero exponent",
  "charts": [
    {"name": "R5", "coords": ["x1", "x2", "y1", "y2", "t"],
     "box": [[-2, 2], [-2, 2], [-2, 2], [-2, 2], [-1, 1]]},
    {"name": "N", "coords": ["a", "b", "c", "u"], "box": [[-1, 1], [-1, 1], [-1, 1], [-1, 1]]}
  ],
  "metrics": [
    {"name": "flat", "chart": "R5", "signature": [3, 2],
     "entries": [1, 0, 0, 0, 0,
                 0, 1, 0, 0, 0,
                 0, 0, -1, 0, 0,
                 0, 0, 0, -1, 0,
                 0, 0, 0, 0, 1]}
  ],
  "structure": {
    "chart": "R5", "metric": "flat",
    "phi": [0, 0, 1, 0, 0,
            0, 0, 0, 1, 0,
            1, 0, 0, 0, 0,
            0, 1, 0, 0, 0,
            0, 0, 0, 0, 0],
    "xi": [0, 0, 0, 0, 1],
    "eta": [0, 0, 0, 0, 1]
  },
  "immersion": {
    "source": "N", "ambient": "R5", "metric": "flat",
    "components": ["a", "c", "b", 0, "u"],
    "umbilic": true
  },
  "distributions": [
    {"name": "product", "invariant": [[1, 0, 0, 0], [0, 1, 0, 0]], "anti_invariant": [[0, 0, 1, 0]]}
  ],
  "warp_criteria": [
    {"distribution": "product", "log_warp": "a", "orientation": "bf"}
  ],
  "expect": {"structure": "paracosymplectic", "submanifold": "pr_semi_invariant", "umbilic": "totally_geodesic"}
})json";

inline constexpr std::string_view synthetic_xi_normal_json = R"json({
  "name": "synthetic_xi_normal",
  "description": "Three-dimensional slice (a, c, b, 0, 0) with xi normal; the classifier must report xi not tangent",
  "charts": [
    {"name": "R5", "coords": ["x1", "x2", "y1", "y2", "t"],
     "box": [[-2, 2], [-2, 2], [-2, 2], [-2, 2], [-1, 1]]},
    {"name": "N", "coords": ["a", "b", "c"], "box": [[-1, 1], [-1, 1], [-1, 1]]}
  ],
  "metrics": [
    {"name": "flat", "chart": "R5", "signature": [3, 2],
     "entries": [1, 0, 0, 0, 0,
                 0, 1, 0, 0, 0,
                 0, 0, -1, 0, 0,
                 0, 0, 0, -1, 0,
                 0, 0, 0, 0, 1]}
  ],
  "structure": {
    "chart": "R5", "metric": "flat",
    "phi": [0, 0, 1, 0, 0,
            0, 0, 0, 1, 0,
            1, 0, 0, 0, 0,
            0, 1, 0, 0, 0,
            0, 0, 0, 0, 0],
    "xi": [0, 0, 0, 0, 1],
    "eta": [0, 0, 0, 0, 1]
  },
  "immersion": {
    "source": "N", "ambient": "R5", "metric": "flat",
    "components": ["a", "c", "b", 0, 0]
  },
  "expect": {"structure": "paracosymplectic", "submanifold": "xi_not_tangent"}
})json";

}  // namespace detail

inline const std::vector<BuiltinScenario>& builtin_scenarios() {
  static const std::vector<BuiltinScenario> all = {
      {"example21", "5-dim paracosymplectic structure and its Christoffel table", detail::example21_json},
      {"example51", "4-dim PR-semi-invariant immersion and its warped splitting", detail::example51_json},
      {"synthetic_warped", "warped product R x_f R, f = exp(x)", detail::synthetic_warped_json},
      {"synthetic_doubly", "doubly warped product, f1 = exp(x), f2 = exp(u)", detail::synthetic_doubly_json},
      {"synthetic_forced", "parallel xi in the base forces a constant fiber warp", detail::synthetic_forced_json},
      {"synthetic_bxf", "proper warped product B x_f F with xi in B", detail::synthetic_bxf_json},
      {"synthetic_product", "totally geodesic product, zero warp exponent", detail::synthetic_product_json},
      {"synthetic_xi_normal", "xi normal to the submanifold", detail::synthetic_xi_normal_json},
  };
  return all;
}

inline const BuiltinScenario* find_builtin(std::string_view name) {
  for (const auto& b : builtin_scenarios())
    if (b.name == name) return &b;
  return nullptr;
}

inline Scenario builtin_scenario(std::string_view name) {
  const BuiltinScenario* b = find_builtin(name);
  if (!b) throw Error(ErrorKind::unknown_scenario, "unknown scenario '" + std::string(name) + "'");
  return parse_scenario(std::string(b->document));
}

/// A builtin name or a path to a scenario file.
inline Scenario resolve_scenario(const std::string& name_or_path) {
  if (find_builtin(name_or_path)) return builtin_scenario(name_or_path);
  if (name_or_path.find('/') != std::string::npos || name_or_path.find(".json") != std::string::npos)
    return load_scenario_file(name_or_path);
  throw Error(ErrorKind::unknown_scenario, "unknown scenario '" + name_or_path + "'");
}

}  // namespace paraverify
