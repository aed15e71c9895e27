#include "horo/catalog.hpp"

#include <algorithm>

namespace horo {

namespace {

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  const auto fan = [&](std::string name, std::string description, std::string text) {
    out.push_back({std::move(name), "fan", std::move(description), std::move(text)});
  };
  const auto model = [&](std::string name, std::string description, std::string text) {
    out.push_back({std::move(name), "model", std::move(description), std::move(text)});
  };

  fan("P1", "projective line", R"({
  "rank": 1,
  "cones": [
    {"generators": [[1]]},
    {"generators": [[-1]]}
  ]
})");
  fan("P2", "projective plane", R"({
  "rank": 2,
  "cones": [
    {"generators": [[1, 0], [0, 1]]},
    {"generators": [[0, 1], [-1, -1]]},
    {"generators": [[-1, -1], [1, 0]]}
  ]
})");
  fan("P3", "projective 3-space", R"({
  "rank": 3,
  "cones": [
    {"generators": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]},
    {"generators": [[1, 0, 0], [0, 1, 0], [-1, -1, -1]]},
    {"generators": [[1, 0, 0], [0, 0, 1], [-1, -1, -1]]},
    {"generators": [[0, 1, 0], [0, 0, 1], [-1, -1, -1]]}
  ]
})");
  fan("F0", "Hirzebruch surface F0 = P1 x P1", R"({
  "rank": 2,
  "cones": [
    {"generators": [[1, 0], [0, 1]]},
    {"generators": [[0, 1], [-1, 0]]},
    {"generators": [[-1, 0], [0, -1]]},
    {"generators": [[0, -1], [1, 0]]}
  ]
})");
  fan("F1", "Hirzebruch surface F1", R"({
  "rank": 2,
  "cones": [
    {"generators": [[1, 0], [0, 1]]},
    {"generators": [[0, 1], [-1, 1]]},
    {"generators": [[-1, 1], [0, -1]]},
    {"generators": [[0, -1], [1, 0]]}
  ]
})");
  fan("F2", "Hirzebruch surface F2", R"({
  "rank": 2,
  "cones": [
    {"generators": [[1, 0], [0, 1]]},
    {"generators": [[0, 1], [-1, 2]]},
    {"generators": [[-1, 2], [0, -1]]},
    {"generators": [[0, -1], [1, 0]]}
  ]
})");
  fan("A1-cone", "affine line, the ray through +1", R"({
  "rank": 1,
  "cones": [
    {"generators": [[1]]}
  ]
})");
  fan("A1-cone-minus", "the ray through -1 in rank one", R"({
  "rank": 1,
  "cones": [
    {"generators": [[-1]]}
  ]
})");
  fan("A2-cone", "affine plane, the positive quadrant", R"({
  "rank": 2,
  "cones": [
    {"generators": [[1, 0], [0, 1]]}
  ]
})");

  model("sl2", "SL2/U with one color of kappa 1 and G-divisors at +1 and -1; use with P1", R"({
  "root_datum": "A1",
  "M_basis": [[1]],
  "colors": [{"name": "D", "kappa": [1], "type": "U"}],
  "g_divisors": [
    {"name": "D+", "kappa": [1]},
    {"name": "D-", "kappa": [-1]}
  ],
  "horospherical": true
})");
  model("torus2", "two-dimensional torus with the three boundary divisors of P2", R"({
  "root_datum": "torus 2",
  "M_basis": [[1, 0], [0, 1]],
  "colors": [],
  "g_divisors": [
    {"name": "D1", "kappa": [1, 0]},
    {"name": "D2", "kappa": [0, 1]},
    {"name": "D3", "kappa": [-1, -1]}
  ],
  "horospherical": true
})");
  model("torus2-affine", "two-dimensional torus with the two coordinate divisors of the affine plane", R"({
  "root_datum": "torus 2",
  "M_basis": [[1, 0], [0, 1]],
  "colors": [],
  "g_divisors": [
    {"name": "D1", "kappa": [1, 0]},
    {"name": "D2", "kappa": [0, 1]}
  ],
  "horospherical": true
})");
  model("sl3-parabolic", "SL3 with M spanned by the second fundamental weight, Levi {a1}; use with P1", R"({
  "root_datum": "A2",
  "M_basis": [[0, 1]],
  "colors": [{"name": "D", "kappa": [1], "type": "U"}],
  "g_divisors": [
    {"name": "D+", "kappa": [1]},
    {"name": "D-", "kappa": [-1]}
  ],
  "horospherical": true,
  "levi": ["a1"]
})");
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

std::optional<CatalogEntry> find_catalog_entry(const std::string& name) {
  const auto& all = catalog();
  const auto it = std::find_if(all.begin(), all.end(), [&](const CatalogEntry& e) { return e.name == name; });
  if (it == all.end()) return std::nullopt;
  return *it;
}

}  // namespace horo
