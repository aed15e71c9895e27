#include "horo/spherical_fan.hpp"

#include <algorithm>
#include <set>

namespace horo {

std::string to_string(ColorType t) {
  switch (t) {
    case ColorType::U: return "U";
    case ColorType::T: return "T";
    case ColorType::N: return "N";
  }
  return "?";
}

ColorType color_type_from_string(const std::string& s) {
  if (s == "U") return ColorType::U;
  if (s == "T") return ColorType::T;
  if (s == "N") return ColorType::N;
  throw ModelError("unknown color type '" + s + "' (expected U, T or N)");
}

const Color& SphericalModel::color(const std::string& name) const {
  for (const auto& c : colors)
    if (c.name == name) return c;
  throw ModelError("unknown color '" + name + "'");
}

LatticeVector SphericalModel::to_character(const IntVector& m) const {
  if (m.size() != rank()) throw DimensionError("to_character: expected M-coordinates of rank " + std::to_string(rank()));
  IntVector chi = IntVector::Zero(root_datum.character_rank());
  for (Eigen::Index i = 0; i < m.size(); ++i) chi += m(i) * m_basis[static_cast<std::size_t>(i)];
  return chi;
}

std::optional<IntVector> SphericalModel::to_m_coordinates(const LatticeVector& chi) const {
  if (chi.size() != root_datum.character_rank())
    throw DimensionError("to_m_coordinates: character of rank " + std::to_string(chi.size()) + ", expected " +
                         std::to_string(root_datum.character_rank()));
  return lattice_coordinates(columns_matrix(m_basis, root_datum.character_rank()), chi);
}

bool SphericalModel::is_dominant_m(const IntVector& m) const { return is_dominant(root_datum, to_character(m)); }

namespace {

bool same_ray(const IntVector& a, const IntVector& b) {
  if (is_zero(a) || is_zero(b)) return false;
  return equal(primitive(a), primitive(b));
}

}  // namespace

void validate_model(const SphericalModel& model) {
  const Eigen::Index x = model.root_datum.character_rank();
  const Eigen::Index n = model.rank();
  for (const auto& b : model.m_basis)
    if (b.size() != x) throw ModelError("M basis vector " + to_string(b) + " does not lie in X(T) of rank " + std::to_string(x));
  if (rank(model.m_basis, x) != n) throw ModelError("M basis is not linearly independent");
  std::set<std::string> names;
  for (const auto& c : model.colors) {
    if (c.kappa.size() != n) throw ModelError("color '" + c.name + "' has kappa of wrong rank");
    if (!names.insert(c.name).second) throw ModelError("duplicate divisor name '" + c.name + "'");
    if (model.horospherical && c.type != ColorType::U)
      throw ModelError("color '" + c.name + "' has type " + to_string(c.type) + "; horospherical colors have type U");
  }
  for (const auto& d : model.g_divisors) {
    if (d.kappa.size() != n) throw ModelError("G-divisor '" + d.name + "' has kappa of wrong rank");
    if (is_zero(d.kappa)) throw ModelError("G-divisor '" + d.name + "' has kappa 0");
    if (!names.insert(d.name).second) throw ModelError("duplicate divisor name '" + d.name + "'");
  }
  for (std::size_t i = 0; i < model.g_divisors.size(); ++i)
    for (std::size_t j = i + 1; j < model.g_divisors.size(); ++j)
      if (same_ray(model.g_divisors[i].kappa, model.g_divisors[j].kappa))
        throw ModelError("G-divisors '" + model.g_divisors[i].name + "' and '" + model.g_divisors[j].name +
                         "' have kappa values on the same ray");
  if (model.valuation_cone.ambient_dim() != n) throw ModelError("valuation cone has wrong rank");
  if (!model.valuation_cone.is_full_dimensional()) throw ModelError("valuation cone is not full-dimensional");
  if (model.horospherical && !(model.valuation_cone == Cone::whole_space(n)))
    throw ModelError("a horospherical model has valuation cone N_Q");
}

SphericalModel make_horospherical_model(RootDatum rd, std::vector<LatticeVector> m_basis, std::vector<Color> colors,
                                        std::vector<GDivisor> g_divisors) {
  SphericalModel m;
  m.root_datum = std::move(rd);
  m.m_basis = std::move(m_basis);
  m.colors = std::move(colors);
  m.g_divisors = std::move(g_divisors);
  m.horospherical = true;
  m.valuation_cone = Cone::whole_space(m.rank());
  validate_model(m);
  return m;
}

ColoredCone::ColoredCone(Cone c, std::vector<std::string> f) : cone(std::move(c)), colors(std::move(f)) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
}

std::string ColoredCone::str() const {
  std::string s = "(" + cone.str() + ", {";
  for (std::size_t i = 0; i < colors.size(); ++i) s += (i ? "," : "") + colors[i];
  return s + "})";
}

std::strong_ordering operator<=>(const ColoredCone& a, const ColoredCone& b) {
  if (auto c = a.cone <=> b.cone; c != 0) return c;
  return a.colors <=> b.colors;
}

bool meets_valuation_cone(const SphericalModel& model, const Cone& c) {
  // The relative interior of K = C ∩ V meets relint(C) iff relint(C) ∩ V is nonempty.
  const Cone k = intersect(c, model.valuation_cone);
  return c.relative_interior_contains(k.interior_point());
}

std::vector<ColoredViolation> validate_colored_cone(const SphericalModel& model, const ColoredCone& cc, bool strict) {
  std::vector<ColoredViolation> out;
  if (cc.cone.ambient_dim() != model.rank())
    throw DimensionError("colored cone of rank " + std::to_string(cc.cone.ambient_dim()) + " in a model of rank " +
                         std::to_string(model.rank()));
  std::vector<IntVector> kappas;
  for (const auto& name : cc.colors) kappas.push_back(model.color(name).kappa);

  bool cc1 = true;
  for (const auto& k : kappas)
    if (!cc.cone.contains(k)) cc1 = false;
  if (cc1) {
    if (cc.cone.is_strictly_convex()) {
      for (const auto& r : cc.cone.rays()) {
        bool ok = model.valuation_cone.contains(r);
        for (const auto& k : kappas) ok = ok || same_ray(r, k);
        if (!ok) cc1 = false;
      }
    } else {
      auto gens = intersect(cc.cone, model.valuation_cone).generators();
      gens.insert(gens.end(), kappas.begin(), kappas.end());
      cc1 = cone_from_generators(gens, model.rank()) == cc.cone;
    }
  }
  if (!cc1)
    out.push_back({"CC1", "cone " + cc.str() + " is not generated by kappa of its colors and valuation-cone elements",
                   {cc}, std::nullopt});

  if (!meets_valuation_cone(model, cc.cone))
    out.push_back({"CC2", "relative interior of " + cc.str() + " misses the valuation cone", {cc}, std::nullopt});

  if (strict) {
    bool zero_color = false;
    for (const auto& k : kappas) zero_color = zero_color || is_zero(k);
    if (!cc.cone.is_strictly_convex() || zero_color)
      out.push_back({"SCC",
                     zero_color ? "a color of " + cc.str() + " has kappa 0" : "cone " + cc.str() + " contains a line",
                     {cc}, std::nullopt});
  }
  return out;
}

std::vector<ColoredCone> colored_faces(const SphericalModel& model, const ColoredCone& cc) {
  std::vector<ColoredCone> out;
  for (const auto& f : faces(cc.cone)) {
    if (!meets_valuation_cone(model, f)) continue;
    std::vector<std::string> kept;
    for (const auto& name : cc.colors)
      if (f.contains(model.color(name).kappa)) kept.push_back(name);
    out.emplace_back(f, kept);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<IntVector, const ColoredCone*>> ColoredFan::ray_cones() const {
  std::vector<std::pair<IntVector, const ColoredCone*>> out;
  for (const auto& cc : cones)
    if (cc.cone.dim() == 1 && cc.cone.is_strictly_convex()) out.emplace_back(cc.cone.rays().front(), &cc);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return LexLess{}(a.first, b.first); });
  return out;
}

std::vector<Cone> ColoredFan::underlying_cones() const {
  std::vector<Cone> out;
  for (const auto& cc : cones) out.push_back(cc.cone);
  return out;
}

ColoredFanValidation validate_colored_fan(const SphericalModel& model, const std::vector<ColoredCone>& input) {
  ColoredFanValidation result;
  for (const auto& cc : input) {
    auto v = validate_colored_cone(model, cc, true);
    result.violations.insert(result.violations.end(), v.begin(), v.end());
  }
  if (!result.violations.empty()) return result;

  std::set<ColoredCone> closed;
  for (const auto& cc : input)
    for (auto& f : colored_faces(model, cc)) closed.insert(std::move(f));
  if (closed.empty()) closed.insert(ColoredCone(Cone::zero(model.rank()), {}));
  const std::vector<ColoredCone> all(closed.begin(), closed.end());

  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const Cone k = intersect(intersect(all[i].cone, all[j].cone), model.valuation_cone);
      const IntVector v = k.interior_point();
      if (all[i].cone.relative_interior_contains(v) && all[j].cone.relative_interior_contains(v))
        result.violations.push_back({"CF2",
                                     "relative interiors of " + all[i].str() + " and " + all[j].str() + " share " +
                                         to_string(v),
                                     {all[i], all[j]}, v});
    }
  if (!result.violations.empty()) return result;
  ColoredFan fan;
  fan.rank = model.rank();
  fan.cones = all;
  result.fan = std::move(fan);
  return result;
}

ColoredFan make_colored_fan(const SphericalModel& model, const std::vector<ColoredCone>& cones) {
  auto v = validate_colored_fan(model, cones);
  if (!v.valid()) {
    std::string msg = "invalid colored fan:";
    for (const auto& x : v.violations) msg += " [" + x.axiom + "] " + x.message + ";";
    throw ModelError(msg);
  }
  return std::move(*v.fan);
}

std::vector<IntVector> weight_monoid(const SphericalModel& model) {
  std::vector<IntVector> kappas;
  for (const auto& c : model.colors) kappas.push_back(c.kappa);
  for (const auto& d : model.g_divisors) kappas.push_back(d.kappa);
  return hilbert_basis(dual_cone(cone_from_generators(kappas, model.rank())));
}

FanValidation fan_of_Z(const SphericalModel& model, const ColoredFan& cf, const std::optional<std::string>& excluded) {
  if (excluded && model.color(*excluded).type != ColorType::T)
    throw ModelError("excluded color '" + *excluded + "' must have type T");
  std::vector<Cone> cones;
  for (const auto& cc : cf.cones)
    if (cc.colors.empty() || (excluded && cc.colors == std::vector<std::string>{*excluded})) cones.push_back(cc.cone);
  return validate_fan(cones, model.rank(), false);
}

bool is_complete(const SphericalModel& model, const ColoredFan& cf) {
  if (!model.horospherical)
    throw DomainError("completeness is only decided for horospherical models");
  const auto v = validate_fan(cf.underlying_cones(), model.rank(), true);
  if (!v.valid()) throw ModelError("underlying cones of the colored fan do not form a fan");
  return is_complete(*v.fan);
}

std::vector<IntVector> g_stable_rays(const SphericalModel& model, const ColoredFan& cf) {
  std::set<std::string> fan_colors;
  for (const auto& cc : cf.cones) fan_colors.insert(cc.colors.begin(), cc.colors.end());
  std::vector<IntVector> out;
  for (const auto& [rho, cc] : cf.ray_cones()) {
    bool meets = false;
    for (const auto& name : fan_colors) {
      const IntVector& k = model.color(name).kappa;
      if (is_zero(k) || same_ray(k, rho)) meets = true;
    }
    if (!meets) out.push_back(rho);
  }
  sort_unique(out);
  return out;
}

}  // namespace horo
