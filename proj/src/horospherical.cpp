#include "horo/horospherical.hpp"

#include <algorithm>

namespace horo {

std::string to_string(Movability m) {
  switch (m) {
    case Movability::Movable: return "movable";
    case Movability::NotMovable: return "not-movable";
    case Movability::InconclusiveTruncated: return "inconclusive-truncated";
    case Movability::NotApplicable: return "not-applicable";
  }
  return "?";
}

std::string to_string(LndMode m) { return m == LndMode::LambdaPlus ? "lambda-plus" : "gamma-o"; }

LndMode lnd_mode_from_string(const std::string& s) {
  if (s == "lambda-plus") return LndMode::LambdaPlus;
  if (s == "gamma-o") return LndMode::GammaO;
  throw ModelError("unknown mode '" + s + "' (expected lambda-plus or gamma-o)");
}

bool MovabilityReport::any_inconclusive() const {
  return std::any_of(divisors.begin(), divisors.end(),
                     [](const DivisorMovability& d) { return d.decision == Movability::InconclusiveTruncated; });
}

namespace {

void require_horospherical(const SphericalModel& model, const char* where) {
  if (!model.horospherical) throw DomainError(std::string(where) + ": the model is not horospherical");
}

// <alpha_i^vee, sum_j m_j b_j> >= 0 for every simple coroot, as inequalities in m.
std::vector<AffineForm> dominance_inequalities(const SphericalModel& model) {
  std::vector<AffineForm> out;
  for (const auto& coroot : model.root_datum.coroots) {
    IntVector normal(model.rank());
    for (Eigen::Index j = 0; j < model.rank(); ++j) normal(j) = pair(coroot, model.m_basis[static_cast<std::size_t>(j)]);
    out.push_back({normal, Integer(0)});
  }
  return out;
}

DivisorMovability analyze(const SphericalModel& model, const Fan& fan, const GDivisor& d, const Integer& box,
                          const std::string& where) {
  DivisorMovability out;
  out.divisor = d.name;
  out.kappa = d.kappa;
  if (!fan.has_ray(d.kappa)) {
    out.note = "kappa " + to_string(d.kappa) + " is not a ray of " + where;
    return out;
  }
  const DemazureRootSet roots = demazure_roots_at(fan, d.kappa, box);
  out.root_set_status = roots.status;
  out.roots = roots.roots;
  out.defining_polyhedron = roots.defining_polyhedron;

  Polyhedron dominant = roots.defining_polyhedron;
  for (auto& f : dominance_inequalities(model)) dominant.inequalities.push_back(std::move(f));
  const LatticePointSet pts = lattice_points(dominant, box);
  out.dominant_search_status = pts.status == EnumerationStatus::UnboundedTruncated
                                   ? EnumerationStatus::UnboundedTruncated
                                   : EnumerationStatus::BoundedComplete;
  for (const auto& m : pts.points)
    if (satisfies_fan_condition(fan, d.kappa, m)) out.dominant_roots.push_back(m);

  if (!out.dominant_roots.empty()) {
    out.decision = Movability::Movable;
    out.witness = out.dominant_roots.front();
    out.witness_character = model.to_character(*out.witness);
  } else if (out.dominant_search_status == EnumerationStatus::UnboundedTruncated) {
    out.decision = Movability::InconclusiveTruncated;
  } else {
    out.decision = Movability::NotMovable;
  }
  return out;
}

Integer box_or_default(const std::optional<Integer>& box) {
  const Integer b = box.value_or(Integer(kDefaultBox));
  if (b <= 0) throw DomainError("the enumeration box must be a positive integer");
  return b;
}

Fan z_fan(const SphericalModel& model, const ColoredFan& cf) {
  auto v = fan_of_Z(model, cf);
  if (!v.valid()) throw ModelError("the colorless cones of the colored fan do not form a fan");
  return std::move(*v.fan);
}

}  // namespace

MovabilityReport movable_divisors_simple(const SphericalModel& model, const ColoredCone& cc,
                                         std::optional<Integer> box) {
  require_horospherical(model, "movable_divisors_simple");
  const auto violations = validate_colored_cone(model, cc, true);
  if (!violations.empty())
    throw ModelError("invalid colored cone " + cc.str() + ": [" + violations.front().axiom + "] " +
                     violations.front().message);
  MovabilityReport report;
  report.box = box_or_default(box);
  // For a single cone the fan condition holds automatically.
  const Fan fan = make_fan({cc.cone}, model.rank());
  for (const auto& d : model.g_divisors) report.divisors.push_back(analyze(model, fan, d, report.box, "the cone"));
  return report;
}

MovabilityReport movable_divisors_complete(const SphericalModel& model, const ColoredFan& cf,
                                           std::optional<Integer> box) {
  require_horospherical(model, "movable_divisors_complete");
  if (!is_complete(model, cf)) throw ModelError("the colored fan is not complete");
  MovabilityReport report;
  report.box = box_or_default(box);
  const Fan fan = z_fan(model, cf);
  for (const auto& d : model.g_divisors)
    report.divisors.push_back(analyze(model, fan, d, report.box, "the fan of Z"));
  return report;
}

WeightClassification classify_weight(const SphericalModel& model, const ColoredFan& cf, const ParabolicData& parabolic,
                                     const LatticeVector& mu) {
  if (mu.size() != model.root_datum.character_rank())
    throw DimensionError("classify_weight: weight " + to_string(mu) + " is not a character of rank " +
                         std::to_string(model.root_datum.character_rank()));
  WeightClassification out;
  out.mu = mu;
  out.m_coordinates = model.to_m_coordinates(mu);
  const Fan fan = z_fan(model, cf);
  if (out.m_coordinates) {
    out.moved_ray = is_demazure_root(fan, *out.m_coordinates);
    out.horizontal = out.moved_ray.has_value();
  }
  const auto gamma_z = [&](const LatticeVector& chi) {
    const auto m = model.to_m_coordinates(chi);
    if (!m) return false;
    return std::all_of(fan.rays().begin(), fan.rays().end(), [&](const IntVector& r) { return pair(r, *m) >= 0; });
  };
  const OmegaMu om = omega_mu(parabolic, mu, model.m_basis, gamma_z);
  out.omega_mu = om.omega_mu;
  out.omega_mu0 = om.omega_mu0;
  out.dominant = is_dominant(model.root_datum, mu);
  return out;
}

WeightClassification classify_weight(const SphericalModel& model, const ColoredCone& cc,
                                     const ParabolicData& parabolic, const LatticeVector& mu) {
  return classify_weight(model, make_colored_fan(model, {cc}), parabolic, mu);
}

DerivationSpec standard_lnd_affine(const SphericalModel& model, const LatticeVector& mu, LndMode mode) {
  require_horospherical(model, "standard_lnd_affine");
  if (mu.size() != model.root_datum.character_rank())
    throw DimensionError("standard_lnd_affine: weight of wrong rank");
  const auto m = model.to_m_coordinates(mu);
  if (!m) throw DomainError("standard_lnd_affine: " + to_string(mu) + " does not lie in M");

  std::vector<IntVector> kappas;
  for (const auto& c : model.colors) kappas.push_back(c.kappa);
  for (const auto& d : model.g_divisors) kappas.push_back(d.kappa);
  const Cone e = cone_from_generators(kappas, model.rank());
  if (!e.is_strictly_convex()) throw DomainError("standard_lnd_affine: the cone E is not strictly convex");
  const Fan fan = make_fan({e}, model.rank());

  const auto rho = is_demazure_root(fan, *m);
  if (!rho) throw DomainError("standard_lnd_affine: " + to_string(mu) + " is not a Demazure root of E");
  if (!is_dominant(model.root_datum, mu)) throw DomainError("standard_lnd_affine: " + to_string(mu) + " is not dominant");
  if (mode == LndMode::GammaO)
    for (const auto& c : model.colors)
      if (pair(c.kappa, *m) < 0)
        throw DomainError("standard_lnd_affine: " + to_string(mu) + " pairs negatively with the color " + c.name);
  return make_derivation(*rho, *m, Rational(1));
}

}  // namespace horo
