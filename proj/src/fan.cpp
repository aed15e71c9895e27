#include "horo/fan.hpp"

#include <algorithm>
#include <set>

namespace horo {

std::vector<Cone> Fan::maximal_cones() const {
  std::vector<Cone> out;
  for (const auto& c : cones_) {
    bool maximal = true;
    for (const auto& d : cones_)
      if (!(c == d) && d.contains(c)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(c);
  }
  return out;
}

bool Fan::contains_cone(const Cone& c) const { return std::binary_search(cones_.begin(), cones_.end(), c); }

bool Fan::has_ray(const IntVector& rho) const {
  return std::binary_search(rays_.begin(), rays_.end(), rho, LexLess{});
}

FanValidation validate_fan(const std::vector<Cone>& input, Eigen::Index rank, bool close_faces) {
  FanValidation result;
  for (const auto& c : input)
    if (c.ambient_dim() != rank)
      throw DimensionError("validate_fan: cone of rank " + std::to_string(c.ambient_dim()) +
                           " in a fan of rank " + std::to_string(rank));

  std::vector<Cone> given = input;
  std::sort(given.begin(), given.end());
  given.erase(std::unique(given.begin(), given.end()), given.end());
  if (given.empty()) given.push_back(Cone::zero(rank));

  for (const auto& c : given)
    if (!c.is_strictly_convex())
      result.violations.push_back({"convexity", "cone " + c.str() + " contains a line", {c}});

  const std::set<Cone> members(given.begin(), given.end());
  std::set<Cone> closed = members;
  for (const auto& c : given) {
    if (!c.is_strictly_convex()) continue;
    for (const auto& f : faces(c)) {
      if (close_faces) {
        closed.insert(f);
      } else if (!members.count(f)) {
        result.violations.push_back(
            {"F1", "face " + f.str() + " of " + c.str() + " is not a member", {c, f}});
      }
    }
  }

  for (std::size_t i = 0; i < given.size(); ++i)
    for (std::size_t j = i + 1; j < given.size(); ++j) {
      const Cone& a = given[i];
      const Cone& b = given[j];
      if (!a.is_strictly_convex() || !b.is_strictly_convex()) continue;
      const Cone meet = intersect(a, b);
      if (!face_test(meet, a) || !face_test(meet, b))
        result.violations.push_back({"F2",
                                     "cones " + a.str() + " and " + b.str() + " meet in " + meet.str() +
                                         ", which is not a face of both",
                                     {a, b}});
    }

  if (!result.violations.empty()) return result;
  Fan fan;
  fan.rank_ = rank;
  fan.cones_.assign(closed.begin(), closed.end());
  for (const auto& c : fan.cones_)
    if (c.dim() == 1) fan.rays_.push_back(c.rays().front());
  std::sort(fan.rays_.begin(), fan.rays_.end(), LexLess{});
  result.fan = std::move(fan);
  return result;
}

Fan make_fan(const std::vector<Cone>& maximal_cones, Eigen::Index rank) {
  auto v = validate_fan(maximal_cones, rank, true);
  if (!v.valid()) {
    std::string msg = "invalid fan:";
    for (const auto& x : v.violations) msg += " [" + x.axiom + "] " + x.message + ";";
    throw ModelError(msg);
  }
  return std::move(*v.fan);
}

bool is_complete(const Fan& fan) {
  const auto maximal = fan.maximal_cones();
  if (fan.rank() == 0) return true;
  for (const auto& c : maximal)
    if (!c.is_full_dimensional()) return false;
  for (const auto& c : maximal)
    for (const auto& facet : facet_cones(c)) {
      int shared = 0;
      for (const auto& d : maximal)
        if (d.contains(facet)) ++shared;
      if (shared != 2) return false;
    }
  return true;
}

Polyhedron demazure_polyhedron(const Fan& fan, const IntVector& rho) {
  Polyhedron p;
  p.dim = fan.rank();
  p.equalities.push_back({rho, Integer(1)});
  for (const auto& r : fan.rays())
    if (!equal(r, rho)) p.inequalities.push_back({r, Integer(0)});
  return p;
}

bool satisfies_fan_condition(const Fan& fan, const IntVector& rho, const IntVector& mu) {
  for (const auto& c : fan.cones()) {
    bool orthogonal = true;
    for (const auto& r : c.rays())
      if (pair(r, mu) != 0) {
        orthogonal = false;
        break;
      }
    if (orthogonal && !fan.contains_cone(extend(c, rho))) return false;
  }
  return true;
}

DemazureRootSet demazure_roots_at(const Fan& fan, const IntVector& rho, std::optional<Integer> box) {
  if (rho.size() != fan.rank()) throw DimensionError("demazure_roots_at: rank mismatch");
  if (!fan.has_ray(rho)) throw DomainError("demazure_roots_at: " + to_string(rho) + " is not a ray of the fan");
  DemazureRootSet out;
  out.ray = rho;
  out.defining_polyhedron = demazure_polyhedron(fan, rho);
  const LatticePointSet pts = lattice_points(out.defining_polyhedron, box);
  out.status = pts.status == EnumerationStatus::UnboundedTruncated ? EnumerationStatus::UnboundedTruncated
                                                                   : EnumerationStatus::BoundedComplete;
  for (const auto& mu : pts.points)
    if (satisfies_fan_condition(fan, rho, mu)) out.roots.push_back(mu);
  return out;
}

std::vector<DemazureRootSet> demazure_roots(const Fan& fan, std::optional<Integer> box) {
  std::vector<DemazureRootSet> out;
  for (const auto& rho : fan.rays()) out.push_back(demazure_roots_at(fan, rho, box));
  return out;
}

std::optional<IntVector> is_demazure_root(const Fan& fan, const IntVector& mu) {
  if (mu.size() != fan.rank()) throw DimensionError("is_demazure_root: rank mismatch");
  std::optional<IntVector> found;
  for (const auto& r : fan.rays()) {
    const Integer v = pair(r, mu);
    if (v < -1) return std::nullopt;
    if (v == -1) {
      if (found) return std::nullopt;
      found = r;
    }
  }
  if (found && !satisfies_fan_condition(fan, *found, mu)) return std::nullopt;
  return found;
}

}  // namespace horo
