// JSON reading and writing for fans, models, algebra elements and reports.
//
// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.  Rationals are
// strings "p/q" (or "p").  Objects are emitted with sorted keys.

#ifndef HORO_IO_HPP
#define HORO_IO_HPP

#include "horo/horospherical.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace horo::io {

using json = nlohmann::json;

/// Malformed input (bad JSON, missing or mistyped fields).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

json parse_json_text(const std::string& text, const std::string& source);
json load_json_file(const std::string& path);

Integer parse_integer(const json& j, const std::string& where);
Rational parse_rational(const json& j, const std::string& where);
IntVector parse_vector(const json& j, const std::string& where);
std::vector<IntVector> parse_vectors(const json& j, Eigen::Index dim, const std::string& where);
/// "1,-2", "(1,-2)", "[1, -2]" or "-1".
IntVector parse_vector_text(const std::string& text);

json to_json(const Integer& x);
json to_json(const Rational& x);
json to_json(const IntVector& v);
json to_json(const std::vector<IntVector>& vs);
/// {"lineality": [...], "rays": [...]}
json to_json(const Cone& c);

/// Fan file: {"rank": n, "cones": [{"generators": [[...], ...], "colors": [...]}, ...]}.
/// "rank" may be omitted when some cone has a generator; "colors" is optional.
struct FanDocument {
  Eigen::Index rank = 0;
  std::vector<ColoredCone> cones;
  bool has_colors() const;
  std::vector<Cone> plain_cones() const;
};
FanDocument parse_fan(const json& j);
json fan_to_json(const FanDocument& doc);

/// Model file: {"root_datum": "A2 + torus 1" or {"type": ..., "torus_rank": k},
/// "M_basis": [...], "colors": [{"name", "kappa", "type"}], "g_divisors": [{"name", "kappa"}],
/// "horospherical": true, "valuation_cone": {"generators": [...]}}.
SphericalModel parse_model(const json& j);
json model_to_json(const SphericalModel& m);

/// [{"weight": [...], "coeff": "p/q"}, ...]
AlgebraElement parse_element(const json& j);
json to_json(const AlgebraElement& a);
/// {"rho": [...], "mu": [...], "c": "p/q"}
DerivationSpec parse_derivation(const json& j);
json to_json(const DerivationSpec& d);

json to_json(const FanValidation& v);
json to_json(const ColoredFanValidation& v);
json to_json(const DemazureRootSet& r);
json to_json(const MovabilityReport& r);
json to_json(const WeightClassification& c);
json to_json(const ParabolicData& p, const RootDatum& rd);
json to_json(const ContractReport& r);

/// Two-space indented dump with a trailing newline.
std::string dump(const json& j);

}  // namespace horo::io

#endif  // HORO_IO_HPP
