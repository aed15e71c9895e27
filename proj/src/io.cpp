#include "horo/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace horo::io {

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field \"" + key + "\"");
  return *it;
}

std::string parse_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a string");
  return j.get<std::string>();
}

json violation_cones(const std::vector<Cone>& cones) {
  json a = json::array();
  for (const auto& c : cones) a.push_back(to_json(c));
  return a;
}

json colored_cone_json(const ColoredCone& cc) {
  json j = to_json(cc.cone);
  j["colors"] = cc.colors;
  return j;
}

}  // namespace

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

Integer parse_integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos) return Integer(s);
  }
  throw InputError(where + ": expected an integer, got " + j.dump());
}

Rational parse_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    const Integer p = parse_integer(json(s.substr(0, slash)), where);
    if (slash == std::string::npos) return Rational(p);
    const Integer q = parse_integer(json(s.substr(slash + 1)), where);
    if (q == 0) throw InputError(where + ": zero denominator");
    return Rational(p, q);
  }
  throw InputError(where + ": expected a rational \"p/q\", got " + j.dump());
}

IntVector parse_vector(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of integers");
  IntVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = parse_integer(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

std::vector<IntVector> parse_vectors(const json& j, Eigen::Index dim, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of vectors");
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    IntVector v = parse_vector(j[i], w);
    if (dim >= 0 && v.size() != dim)
      throw InputError(w + ": vector of length " + std::to_string(v.size()) + ", expected " + std::to_string(dim));
    out.push_back(std::move(v));
  }
  return out;
}

IntVector parse_vector_text(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != '[' && c != ']' && c != ' ') s += c;
  if (s.empty()) throw InputError("empty vector '" + text + "'");
  std::vector<Integer> coords;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) coords.push_back(parse_integer(json(part), "vector '" + text + "'"));
  if (!s.empty() && s.back() == ',') throw InputError("vector '" + text + "': trailing comma");
  return make_vector(coords);
}

json to_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return json(x.convert_to<long long>());
  return json(x.str());
}

json to_json(const Rational& x) { return json(x.str()); }

json to_json(const IntVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_json(v(i)));
  return a;
}

json to_json(const std::vector<IntVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

json to_json(const Cone& c) {
  return json{{"rays", to_json(c.rays())}, {"lineality", to_json(c.lineality())}};
}

bool FanDocument::has_colors() const {
  return std::any_of(cones.begin(), cones.end(), [](const ColoredCone& c) { return !c.colors.empty(); });
}

std::vector<Cone> FanDocument::plain_cones() const {
  std::vector<Cone> out;
  for (const auto& c : cones) out.push_back(c.cone);
  return out;
}

FanDocument parse_fan(const json& j) {
  FanDocument doc;
  const json& cones = field(j, "cones", "fan");
  if (!cones.is_array()) throw InputError("fan.cones: expected an array");
  Eigen::Index rank = -1;
  if (j.contains("rank")) {
    rank = parse_integer(j["rank"], "fan.rank").convert_to<Eigen::Index>();
    if (rank < 0) throw InputError("fan.rank: must be nonnegative");
  } else {
    for (const auto& c : cones)
      if (c.is_object() && c.contains("generators") && c["generators"].is_array() && !c["generators"].empty() &&
          c["generators"][0].is_array()) {
        rank = static_cast<Eigen::Index>(c["generators"][0].size());
        break;
      }
    if (rank < 0) throw InputError("fan: \"rank\" is required when no cone has a generator");
  }
  doc.rank = rank;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const std::string where = "fan.cones[" + std::to_string(i) + "]";
    const auto gens = parse_vectors(field(cones[i], "generators", where), rank, where + ".generators");
    std::vector<std::string> colors;
    if (cones[i].contains("colors")) {
      const json& cj = cones[i]["colors"];
      if (!cj.is_array()) throw InputError(where + ".colors: expected an array of names");
      for (std::size_t k = 0; k < cj.size(); ++k)
        colors.push_back(parse_string(cj[k], where + ".colors[" + std::to_string(k) + "]"));
    }
    doc.cones.emplace_back(cone_from_generators(gens, rank), colors);
  }
  return doc;
}

json fan_to_json(const FanDocument& doc) {
  json cones = json::array();
  for (const auto& cc : doc.cones) {
    json c{{"generators", to_json(cc.cone.generators())}};
    if (!cc.colors.empty()) c["colors"] = cc.colors;
    cones.push_back(c);
  }
  return json{{"rank", doc.rank}, {"cones", cones}};
}

SphericalModel parse_model(const json& j) {
  SphericalModel m;
  const json& rd = field(j, "root_datum", "model");
  try {
    if (rd.is_string()) {
      m.root_datum = build_root_datum(rd.get<std::string>());
    } else {
      const std::string type = parse_string(field(rd, "type", "model.root_datum"), "model.root_datum.type");
      Eigen::Index torus = 0;
      if (rd.contains("torus_rank"))
        torus = parse_integer(rd["torus_rank"], "model.root_datum.torus_rank").convert_to<Eigen::Index>();
      m.root_datum = type.empty() ? build_root_datum("torus " + std::to_string(torus)) : build_root_datum(type, torus);
    }
  } catch (const ModelError& e) {
    throw InputError(std::string("model.root_datum: ") + e.what());
  }
  m.m_basis = parse_vectors(field(j, "M_basis", "model"), m.root_datum.character_rank(), "model.M_basis");
  const Eigen::Index n = m.rank();
  if (j.contains("colors")) {
    const json& cs = j["colors"];
    if (!cs.is_array()) throw InputError("model.colors: expected an array");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string where = "model.colors[" + std::to_string(i) + "]";
      Color c;
      c.name = parse_string(field(cs[i], "name", where), where + ".name");
      c.kappa = parse_vectors(json::array({field(cs[i], "kappa", where)}), n, where + ".kappa").front();
      if (cs[i].contains("type")) {
        try {
          c.type = color_type_from_string(parse_string(cs[i]["type"], where + ".type"));
        } catch (const ModelError& e) {
          throw InputError(where + ".type: " + e.what());
        }
      }
      m.colors.push_back(std::move(c));
    }
  }
  if (j.contains("g_divisors")) {
    const json& gs = j["g_divisors"];
    if (!gs.is_array()) throw InputError("model.g_divisors: expected an array");
    for (std::size_t i = 0; i < gs.size(); ++i) {
      const std::string where = "model.g_divisors[" + std::to_string(i) + "]";
      GDivisor g;
      g.name = parse_string(field(gs[i], "name", where), where + ".name");
      g.kappa = parse_vectors(json::array({field(gs[i], "kappa", where)}), n, where + ".kappa").front();
      m.g_divisors.push_back(std::move(g));
    }
  }
  m.horospherical = true;
  if (j.contains("horospherical")) {
    if (!j["horospherical"].is_boolean()) throw InputError("model.horospherical: expected a boolean");
    m.horospherical = j["horospherical"].get<bool>();
  }
  if (j.contains("valuation_cone")) {
    const auto gens = parse_vectors(field(j["valuation_cone"], "generators", "model.valuation_cone"), n,
                                    "model.valuation_cone.generators");
    m.valuation_cone = cone_from_generators(gens, n);
  } else {
    m.valuation_cone = Cone::whole_space(n);
  }
  validate_model(m);
  return m;
}

json model_to_json(const SphericalModel& m) {
  json colors = json::array();
  for (const auto& c : m.colors)
    colors.push_back({{"name", c.name}, {"kappa", to_json(c.kappa)}, {"type", to_string(c.type)}});
  json g = json::array();
  for (const auto& d : m.g_divisors) g.push_back({{"name", d.name}, {"kappa", to_json(d.kappa)}});
  std::string type;
  for (std::size_t i = 0; i < m.root_datum.components.size(); ++i) type += (i ? "x" : "") + m.root_datum.components[i];
  json out{{"root_datum", {{"type", type}, {"torus_rank", m.root_datum.torus_rank}}},
           {"M_basis", to_json(m.m_basis)},
           {"colors", colors},
           {"g_divisors", g},
           {"horospherical", m.horospherical}};
  if (!m.horospherical) out["valuation_cone"] = {{"generators", to_json(m.valuation_cone.generators())}};
  return out;
}

AlgebraElement parse_element(const json& j) {
  if (!j.is_array()) throw InputError("element: expected an array of terms");
  std::vector<std::pair<IntVector, Rational>> terms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "element[" + std::to_string(i) + "]";
    terms.emplace_back(parse_vector(field(j[i], "weight", where), where + ".weight"),
                       parse_rational(field(j[i], "coeff", where), where + ".coeff"));
  }
  try {
    return AlgebraElement::from_terms(terms);
  } catch (const DimensionError& e) {
    throw InputError(std::string("element: ") + e.what());
  }
}

json to_json(const AlgebraElement& a) {
  json out = json::array();
  for (const auto& [w, c] : a.terms()) out.push_back({{"weight", to_json(w)}, {"coeff", to_json(c)}});
  return out;
}

DerivationSpec parse_derivation(const json& j) {
  DerivationSpec d;
  d.rho = parse_vector(field(j, "rho", "derivation"), "derivation.rho");
  d.mu = parse_vector(field(j, "mu", "derivation"), "derivation.mu");
  d.c = j.contains("c") ? parse_rational(j["c"], "derivation.c") : Rational(1);
  check_derivation(d);
  return d;
}

json to_json(const DerivationSpec& d) {
  return json{{"rho", to_json(d.rho)}, {"mu", to_json(d.mu)}, {"c", to_json(d.c)}};
}

json to_json(const FanValidation& v) {
  json out{{"valid", v.valid()}};
  json vs = json::array();
  for (const auto& x : v.violations)
    vs.push_back({{"axiom", x.axiom}, {"message", x.message}, {"cones", violation_cones(x.cones)}});
  out["violations"] = vs;
  if (v.fan) {
    out["rank"] = v.fan->rank();
    out["rays"] = to_json(v.fan->rays());
    out["cone_count"] = v.fan->cones().size();
    json maximal = json::array();
    for (const auto& c : v.fan->maximal_cones()) maximal.push_back(to_json(c));
    out["maximal_cones"] = maximal;
    out["complete"] = is_complete(*v.fan);
  }
  return out;
}

json to_json(const ColoredFanValidation& v) {
  json out{{"valid", v.valid()}};
  json vs = json::array();
  for (const auto& x : v.violations) {
    json cones = json::array();
    for (const auto& cc : x.cones) cones.push_back(colored_cone_json(cc));
    json e{{"axiom", x.axiom}, {"message", x.message}, {"cones", cones}};
    if (x.witness) e["witness"] = to_json(*x.witness);
    vs.push_back(e);
  }
  out["violations"] = vs;
  if (v.fan) {
    json cones = json::array();
    for (const auto& cc : v.fan->cones) cones.push_back(colored_cone_json(cc));
    out["rank"] = v.fan->rank;
    out["colored_cones"] = cones;
  }
  return out;
}

json to_json(const DemazureRootSet& r) {
  return json{{"ray", to_json(r.ray)},
              {"status", to_string(r.status)},
              {"roots", to_json(r.roots)},
              {"count", r.roots.size()}};
}

json to_json(const MovabilityReport& r) {
  json ds = json::array();
  for (const auto& d : r.divisors) {
    json e{{"divisor", d.divisor}, {"kappa", to_json(d.kappa)}, {"decision", to_string(d.decision)}};
    if (d.decision == Movability::NotApplicable) {
      e["note"] = d.note;
    } else {
      e["root_set_status"] = to_string(d.root_set_status);
      e["roots"] = to_json(d.roots);
      e["dominant_search_status"] = to_string(d.dominant_search_status);
      e["dominant_roots"] = to_json(d.dominant_roots);
      e["witness"] = d.witness ? to_json(*d.witness) : json(nullptr);
      e["witness_character"] = d.witness_character ? to_json(*d.witness_character) : json(nullptr);
    }
    ds.push_back(e);
  }
  return json{{"box", to_json(r.box)}, {"divisors", ds}, {"inconclusive", r.any_inconclusive()}};
}

json to_json(const WeightClassification& c) {
  return json{{"mu", to_json(c.mu)},
              {"in_M", c.m_coordinates.has_value()},
              {"M_coordinates", c.m_coordinates ? to_json(*c.m_coordinates) : json(nullptr)},
              {"horizontal", c.horizontal},
              {"moved_ray", c.moved_ray ? to_json(*c.moved_ray) : json(nullptr)},
              {"omega_mu", to_json(c.omega_mu)},
              {"omega_mu0", to_json(c.omega_mu0)},
              {"dominant", c.dominant}};
}

json to_json(const ParabolicData& p, const RootDatum& rd) {
  json levi = json::array();
  for (auto i : p.levi) levi.push_back(rd.labels[i]);
  json omega = json::array();
  for (const auto& a : p.omega) {
    const auto coeffs = simple_root_coordinates(rd, a);
    omega.push_back({{"weight", to_json(a)}, {"simple_root_coefficients", coeffs ? to_json(*coeffs) : json(nullptr)}});
  }
  return json{{"type", rd.type_label}, {"levi", levi}, {"omega", omega}};
}

json to_json(const ContractReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e{{"property", c.property}, {"passed", c.passed}, {"cases", c.cases}};
    if (!c.passed) e["counterexample"] = c.counterexample;
    checks.push_back(e);
  }
  return json{{"checks", checks}, {"passed", r.passed()}, {"no_coverage", r.no_coverage}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace horo::io
