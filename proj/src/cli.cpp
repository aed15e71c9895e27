#include "horo/cli.hpp"

#include "horo/catalog.hpp"
#include "horo/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace horo::cli {

namespace {

using io::json;

struct Options {
  std::string format = "json";
  std::optional<long> box;
  std::string fan;
  std::string model;
  std::string mu;
  std::string levi;
  std::string type;
  std::string mode = "lambda-plus";
  std::string derivation;
  std::uint64_t seed = 1;
  bool face_closed = false;
  std::string catalog_name;
  std::string dump_dir;
};

// "catalog:NAME" reads a bundled entry, anything else is a file path.
json load(const std::string& path) {
  static const std::string prefix = "catalog:";
  if (path.rfind(prefix, 0) == 0) {
    const auto entry = find_catalog_entry(path.substr(prefix.size()));
    if (!entry) throw io::InputError("no catalog entry named '" + path.substr(prefix.size()) + "'");
    return io::parse_json_text(entry->json_text, path);
  }
  return io::load_json_file(path);
}

Integer box_value(const Options& o) {
  const Integer b(o.box.value_or(kDefaultBox));
  if (b <= 0) throw DomainError("--box must be a positive integer");
  return b;
}

std::vector<std::size_t> parse_levi(const RootDatum& rd, const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part.erase(std::remove(part.begin(), part.end(), ' '), part.end());
    if (!part.empty()) out.push_back(rd.simple_root_index(part));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --levi wins; otherwise a "levi" list stored in the model file.
std::string levi_text(const Options& o, const json& model_json) {
  if (!o.levi.empty() || !model_json.contains("levi")) return o.levi;
  std::string s;
  for (const auto& l : model_json["levi"]) s += (s.empty() ? "" : ",") + l.get<std::string>();
  return s;
}

std::string vectors_str(const std::vector<IntVector>& vs) {
  if (vs.empty()) return "none";
  std::string s;
  for (const auto& v : vs) s += (s.empty() ? "" : " ") + to_string(v);
  return s;
}

void emit(const Options& o, std::ostream& out, const json& j, const std::string& table) {
  if (o.format == "table")
    out << table;
  else
    out << io::dump(j);
}

int cmd_validate(const Options& o, std::ostream& out) {
  const io::FanDocument doc = io::parse_fan(load(o.fan));
  json j;
  std::ostringstream t;
  bool valid = false;
  if (!o.model.empty()) {
    const SphericalModel model = io::parse_model(load(o.model));
    if (doc.rank != model.rank())
      throw DimensionError("fan rank " + std::to_string(doc.rank) + " differs from the model rank " +
                           std::to_string(model.rank()));
    const auto v = validate_colored_fan(model, doc.cones);
    j = io::to_json(v);
    j["kind"] = "colored-fan";
    valid = v.valid();
    t << (valid ? "valid colored fan" : "invalid colored fan") << "\n";
    for (const auto& x : v.violations) {
      t << "  [" << x.axiom << "] " << x.message;
      if (x.witness) t << " (witness " << to_string(*x.witness) << ")";
      t << "\n";
    }
    if (v.fan) t << "  cones: " << v.fan->cones.size() << "\n";
  } else {
    if (doc.has_colors()) throw io::InputError("the fan has colors; pass --model to validate a colored fan");
    const auto v = validate_fan(doc.plain_cones(), doc.rank, !o.face_closed);
    j = io::to_json(v);
    j["kind"] = "fan";
    valid = v.valid();
    t << (valid ? "valid fan" : "invalid fan") << "\n";
    for (const auto& x : v.violations) {
      t << "  [" << x.axiom << "] " << x.message;
      for (const auto& c : x.cones) t << " " << c.str();
      t << "\n";
    }
    if (v.fan)
      t << "  rays: " << vectors_str(v.fan->rays()) << "\n  complete: " << (is_complete(*v.fan) ? "yes" : "no")
        << "\n";
  }
  emit(o, out, j, t.str());
  return valid ? 0 : 2;
}

int cmd_roots(const Options& o, std::ostream& out) {
  const io::FanDocument doc = io::parse_fan(load(o.fan));
  if (doc.has_colors()) throw io::InputError("roots takes an uncolored fan");
  const Fan fan = make_fan(doc.plain_cones(), doc.rank);
  const Integer box = box_value(o);
  const auto sets = demazure_roots(fan, box);
  json rays = json::array();
  std::size_t total = 0;
  bool truncated = false;
  std::ostringstream t;
  t << "box " << box << "\n";
  for (const auto& s : sets) {
    rays.push_back(io::to_json(s));
    total += s.roots.size();
    truncated = truncated || s.status == EnumerationStatus::UnboundedTruncated;
    t << "ray " << to_string(s.ray) << "  " << to_string(s.status) << "  " << s.roots.size() << ": "
      << vectors_str(s.roots) << "\n";
  }
  t << "total " << total << (truncated ? " (within the box)" : "") << "\n";
  emit(o, out, json{{"box", io::to_json(box)}, {"rays", rays}, {"total", total}, {"truncated", truncated}}, t.str());
  return 0;
}

std::string movability_table(const MovabilityReport& r, const std::string& mode) {
  std::ostringstream t;
  t << mode << " embedding, box " << r.box << "\n";
  for (const auto& d : r.divisors) {
    t << d.divisor << "  kappa " << to_string(d.kappa) << "  " << to_string(d.decision);
    if (d.witness) t << "  witness " << to_string(*d.witness) << " = character " << to_string(*d.witness_character);
    if (!d.note.empty()) t << "  (" << d.note << ")";
    t << "\n";
  }
  return t.str();
}

int cmd_movable(const Options& o, std::ostream& out) {
  const SphericalModel model = io::parse_model(load(o.model));
  const io::FanDocument doc = io::parse_fan(load(o.fan));
  if (doc.rank != model.rank()) throw DimensionError("fan rank differs from the model rank");
  const Integer box = box_value(o);
  const bool simple = doc.cones.size() == 1;
  const MovabilityReport r = simple ? movable_divisors_simple(model, doc.cones.front(), box)
                                    : movable_divisors_complete(model, make_colored_fan(model, doc.cones), box);
  const std::string mode = simple ? "simple" : "complete";
  json j = io::to_json(r);
  j["mode"] = mode;
  emit(o, out, j, movability_table(r, mode));
  return r.any_inconclusive() ? 3 : 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const json mj = load(o.model);
  const SphericalModel model = io::parse_model(mj);
  const io::FanDocument doc = io::parse_fan(load(o.fan));
  if (doc.rank != model.rank()) throw DimensionError("fan rank differs from the model rank");
  const ParabolicData pd = parabolic_omega(model.root_datum, parse_levi(model.root_datum, levi_text(o, mj)));
  const LatticeVector mu = io::parse_vector_text(o.mu);
  const auto c = classify_weight(model, make_colored_fan(model, doc.cones), pd, mu);
  json j = io::to_json(c);
  j["parabolic"] = io::to_json(pd, model.root_datum);
  std::ostringstream t;
  t << "mu " << to_string(c.mu) << (c.dominant ? " (dominant)" : "") << "\n";
  t << "in M: " << (c.m_coordinates ? "yes, " + to_string(*c.m_coordinates) : std::string("no")) << "\n";
  t << "horizontal: " << (c.horizontal ? "yes, moves the ray " + to_string(*c.moved_ray) : std::string("no")) << "\n";
  t << "Omega_mu: " << vectors_str(c.omega_mu) << "\nOmega_mu^0: " << vectors_str(c.omega_mu0) << "\n";
  emit(o, out, j, t.str());
  return 0;
}

Rational random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 3), den(1, 3), sign(0, 1);
  return Rational(sign(rng) ? num(rng) : -num(rng), den(rng));
}

// Sums of up to three monomials whose weights come from `weight`.
template <class WeightFn>
std::vector<AlgebraElement> random_samples(std::mt19937_64& rng, WeightFn weight, std::size_t count) {
  std::uniform_int_distribution<int> terms(1, 3);
  std::vector<AlgebraElement> out;
  for (std::size_t i = 0; i < count; ++i) {
    AlgebraElement a;
    for (int k = terms(rng); k > 0; --k) a.add_term(weight(), random_coefficient(rng));
    if (!a.is_zero()) out.push_back(std::move(a));
  }
  return out;
}

int cmd_lnd_verify(const Options& o, std::ostream& out) {
  constexpr std::size_t kSamples = 6;
  std::mt19937_64 rng(o.seed);
  DerivationSpec d;
  std::vector<AlgebraElement> samples;
  json j;
  if (!o.derivation.empty()) {
    if (!o.model.empty() || !o.mu.empty()) throw io::InputError("--derivation excludes --model and --mu");
    const json dj = load(o.derivation);
    d = io::parse_derivation(dj);
    if (dj.contains("samples")) {
      for (const auto& s : dj["samples"]) samples.push_back(io::parse_element(s));
    } else {
      // Weights in [-3,3]^n on which the derivation is nilpotent.
      std::uniform_int_distribution<long> coord(-3, 3);
      const auto weight = [&] {
        for (;;) {
          IntVector w(d.rho.size());
          for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = coord(rng);
          if (pair(d.rho, w) >= 0) return w;
        }
      };
      samples = random_samples(rng, weight, kSamples);
    }
  } else {
    if (o.model.empty() || o.mu.empty()) throw io::InputError("lnd-verify needs --derivation, or --model with --mu");
    const SphericalModel model = io::parse_model(load(o.model));
    const LndMode mode = lnd_mode_from_string(o.mode);
    d = standard_lnd_affine(model, io::parse_vector_text(o.mu), mode);
    j["mode"] = to_string(mode);
    const auto basis = weight_monoid(model);
    std::uniform_int_distribution<long> mult(0, 2);
    const auto weight = [&] {
      IntVector w = IntVector::Constant(model.rank(), Integer(0));
      for (const auto& h : basis) w += h * Integer(mult(rng));
      return w;
    };
    samples = random_samples(rng, weight, kSamples);
  }
  const ContractReport r = check_contract(d, samples);
  j["derivation"] = io::to_json(d);
  j["seed"] = o.seed;
  j["samples"] = samples.size();
  j["report"] = io::to_json(r);
  std::ostringstream t;
  t << "derivation rho " << to_string(d.rho) << " mu " << to_string(d.mu) << " c " << d.c << "\n";
  t << "seed " << o.seed << ", " << samples.size() << " samples\n";
  for (const auto& c : r.checks) {
    t << "  " << c.property << ": " << (c.passed ? "pass" : "FAIL") << " (" << c.cases << " cases)";
    if (!c.passed) t << "  " << c.counterexample;
    t << "\n";
  }
  t << (r.passed() ? "contract holds" : "contract violated") << (r.no_coverage ? " (no coverage)" : "") << "\n";
  emit(o, out, j, t.str());
  return r.passed() ? 0 : 2;
}

int cmd_omega(const Options& o, std::ostream& out) {
  if (o.type.empty() == o.model.empty()) throw io::InputError("omega needs exactly one of --type and --model");
  std::optional<SphericalModel> model;
  RootDatum rd;
  std::string levi = o.levi;
  if (!o.model.empty()) {
    const json mj = load(o.model);
    model = io::parse_model(mj);
    rd = model->root_datum;
    levi = levi_text(o, mj);
  } else {
    rd = build_root_datum(o.type);
  }
  const ParabolicData pd = parabolic_omega(rd, parse_levi(rd, levi));
  json j = io::to_json(pd, rd);
  std::ostringstream t;
  t << "type " << rd.type_label << ", Omega: " << vectors_str(pd.omega) << "\n";
  if (!o.mu.empty()) {
    const LatticeVector mu = io::parse_vector_text(o.mu);
    if (mu.size() != rd.character_rank()) throw DimensionError("--mu has the wrong rank");
    j["mu"] = io::to_json(mu);
    if (!o.fan.empty()) {
      if (!model) throw io::InputError("--fan needs --model");
      const io::FanDocument doc = io::parse_fan(load(o.fan));
      const auto c = classify_weight(*model, make_colored_fan(*model, doc.cones), pd, mu);
      j["omega_mu"] = io::to_json(c.omega_mu);
      j["omega_mu0"] = io::to_json(c.omega_mu0);
      t << "Omega_mu: " << vectors_str(c.omega_mu) << "\nOmega_mu^0: " << vectors_str(c.omega_mu0) << "\n";
    } else {
      std::vector<LatticeVector> m_basis;
      if (model) {
        m_basis = model->m_basis;
      } else {
        for (Eigen::Index i = 0; i < rd.character_rank(); ++i) {
          IntVector e = IntVector::Constant(rd.character_rank(), Integer(0));
          e(i) = 1;
          m_basis.push_back(e);
        }
      }
      const auto om = omega_mu(pd, mu, m_basis, [](const LatticeVector&) { return true; });
      j["omega_mu"] = io::to_json(om.omega_mu);
      t << "Omega_mu: " << vectors_str(om.omega_mu) << "\n";
    }
  }
  emit(o, out, j, t.str());
  return 0;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  if (!o.dump_dir.empty()) {
    std::filesystem::create_directories(o.dump_dir);
    for (const auto& e : catalog()) {
      const auto path = std::filesystem::path(o.dump_dir) / (e.name + ".json");
      std::ofstream f(path);
      if (!f) throw io::InputError("cannot write '" + path.string() + "'");
      f << e.json_text << "\n";
      out << path.string() << "\n";
    }
    return 0;
  }
  if (!o.catalog_name.empty()) {
    const auto e = find_catalog_entry(o.catalog_name);
    if (!e) throw io::InputError("no catalog entry named '" + o.catalog_name + "'");
    out << e->json_text << "\n";
    return 0;
  }
  json list = json::array();
  std::ostringstream t;
  for (const auto& e : catalog()) {
    list.push_back({{"name", e.name}, {"kind", e.kind}, {"description", e.description}});
    t << e.kind << std::string(7 - e.kind.size(), ' ') << e.name << std::string(e.name.size() < 16 ? 16 - e.name.size() : 1, ' ') << e.description
      << "\n";
  }
  emit(o, out, list, t.str());
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Demazure roots, colored fans and movable divisors of horospherical varieties", "horo"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->envname("HORO_FORMAT")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--box", o.box, "Half-width of the enumeration box for unbounded searches (default 16)")
      ->envname("HORO_BOX");

  const std::string input_help = "JSON file, or catalog:NAME";
  auto* validate = app.add_subcommand("validate", "Check the fan or colored fan axioms");
  validate->add_option("--fan", o.fan, input_help)->required();
  validate->add_option("--model", o.model, "Spherical model; the fan is then read as a colored fan");
  validate->add_flag("--face-closed", o.face_closed, "Report missing faces instead of adding them");

  auto* roots = app.add_subcommand("roots", "Demazure roots at every ray of a fan");
  roots->add_option("--fan", o.fan, input_help)->required();

  auto* movable = app.add_subcommand("movable", "Which G-stable divisors are moved by B-root subgroups");
  movable->add_option("--model", o.model, input_help)->required();
  movable->add_option("--fan", o.fan, "A single colored cone (simple case) or a complete colored fan")->required();

  auto* classify = app.add_subcommand("classify", "Classify a weight against a colored fan");
  classify->add_option("--model", o.model, input_help)->required();
  classify->add_option("--fan", o.fan, input_help)->required();
  classify->add_option("--mu", o.mu, "Character, e.g. \"1,-2\"")->required();
  classify->add_option("--levi", o.levi, "Simple roots of the Levi, e.g. \"a1,a3\"");

  auto* lnd = app.add_subcommand("lnd-verify", "Check the derivation contract on sample elements");
  lnd->add_option("--derivation", o.derivation, "{\"rho\", \"mu\", \"c\", \"samples\"?}");
  lnd->add_option("--model", o.model, "Affine horospherical model for the standard derivation");
  lnd->add_option("--mu", o.mu, "Character of the standard derivation");
  lnd->add_option("--mode", o.mode, "Weight condition")->check(CLI::IsMember({"lambda-plus", "gamma-o"}));
  lnd->add_option("--seed", o.seed, "Seed for the random samples (default 1)");

  auto* omega = app.add_subcommand("omega", "Omega, Omega_mu and Omega_mu^0 for a parabolic");
  omega->add_option("--type", o.type, "Root datum, e.g. \"A2\"");
  omega->add_option("--model", o.model, input_help);
  omega->add_option("--levi", o.levi, "Simple roots of the Levi, e.g. \"a1\"");
  omega->add_option("--mu", o.mu, "Character");
  omega->add_option("--fan", o.fan, "Colored fan, needed for Omega_mu^0");

  auto* cat = app.add_subcommand("catalog", "List, print or write out the bundled examples");
  cat->add_option("name", o.catalog_name, "Entry to print");
  cat->add_option("--dump", o.dump_dir, "Write every entry to DIR/NAME.json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (roots->parsed()) return cmd_roots(o, out);
    if (movable->parsed()) return cmd_movable(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (lnd->parsed()) return cmd_lnd_verify(o, out);
    if (omega->parsed()) return cmd_omega(o, out);
    if (cat->parsed()) return cmd_catalog(o, out);
  } catch (const io::InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::logic_error& e) {  // DimensionError, DomainError
    err << "error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {  // ModelError, UnboundedError, filesystem errors
    err << "error: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace horo::cli
