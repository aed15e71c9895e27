#include "horo/root_datum.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace horo {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_product(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (c == 'x' || c == 'X' || c == '*') {
      parts.push_back(trim(cur));
      cur.clear();
    } else if (c == 0xC3 && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0x97) {
      parts.push_back(trim(cur));  // U+00D7 multiplication sign
      cur.clear();
      ++i;
    } else {
      cur += s[i];
    }
  }
  parts.push_back(trim(cur));
  return parts;
}

// Gram matrix of the simple roots of one factor, scaled to integers.
IntMatrix simple_gram(char family, int n) {
  IntMatrix b = IntMatrix::Zero(n, n);
  auto link = [&](int i, int j, long v) {
    b(i - 1, j - 1) = v;
    b(j - 1, i - 1) = v;
  };
  switch (family) {
    case 'A':
      for (int i = 1; i <= n; ++i) b(i - 1, i - 1) = 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 1; i < n; ++i) b(i - 1, i - 1) = 4;
      b(n - 1, n - 1) = 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, -2);
      break;
    case 'C':
      for (int i = 1; i < n; ++i) b(i - 1, i - 1) = 2;
      b(n - 1, n - 1) = 4;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 1, n, -2);
      break;
    case 'D':
      for (int i = 1; i <= n; ++i) b(i - 1, i - 1) = 2;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 2, n, -1);
      break;
    case 'E':
      for (int i = 1; i <= n; ++i) b(i - 1, i - 1) = 2;
      link(1, 3, -1);
      link(2, 4, -1);
      for (int i = 3; i < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      b(0, 0) = b(1, 1) = 4;
      b(2, 2) = b(3, 3) = 2;
      link(1, 2, -2);
      link(2, 3, -2);
      link(3, 4, -1);
      break;
    case 'G':
      b(0, 0) = 2;
      b(1, 1) = 6;
      link(1, 2, -3);
      break;
    default:
      break;
  }
  return b;
}

bool valid_factor(char family, int n) {
  switch (family) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 2;
    case 'D': return n >= 3;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

}  // namespace

std::size_t RootDatum::simple_root_index(const std::string& name) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == name) return i;
  if (!name.empty() && std::all_of(name.begin(), name.end(), [](unsigned char c) { return std::isdigit(c); })) {
    const std::size_t k = std::stoul(name);
    if (k >= 1 && k <= labels.size()) return k - 1;
  }
  throw ModelError("unknown simple root '" + name + "' for type " + type_label);
}

RootDatum build_root_datum(const std::string& type, Eigen::Index torus_rank) {
  RootDatum rd = build_root_datum(type);
  if (rd.torus_rank != 0 && torus_rank != 0)
    throw ModelError("torus rank given twice for type '" + type + "'");
  if (torus_rank < 0) throw ModelError("negative torus rank");
  if (torus_rank == 0) return rd;
  return build_root_datum(trim(type) + " + torus " + std::to_string(torus_rank));
}

RootDatum build_root_datum(const std::string& type) {
  std::vector<std::pair<char, int>> factors;
  Eigen::Index torus = 0;
  bool torus_seen = false;
  std::stringstream ss(type);
  std::string chunk;
  while (std::getline(ss, chunk, '+')) {
    chunk = trim(chunk);
    if (chunk.empty()) throw ModelError("malformed root datum type '" + type + "'");
    if (chunk.rfind("torus", 0) == 0) {
      const std::string k = trim(chunk.substr(5));
      if (torus_seen || k.empty() ||
          !std::all_of(k.begin(), k.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ModelError("malformed torus part in '" + type + "'");
      torus = std::stol(k);
      torus_seen = true;
      continue;
    }
    for (const auto& f : split_product(chunk)) {
      if (f.size() < 2 || !std::all_of(f.begin() + 1, f.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ModelError("unknown Cartan type '" + f + "' in '" + type + "'");
      const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(f[0])));
      const int n = std::stoi(f.substr(1));
      if (!valid_factor(family, n)) throw ModelError("unknown Cartan type '" + f + "'");
      if (n > 0) factors.emplace_back(family, n);
    }
  }

  RootDatum rd;
  for (const auto& [fam, n] : factors) {
    rd.components.push_back(std::string(1, fam) + std::to_string(n));
    rd.semisimple_rank += n;
  }
  rd.torus_rank = torus;
  {
    std::string label;
    for (std::size_t i = 0; i < rd.components.size(); ++i) label += (i ? "x" : "") + rd.components[i];
    if (label.empty())
      label = "torus " + std::to_string(torus);
    else if (torus > 0)
      label += " + torus " + std::to_string(torus);
    rd.type_label = label;
  }

  const Eigen::Index s = rd.semisimple_rank;
  rd.cartan = IntMatrix::Zero(s, s);
  Eigen::Index off = 0;
  for (const auto& [fam, n] : factors) {
    const IntMatrix b = simple_gram(fam, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rd.cartan(off + i, off + j) = 2 * b(i, j) / b(j, j);
    off += n;
  }
  const Eigen::Index r = rd.character_rank();
  for (Eigen::Index j = 0; j < s; ++j) {
    IntVector alpha = IntVector::Zero(r);
    for (Eigen::Index i = 0; i < s; ++i) alpha(i) = rd.cartan(j, i);
    rd.simple_roots.push_back(alpha);
    rd.coroots.push_back(unit_vector(r, j));
    rd.labels.push_back("a" + std::to_string(j + 1));
  }
  return rd;
}

bool is_dominant(const RootDatum& rd, const LatticeVector& mu) {
  if (mu.size() != rd.character_rank())
    throw DimensionError("is_dominant: weight of rank " + std::to_string(mu.size()) + ", expected " +
                         std::to_string(rd.character_rank()));
  for (const auto& c : rd.coroots)
    if (pair(c, mu) < 0) return false;
  return true;
}

std::vector<IntVector> positive_root_coefficients(const RootDatum& rd) {
  const Eigen::Index s = rd.semisimple_rank;
  std::set<IntVector, LexLess> known;
  std::vector<IntVector> layer, out;
  for (Eigen::Index i = 0; i < s; ++i) layer.push_back(unit_vector(s, i));
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), LexLess{});
    for (const auto& b : layer) {
      known.insert(b);
      out.push_back(b);
    }
    std::set<IntVector, LexLess> next;
    for (const auto& beta : layer)
      for (Eigen::Index i = 0; i < s; ++i) {
        Integer p = 0;
        for (IntVector down = beta - unit_vector(s, i); known.count(down); down -= unit_vector(s, i)) p += 1;
        Integer pairing = 0;
        for (Eigen::Index j = 0; j < s; ++j) pairing += beta(j) * rd.cartan(j, i);
        if (p - pairing > 0) next.insert(IntVector(beta + unit_vector(s, i)));
      }
    layer.assign(next.begin(), next.end());
  }
  return out;
}

std::vector<LatticeVector> positive_roots(const RootDatum& rd) {
  std::vector<LatticeVector> out;
  for (const auto& c : positive_root_coefficients(rd)) {
    IntVector v = IntVector::Zero(rd.character_rank());
    for (Eigen::Index j = 0; j < c.size(); ++j) v += c(j) * rd.simple_roots[static_cast<std::size_t>(j)];
    out.push_back(v);
  }
  return out;
}

std::optional<IntVector> simple_root_coordinates(const RootDatum& rd, const LatticeVector& beta) {
  if (beta.size() != rd.character_rank()) throw DimensionError("simple_root_coordinates: rank mismatch");
  if (rd.simple_roots.empty()) return is_zero(beta) ? std::optional<IntVector>(IntVector(0)) : std::nullopt;
  return lattice_coordinates(columns_matrix(rd.simple_roots, rd.character_rank()), beta);
}

ParabolicData parabolic_omega(const RootDatum& rd, const std::vector<std::size_t>& levi) {
  const auto s = static_cast<std::size_t>(rd.semisimple_rank);
  std::vector<bool> in_levi(s, false);
  for (auto i : levi) {
    if (i >= s) throw DomainError("parabolic_omega: simple root index out of range");
    in_levi[i] = true;
  }
  const auto coeffs = positive_root_coefficients(rd);
  const auto roots = positive_roots(rd);
  const std::set<IntVector, LexLess> positive(coeffs.begin(), coeffs.end());

  ParabolicData pd;
  pd.levi = levi;
  std::sort(pd.levi.begin(), pd.levi.end());
  pd.levi.erase(std::unique(pd.levi.begin(), pd.levi.end()), pd.levi.end());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const IntVector& c = coeffs[k];
    bool in_l = true;
    for (std::size_t i = 0; i < s; ++i)
      if (c(static_cast<Eigen::Index>(i)) != 0 && !in_levi[i]) in_l = false;
    if (in_l) continue;
    bool highest = true;
    for (std::size_t i = 0; i < s && highest; ++i)
      if (in_levi[i] && positive.count(IntVector(c + unit_vector(c.size(), static_cast<Eigen::Index>(i)))))
        highest = false;
    if (highest) pd.omega.push_back(roots[k]);
  }
  return pd;
}

OmegaMu omega_mu(const ParabolicData& pd, const LatticeVector& mu, const std::vector<LatticeVector>& m_basis,
                 const std::function<bool(const LatticeVector&)>& gamma_z) {
  OmegaMu out;
  for (const auto& alpha : pd.omega) {
    if (alpha.size() != mu.size()) throw DimensionError("omega_mu: rank mismatch");
    const IntVector diff = mu - alpha;
    if (!lattice_membership(m_basis, diff)) continue;
    out.omega_mu.push_back(alpha);
    if (gamma_z(diff)) out.omega_mu0.push_back(alpha);
  }
  return out;
}

}  // namespace horo
