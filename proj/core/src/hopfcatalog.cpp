#include "topo/hopfcatalog.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "topo/error.hpp"

namespace topo {

namespace {

constexpr std::size_t kMaxGenerators = 64;

void require_bitmask_rank(const ExteriorModel& m) {
  if (m.rank() > kMaxGenerators) fail(ErrorKind::RangeError, "too many generators for symbolic work");
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

// y_a · y_b for monomials a, b: zero on overlap, else the sign of moving
// each factor of b past the larger factors of a.
int monomial_sign(std::uint64_t a, std::uint64_t b) {
  if (a & b) return 0;
  int swaps = 0;
  for (std::uint64_t rest = b; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    const std::uint64_t above = j == 63 ? 0 : a & (~std::uint64_t{0} << (j + 1));
    swaps += std::popcount(above);
  }
  return swaps % 2 == 0 ? 1 : -1;
}

void add_term(ExteriorElement& x, std::uint64_t mono, const Integer& c) {
  if (sgn(c) == 0) return;
  Integer& slot = x[mono];
  slot += c;
  if (sgn(slot) == 0) x.erase(mono);
}

ExteriorElement unit_element() { return {{0, Integer(1)}}; }

// Image of a monomial under the algebra map with the given generator images.
ExteriorElement apply_map(const ExteriorModel& m, const std::vector<ExteriorElement>& images, std::uint64_t mono) {
  ExteriorElement out = unit_element();
  for (std::uint64_t rest = mono; rest; rest &= rest - 1) {
    out = exterior_multiply(m, out, images[static_cast<std::size_t>(std::countr_zero(rest))]);
  }
  return out;
}

std::vector<int> odd_range(int first, int last, int step) {
  std::vector<int> out;
  for (int d = first; d <= last; d += step) out.push_back(d);
  return out;
}

}  // namespace

ExteriorModel::ExteriorModel(std::vector<int> degrees, std::string label)
    : degrees_(std::move(degrees)), label_(std::move(label)) {
  for (int d : degrees_) {
    if (d <= 0 || d % 2 == 0) fail(ErrorKind::RangeError, "generator degree " + std::to_string(d) + " is not odd positive");
  }
  std::sort(degrees_.begin(), degrees_.end());
}

long long ExteriorModel::dimension() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), 0LL);
}

ExteriorModel tensor(const ExteriorModel& a, const ExteriorModel& b) {
  std::vector<int> d = a.degrees();
  d.insert(d.end(), b.degrees().begin(), b.degrees().end());
  std::string label = a.label().empty() ? b.label() : b.label().empty() ? a.label() : a.label() + " x " + b.label();
  return ExteriorModel(std::move(d), std::move(label));
}

std::vector<Integer> poincare_polynomial(const ExteriorModel& m) {
  std::vector<Integer> p(static_cast<std::size_t>(m.dimension()) + 1, Integer(0));
  p[0] = 1;
  long long top = 0;
  for (int g : m.degrees()) {
    for (long long k = top; k >= 0; --k) p[static_cast<std::size_t>(k + g)] += p[static_cast<std::size_t>(k)];
    top += g;
  }
  return p;
}

PowerMapTrace power_map_trace(const ExteriorModel& m, long l) {
  require_bitmask_rank(m);
  if (m.rank() > 30) fail(ErrorKind::RangeError, "too many generators to enumerate monomials");
  const std::size_t r = m.rank();
  // (p_l)* multiplies a monomial of length len by l^len.
  std::vector<Integer> powers(r + 1);
  powers[0] = 1;
  for (std::size_t i = 1; i <= r; ++i) powers[i] = powers[i - 1] * l;
  PowerMapTrace t;
  t.enumerated = 0;
  for (std::uint64_t mono = 0; mono < (std::uint64_t{1} << r); ++mono) {
    long long deg = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (mono >> i & 1) deg += m.degrees()[i];
    }
    const Integer& term = powers[static_cast<std::size_t>(std::popcount(mono))];
    if (deg % 2 == 0) {
      t.enumerated += term;
    } else {
      t.enumerated -= term;
    }
  }
  t.closed_form = ipow(Integer(1 - l), r);
  return t;
}

Integer power_map_lefschetz(const ExteriorModel& m, long l) {
  const PowerMapTrace t = power_map_trace(m, l);
  if (!t.agree()) fail(ErrorKind::InternalMismatch, "power map trace disagrees with (1-l)^r");
  return t.enumerated;
}

std::string format_element(const ExteriorModel& m, const ExteriorElement& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : x) {
    const bool negative = sgn(c) < 0;
    const Integer a = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string word;
    for (std::size_t i = 0; i < m.rank(); ++i) {
      if (mono >> i & 1) {
        if (!word.empty()) word += '^';
        word += "y" + std::to_string(i + 1);
      }
    }
    if (word.empty()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str();
      os << word;
    }
  }
  return os.str();
}

std::string TensorExpression::to_string(const ExteriorModel& m) const {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const TensorTerm& t = terms[k];
    const std::string left = format_element(m, {{t.left, Integer(1)}});
    const std::string right = format_element(m, {{t.right, Integer(1)}});
    std::string c = t.coefficient == 1 ? "" : t.coefficient == -1 ? "-" : t.coefficient.get_str();
    out += (k ? " + " : "") + c + left + "(x)" + right;
  }
  return out;
}

TensorExpression comultiplication_primitive(const ExteriorModel& m, std::size_t i) {
  require_bitmask_rank(m);
  if (i >= m.rank()) fail(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(i) + " out of range");
  const std::uint64_t y = std::uint64_t{1} << i;
  return {{{Integer(1), y, 0}, {Integer(1), 0, y}}};
}

ExteriorElement exterior_multiply(const ExteriorModel& m, const ExteriorElement& a, const ExteriorElement& b) {
  require_bitmask_rank(m);
  ExteriorElement out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      const int s = monomial_sign(ma, mb);
      if (s != 0) add_term(out, ma | mb, s > 0 ? Integer(ca * cb) : Integer(-ca * cb));
    }
  }
  return out;
}

ExteriorElement power_map_on_primitive(const ExteriorModel& m, std::size_t i, long k) {
  require_bitmask_rank(m);
  if (i >= m.rank()) fail(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(i) + " out of range");
  const std::size_t r = m.rank();
  auto generator = [](std::size_t j, long c) { return ExteriorElement{{std::uint64_t{1} << j, Integer(c)}}; };

  // q* on generators: identity when stepping up, inversion when stepping down.
  std::vector<ExteriorElement> q(r);
  for (std::size_t j = 0; j < r; ++j) q[j] = generator(j, k >= 0 ? 1 : -1);
  // p_0 is constant, so (p_0)* kills every positive-degree class.
  std::vector<ExteriorElement> p(r);
  for (long step = 0; step < std::labs(k); ++step) {
    std::vector<ExteriorElement> next(r);
    for (std::size_t j = 0; j < r; ++j) {
      // Δ*((p*⊗q*)(μ* y_j))
      for (const TensorTerm& t : comultiplication_primitive(m, j).terms) {
        const ExteriorElement prod = exterior_multiply(m, apply_map(m, p, t.left), apply_map(m, q, t.right));
        for (const auto& [mono, c] : prod) add_term(next[j], mono, t.coefficient * c);
      }
    }
    p = std::move(next);
  }
  return p[i];
}

PrimitivePowerCheck check_primitive_power_maps(const ExteriorModel& m, long bound) {
  PrimitivePowerCheck check;
  check.bound = bound;
  for (std::size_t i = 0; i < m.rank(); ++i) {
    for (long k = -bound; k <= bound; ++k) {
      ExteriorElement expected;
      add_term(expected, std::uint64_t{1} << i, Integer(k));
      const ExteriorElement got = power_map_on_primitive(m, i, k);
      ++check.checked;
      if (got != expected) {
        check.failures.push_back("(p_" + std::to_string(k) + ")*(y" + std::to_string(i + 1) +
                                 ") = " + format_element(m, got));
      }
    }
  }
  return check;
}

LieType parse_lie_type(std::string_view text) {
  static const std::pair<std::string_view, LieType> names[] = {
      {"A", LieType::A},   {"B", LieType::B},   {"C", LieType::C},   {"D", LieType::D},  {"E6", LieType::E6},
      {"E7", LieType::E7}, {"E8", LieType::E8}, {"F4", LieType::F4}, {"G2", LieType::G2}};
  for (const auto& [name, t] : names) {
    if (name == text) return t;
  }
  fail(ErrorKind::ParseError, "unknown Lie type '" + std::string(text) + "'");
}

std::string to_string(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::E6: return "E6";
    case LieType::E7: return "E7";
    case LieType::E8: return "E8";
    case LieType::F4: return "F4";
    case LieType::G2: return "G2";
  }
  return "?";
}

bool has_parameter(LieType t) {
  return t == LieType::A || t == LieType::B || t == LieType::C || t == LieType::D;
}

std::string CatalogEntry::name() const {
  return has_parameter(type) ? to_string(type) + "_" + std::to_string(l) : to_string(type);
}

CatalogEntry catalog(LieType type, int l, bool strict) {
  CatalogEntry e;
  e.type = type;
  e.strict = strict;
  std::vector<int> degrees;
  auto need = [&](int least) {
    if (l < least) {
      fail(ErrorKind::RangeError, "type " + to_string(type) + " needs l >= " + std::to_string(least));
    }
  };
  switch (type) {
    case LieType::A:
      need(1);
      degrees = odd_range(3, 2 * l + 1, 2);
      e.dim = static_cast<long long>(l) * (l + 2);
      e.rank = l;
      break;
    case LieType::B:
    case LieType::C:
      need(type == LieType::B ? 2 : 3);
      degrees = odd_range(3, 4 * l - 1, 4);
      e.dim = static_cast<long long>(l) * (2 * l + 1);
      e.rank = l;
      break;
    case LieType::D:
      need(4);
      degrees = odd_range(3, 4 * l - 5, 4);
      if (!strict) degrees.push_back(2 * l - 1);
      e.dim = static_cast<long long>(l) * (2 * l - 1);
      e.rank = l;
      break;
    case LieType::E6:
      degrees = {3, 9, 11, 15, 17, 23};
      e.dim = 78;
      e.rank = 6;
      break;
    case LieType::E7:
      degrees = {3, 11, 15, 19, 23, 27, 35};
      e.dim = 133;
      e.rank = 7;
      break;
    case LieType::E8:
      degrees = {3, 15, 23, 27, 35, 39, 47, 59};
      if (strict) degrees.erase(std::find(degrees.begin(), degrees.end(), 27));
      e.dim = 248;
      e.rank = 8;
      break;
    case LieType::F4:
      degrees = {3, 11, 15, 23};
      e.dim = 52;
      e.rank = 4;
      break;
    case LieType::G2:
      degrees = {3, 11};
      e.dim = 14;
      e.rank = 2;
      break;
  }
  e.l = has_parameter(type) ? l : e.rank;
  e.model = ExteriorModel(std::move(degrees), e.name());
  e.sum_matches = e.model.dimension() == e.dim;
  e.parity_matches = (e.dim - e.rank) % 2 == 0;
  e.count_matches = e.model.rank() == static_cast<std::size_t>(e.rank);
  return e;
}

std::vector<CatalogEntry> full_catalog(int max_l, bool strict) {
  std::vector<CatalogEntry> out;
  const std::pair<LieType, int> classical[] = {{LieType::A, 1}, {LieType::B, 2}, {LieType::C, 3}, {LieType::D, 4}};
  for (const auto& [t, least] : classical) {
    for (int l = least; l <= max_l; ++l) out.push_back(catalog(t, l, strict));
  }
  for (LieType t : {LieType::E6, LieType::E7, LieType::E8, LieType::F4, LieType::G2}) out.push_back(catalog(t, 0, strict));
  return out;
}

bool torsion_free_mod(LieType type, unsigned long p) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  switch (type) {
    case LieType::A:
    case LieType::C:
      return p >= 2;
    case LieType::B:
    case LieType::D:
    case LieType::G2:
      return p >= 3;
    case LieType::F4:
    case LieType::E6:
    case LieType::E7:
      return p >= 5;
    case LieType::E8:
      return p >= 7;
  }
  return false;
}

GroupModel GroupModel::make(int center_dim, std::vector<CatalogEntry> factors) {
  if (center_dim < 0) fail(ErrorKind::RangeError, "negative center dimension");
  GroupModel g;
  g.center = ExteriorModel(std::vector<int>(static_cast<std::size_t>(center_dim), 1), "T" + std::to_string(center_dim));
  g.simple_factors = std::move(factors);
  return g;
}

Integer GroupPrediction::torsion_points(long k) const {
  if (k < 1) fail(ErrorKind::RangeError, "k must be at least 1");
  return ipow(Integer(k), static_cast<unsigned long>(center_dim));
}

GroupPrediction group_prediction(const GroupModel& g) {
  for (int d : g.center.degrees()) {
    if (d != 1) fail(ErrorKind::RangeError, "center generators must have degree 1");
  }
  GroupPrediction out;
  out.center_dim = static_cast<int>(g.center.rank());
  out.model = g.center;
  out.rank = out.center_dim;
  out.dim = out.center_dim;
  for (const CatalogEntry& f : g.simple_factors) {
    out.model = tensor(out.model, f.model);
    out.rank += f.rank;
    out.dim += f.dim;
  }
  out.poincare = poincare_polynomial(out.model);
  out.euler = 0;
  for (std::size_t k = 0; k < out.poincare.size(); ++k) {
    if (k % 2 == 0) {
      out.euler += out.poincare[k];
    } else {
      out.euler -= out.poincare[k];
    }
  }
  out.parity_matches = (out.dim - out.rank) % 2 == 0;
  if (out.rank > 0 && sgn(out.euler) != 0) fail(ErrorKind::InternalMismatch, "nonzero Euler characteristic");
  return out;
}

}  // namespace topo
