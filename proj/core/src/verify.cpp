#include <sstream>

#include "topo/error.hpp"
#include "topo/homology.hpp"

namespace topo {

void VerificationReport::check(bool condition, std::string line) {
  lines.push_back((condition ? "ok   " : "FAIL ") + line);
  ok = ok && condition;
}

std::vector<Field> default_fields() {
  return {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5)};
}

namespace {

// Linear map between homology groups in their chosen bases.
struct LinMap {
  std::size_t rows = 0;
  std::size_t cols = 0;
  ScalarMatrix a;  // rows x cols

  LinMap(std::size_t r, std::size_t c) : rows(r), cols(c), a(r, std::vector<Scalar>(c, Scalar(0))) {}
};

std::size_t map_rank(const Field& F, const LinMap& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  return rank(F, m.a);
}

bool composite_zero(const Field& F, const LinMap& after, const LinMap& before) {
  for (std::size_t i = 0; i < after.rows; ++i) {
    for (std::size_t j = 0; j < before.cols; ++j) {
      Scalar s = 0;
      for (std::size_t k = 0; k < after.cols; ++k) s = F.add(s, F.mul(after.a[i][k], before.a[k][j]));
      if (sgn(s) != 0) return false;
    }
  }
  return true;
}

// Moves a chain between complexes by tokens. Simplices missing from the
// target are dropped when `project` is set and rejected otherwise.
SparseVector transfer(const Field& F, const std::vector<Simplex>& from_basis, const SimplicialComplex& from,
                      const ChainComplexRep& to, int q, const SparseVector& chain, bool project) {
  SparseVector out;
  for (const auto& [i, c] : chain) {
    auto ids = to.complex().to_ids(from.to_tokens(from_basis[i]));
    auto idx = ids ? to.basis_index(q, *ids) : std::nullopt;
    if (!idx) {
      if (project) continue;
      fail(ErrorKind::InternalMismatch, "chain does not lie in the target complex");
    }
    out = sparse::axpy(F, out, c, {{*idx, Scalar(1)}});
  }
  return out;
}

std::vector<HomologyBasis> bases_of(const ChainComplexRep& C, int top, const Field& F) {
  std::vector<HomologyBasis> out;
  for (int q = 0; q <= top; ++q) out.emplace_back(C, q, F);
  return out;
}

// Checks exactness at the middle of before -> X -> after.
void check_node(VerificationReport& report, const Field& F, const std::string& name, std::size_t dim,
                const LinMap& before, const LinMap& after) {
  const bool zero = composite_zero(F, after, before);
  const std::size_t im = map_rank(F, before);
  const std::size_t ker = dim - map_rank(F, after);
  std::ostringstream os;
  os << F.name() << ": exact at " << name << " (dim " << dim << ", im " << im << ", ker " << ker << ")";
  report.check(zero && im == ker, os.str());
}

std::string deg(const std::string& group, int q) {
  std::string s = group;
  const auto pos = s.find('#');
  return s.replace(pos, 1, std::to_string(q));
}

void les_over(VerificationReport& report, const SimplicialComplex& K, const SimplicialComplex& A, const Field& F) {
  const int top = K.dim();
  const ChainComplexRep CA = ChainComplexRep::build(A);
  const ChainComplexRep CK = ChainComplexRep::build(K);
  const ChainComplexRep CR = ChainComplexRep::build(K, A);
  const auto HA = bases_of(CA, top + 1, F);
  const auto HK = bases_of(CK, top + 1, F);
  const auto HR = bases_of(CR, top + 1, F);

  auto incl = [&](int q) {
    LinMap m(HK[q].dimension(), HA[q].dimension());
    for (std::size_t j = 0; j < m.cols; ++j) {
      auto c = HK[q].coordinates(transfer(F, CA.basis(q), A, CK, q, HA[q].cycles()[j], false));
      for (std::size_t i = 0; i < m.rows; ++i) m.a[i][j] = c[i];
    }
    return m;
  };
  auto proj = [&](int q) {
    LinMap m(HR[q].dimension(), HK[q].dimension());
    for (std::size_t j = 0; j < m.cols; ++j) {
      auto c = HR[q].coordinates(transfer(F, CK.basis(q), K, CR, q, HK[q].cycles()[j], true));
      for (std::size_t i = 0; i < m.rows; ++i) m.a[i][j] = c[i];
    }
    return m;
  };
  auto connecting = [&](int q) {
    // H_q(K,A) -> H_{q-1}(A)
    const std::size_t rows = q >= 1 ? HA[q - 1].dimension() : 0;
    LinMap m(rows, HR[q].dimension());
    if (q < 1) return m;
    for (std::size_t j = 0; j < m.cols; ++j) {
      const SparseVector lifted = transfer(F, CR.basis(q), K, CK, q, HR[q].cycles()[j], false);
      const SparseVector bd = sparse::apply(F, CK.boundary(q), lifted);
      auto c = HA[q - 1].coordinates(transfer(F, CK.basis(q - 1), K, CA, q - 1, bd, false));
      for (std::size_t i = 0; i < m.rows; ++i) m.a[i][j] = c[i];
    }
    return m;
  };

  for (int q = top; q >= 0; --q) {
    const LinMap d_in = connecting(q + 1);
    const LinMap i_q = incl(q);
    const LinMap j_q = proj(q);
    const LinMap d_out = connecting(q);
    check_node(report, F, deg("H#(A)", q), HA[q].dimension(), d_in, i_q);
    check_node(report, F, deg("H#(K)", q), HK[q].dimension(), i_q, j_q);
    check_node(report, F, deg("H#(K,A)", q), HR[q].dimension(), j_q, d_out);
  }
}

void mv_over(VerificationReport& report, const SimplicialComplex& K, const SimplicialComplex& K1,
             const SimplicialComplex& K2, const Field& F) {
  const int top = K.dim();
  const SimplicialComplex I = complex_intersection(K1, K2);
  const ChainComplexRep CI = ChainComplexRep::build(I);
  const ChainComplexRep C1 = ChainComplexRep::build(K1);
  const ChainComplexRep C2 = ChainComplexRep::build(K2);
  const ChainComplexRep CK = ChainComplexRep::build(K);
  const auto HI = bases_of(CI, top + 1, F);
  const auto H1 = bases_of(C1, top + 1, F);
  const auto H2 = bases_of(C2, top + 1, F);
  const auto HK = bases_of(CK, top + 1, F);

  auto alpha = [&](int q) {
    const std::size_t d1 = H1[q].dimension();
    LinMap m(d1 + H2[q].dimension(), HI[q].dimension());
    for (std::size_t j = 0; j < m.cols; ++j) {
      const SparseVector& z = HI[q].cycles()[j];
      auto a = H1[q].coordinates(transfer(F, CI.basis(q), I, C1, q, z, false));
      auto b = H2[q].coordinates(transfer(F, CI.basis(q), I, C2, q, z, false));
      for (std::size_t i = 0; i < a.size(); ++i) m.a[i][j] = a[i];
      for (std::size_t i = 0; i < b.size(); ++i) m.a[d1 + i][j] = b[i];
    }
    return m;
  };
  auto beta = [&](int q) {
    const std::size_t d1 = H1[q].dimension();
    LinMap m(HK[q].dimension(), d1 + H2[q].dimension());
    for (std::size_t j = 0; j < m.cols; ++j) {
      std::vector<Scalar> c;
      if (j < d1) {
        c = HK[q].coordinates(transfer(F, C1.basis(q), K1, CK, q, H1[q].cycles()[j], false));
      } else {
        c = HK[q].coordinates(transfer(F, C2.basis(q), K2, CK, q, H2[q].cycles()[j - d1], false));
        for (auto& v : c) v = F.neg(v);
      }
      for (std::size_t i = 0; i < m.rows; ++i) m.a[i][j] = c[i];
    }
    return m;
  };
  auto delta = [&](int q) {
    // H_q(K) -> H_{q-1}(K1∩K2): split z = x1 + x2 with x1 on K1, take [∂x1].
    const std::size_t rows = q >= 1 ? HI[q - 1].dimension() : 0;
    LinMap m(rows, HK[q].dimension());
    if (q < 1) return m;
    for (std::size_t j = 0; j < m.cols; ++j) {
      const SparseVector x1 = transfer(F, CK.basis(q), K, C1, q, HK[q].cycles()[j], true);
      const SparseVector bd = sparse::apply(F, C1.boundary(q), x1);
      auto c = HI[q - 1].coordinates(transfer(F, C1.basis(q - 1), K1, CI, q - 1, bd, false));
      for (std::size_t i = 0; i < m.rows; ++i) m.a[i][j] = c[i];
    }
    return m;
  };

  for (int q = top; q >= 0; --q) {
    const LinMap d_in = delta(q + 1);
    const LinMap a_q = alpha(q);
    const LinMap b_q = beta(q);
    const LinMap d_out = delta(q);
    check_node(report, F, deg("H#(K1∩K2)", q), HI[q].dimension(), d_in, a_q);
    check_node(report, F, deg(deg("H#(K1)+H#(K2)", q), q), H1[q].dimension() + H2[q].dimension(), a_q, b_q);
    check_node(report, F, deg("H#(K)", q), HK[q].dimension(), b_q, d_out);
  }
}

std::vector<Field> fields_for(const std::optional<Coefficients>& coeff) {
  if (coeff && coeff->is_field()) return {coeff->field()};
  return default_fields();
}

}  // namespace

VerificationReport verify_les_pair(const SimplicialComplex& K, const SimplicialComplex& A,
                                   const std::optional<Coefficients>& coeff) {
  if (!A.is_subcomplex_of(K)) fail(ErrorKind::NotASubcomplex, "A is not a subcomplex of K");
  VerificationReport report{"long exact sequence of the pair", {}, true};
  for (const Field& F : fields_for(coeff)) les_over(report, K, A, F);
  return report;
}

VerificationReport verify_mayer_vietoris(const SimplicialComplex& K, const SimplicialComplex& K1,
                                         const SimplicialComplex& K2, const std::optional<Coefficients>& coeff) {
  if (!K1.is_subcomplex_of(K) || !K2.is_subcomplex_of(K)) {
    fail(ErrorKind::BadCover, "cover pieces must be subcomplexes of K");
  }
  if (!K.is_subcomplex_of(complex_union(K1, K2))) fail(ErrorKind::BadCover, "K is not the union of the two pieces");
  VerificationReport report{"Mayer-Vietoris sequence", {}, true};
  for (const Field& F : fields_for(coeff)) mv_over(report, K, K1, K2, F);
  return report;
}

VerificationReport verify_uct(const SimplicialComplex& K, unsigned long p) {
  const Coefficients Fp = Coefficients::prime(p);
  const auto hz = homology(K, Coefficients::integers());
  const auto hp = homology(K, Fp);
  auto t = [&](int q) {
    if (q < 0 || q >= static_cast<int>(hz.size())) return std::size_t{0};
    std::size_t n = 0;
    for (const auto& d : hz[q].torsion) n += mpz_divisible_ui_p(d.get_mpz_t(), p) ? 1 : 0;
    return n;
  };
  VerificationReport report{"universal coefficients over F" + std::to_string(p), {}, true};
  for (int q = 0; q < static_cast<int>(hz.size()); ++q) {
    const std::size_t expected = hz[q].betti + t(q) + t(q - 1);
    std::ostringstream os;
    os << "dim H" << q << "(K;F" << p << ") = " << hp[q].betti << ", b" << q << " + t" << q << " + t" << q - 1
       << " = " << expected;
    report.check(hp[q].betti == expected, os.str());
  }
  return report;
}

VerificationReport verify_kunneth(const SimplicialComplex& K, const SimplicialComplex& L, const Coefficients& coeff) {
  if (!coeff.is_field()) fail(ErrorKind::RangeError, "Kunneth check needs field coefficients");
  const auto hk = betti_numbers(K, coeff.field());
  const auto hl = betti_numbers(L, coeff.field());
  const auto hp = betti_numbers(product(K, L), coeff.field());
  VerificationReport report{"Kunneth formula over " + coeff.name(), {}, true};
  const std::size_t top = hk.size() + hl.size() >= 2 ? hk.size() + hl.size() - 1 : 0;
  for (std::size_t n = 0; n < std::max(top, hp.size()); ++n) {
    std::size_t expected = 0;
    for (std::size_t i = 0; i < hk.size(); ++i) {
      if (n >= i && n - i < hl.size()) expected += hk[i] * hl[n - i];
    }
    const std::size_t got = n < hp.size() ? hp[n] : 0;
    std::ostringstream os;
    os << "dim H" << n << "(KxL) = " << got << ", sum of products = " << expected;
    report.check(got == expected, os.str());
  }
  return report;
}

}  // namespace topo
