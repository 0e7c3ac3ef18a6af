#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "topo/corpus.hpp"
#include "topo/error.hpp"
#include "topo/manifold.hpp"

using namespace topo;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::InternalMismatch;
}

SimplicialMap permutation(const SimplicialComplex& K, const std::vector<int>& p) {
  std::map<std::string, std::string> m;
  for (std::size_t i = 0; i < p.size(); ++i) m[std::to_string(i)] = std::to_string(p[i]);
  return SimplicialMap::from_tokens(K, K, m);
}

int permutation_sign(std::vector<int> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[static_cast<std::size_t>(p[i])]);
      sign = -sign;
    }
  }
  return sign;
}

std::vector<std::string> orientable_closed() {
  return {"sphere:1", "sphere:2", "sphere:3", "torus", "torus:2", "torus:3"};
}

}  // namespace

TEST(Pseudomanifold, Examples) {
  EXPECT_TRUE(is_closed_pseudomanifold(builtin("sphere:2"), 2).ok);
  EXPECT_TRUE(is_closed_pseudomanifold(builtin("torus"), 2).ok);
  const auto disk = is_closed_pseudomanifold(builtin("simplex:2"), 2);
  EXPECT_FALSE(disk.ok);
  EXPECT_FALSE(disk.diagnostics.empty());
  EXPECT_FALSE(is_closed_pseudomanifold(builtin("torus"), 3).ok);
  const auto two = complex_union(builtin("sphere:1"), relabel(builtin("sphere:1"), {{"0", "a"}, {"1", "b"}, {"2", "c"}}));
  EXPECT_FALSE(is_closed_pseudomanifold(two, 1).ok);
}

TEST(Orientation, Trichotomy) {
  const auto T = builtin("torus");
  const auto o = orient(T);
  ASSERT_TRUE(o.has_value());
  EXPECT_TRUE(is_coherent(T, *o));
  EXPECT_EQ(homology(T, Coefficients::integers())[2].betti, 1u);
  for (const auto& name : {"rp2", "klein"}) {
    const auto K = builtin(name);
    EXPECT_FALSE(orient(K).has_value()) << name;
    EXPECT_TRUE(homology(K, Coefficients::integers())[2].is_zero()) << name;
    EXPECT_EQ(homology(K, Coefficients::prime(2))[2].betti, 1u) << name;
    EXPECT_TRUE(mod2_fundamental_class_is_cycle(K)) << name;
    EXPECT_EQ(kind_of([&] { fundamental_class(K); }), ErrorKind::NotOrientable);
  }
  EXPECT_EQ(kind_of([] { orient(builtin("simplex:2")); }), ErrorKind::NotPseudomanifold);
}

TEST(Orientation, CoherentOnEveryOrientableCorpusMember) {
  for (const auto& [name, K] : closed_corpus()) {
    const auto o = orient(K);
    const bool orientable = homology(K, Coefficients::integers()).back().betti == 1;
    EXPECT_EQ(o.has_value(), orientable) << name;
    if (o) {
      EXPECT_TRUE(is_coherent(K, *o)) << name;
      auto flipped = *o;
      flipped.signs[0] = -flipped.signs[0];
      EXPECT_FALSE(is_coherent(K, flipped)) << name;
    }
    EXPECT_TRUE(mod2_fundamental_class_is_cycle(K)) << name;
  }
}

TEST(FundamentalClass, CycleAndGenerator) {
  const auto S = builtin("sphere:2");
  const auto zs = fundamental_class(S);
  ASSERT_EQ(zs.chain.size(), 4u);
  // ∂Δ³ facets 012, 013, 023, 123 carry alternating signs
  EXPECT_EQ(zs.chain[0], -zs.chain[1]);
  EXPECT_EQ(zs.chain[1], -zs.chain[2]);
  EXPECT_EQ(zs.chain[2], -zs.chain[3]);
  for (const auto& name : orientable_closed()) {
    const auto K = builtin(name);
    const auto z = fundamental_class(K);
    const auto C = ChainComplexRep::build(K);
    for (const auto& x : C.boundary(z.n).apply(z.chain)) EXPECT_EQ(x, 0) << name;
    for (const auto& x : z.chain) EXPECT_EQ(abs(x), 1) << name;
    // generates: its coordinate in the integral SNF basis is ±1
    const IntegralHomology H(C, z.n);
    ASSERT_EQ(H.rank(), 1u);
    const auto c = H.coordinates(z.chain);
    EXPECT_EQ(abs(c[0]), 1) << name;
  }
  EXPECT_EQ(fundamental_class(builtin("torus")).chain.size(), 14u);
}

TEST(Degree, Examples) {
  const auto S1 = builtin("sphere:1");
  EXPECT_EQ(degree(ChainMap::identity(S1)), 1);
  EXPECT_EQ(degree(ChainMap::from_simplicial(SimplicialMap::constant(S1, S1, 0))), 0);
  const auto H = builtin("circle:6");
  std::map<std::string, std::string> m;
  for (int i = 0; i < 6; ++i) m[std::to_string(i)] = std::to_string(i % 3);
  EXPECT_EQ(std::abs(degree(ChainMap::from_simplicial(SimplicialMap::from_tokens(H, S1, m)))), 2);
  EXPECT_EQ(kind_of([&] { degree(ChainMap::from_simplicial(SimplicialMap::constant(S1, builtin("sphere:2"), 0))); }),
            ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([] { degree(ChainMap::identity(builtin("rp2"))); }), ErrorKind::NotOrientable);
}

TEST(Degree, PermutationsOfTheTetrahedronBoundary) {
  const auto S = builtin("sphere:2");
  std::vector<int> p{0, 1, 2, 3};
  do {
    EXPECT_EQ(degree(ChainMap::from_simplicial(permutation(S, p))), permutation_sign(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST(Degree, Multiplicative) {
  const auto S = builtin("sphere:2");
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2, 3};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  for (std::size_t i = 0; i < perms.size(); i += 5) {
    for (std::size_t j = 0; j < perms.size(); j += 3) {
      const auto f = permutation(S, perms[i]);
      const auto g = permutation(S, perms[j]);
      EXPECT_EQ(degree(ChainMap::from_simplicial(compose(g, f))),
                degree(ChainMap::from_simplicial(g)) * degree(ChainMap::from_simplicial(f)));
    }
  }
  // doubling followed by the reflection of the triangle, and preceded by a hexagon reflection
  const auto H = builtin("circle:6");
  const auto S1 = builtin("sphere:1");
  std::map<std::string, std::string> dbl, refl6;
  for (int i = 0; i < 6; ++i) {
    dbl[std::to_string(i)] = std::to_string(i % 3);
    refl6[std::to_string(i)] = std::to_string((6 - i) % 6);
  }
  const auto d = SimplicialMap::from_tokens(H, S1, dbl);
  const auto r3 = permutation(S1, {0, 2, 1});
  const auto r6 = SimplicialMap::from_tokens(H, H, refl6);
  const auto ch = [](const SimplicialMap& f) { return ChainMap::from_simplicial(f); };
  EXPECT_EQ(degree(ch(compose(r3, d))), degree(ch(r3)) * degree(ch(d)));
  EXPECT_EQ(degree(ch(compose(d, r6))), degree(ch(d)) * degree(ch(r6)));
  EXPECT_EQ(degree(ch(r6)), -1);
}

TEST(Pairing, Examples) {
  const auto S = builtin("sphere:2");
  const auto P = poincare_pairing(S, *orient(S), 0);
  ASSERT_EQ(P.rows, 1u);
  EXPECT_EQ(abs(P.matrix[0][0]), 1);
  const auto T = builtin("torus");
  const auto M = poincare_pairing(T, *orient(T), 1);
  EXPECT_EQ(M.rows, 2u);
  EXPECT_EQ(M.rank, 2u);
  EXPECT_EQ(M.matrix[0][0], 0);
  EXPECT_EQ(M.matrix[1][1], 0);
  EXPECT_EQ(M.matrix[0][1], -M.matrix[1][0]);
  const auto T3 = builtin("torus:3");
  const auto M3 = poincare_pairing(T3, *orient(T3), 1);
  EXPECT_EQ(M3.rows, 3u);
  EXPECT_EQ(M3.cols, 3u);
  EXPECT_TRUE(M3.nondegenerate());
}

TEST(Pairing, FullRankAndBettiPalindromes) {
  std::vector<std::pair<std::string, SimplicialComplex>> manifolds;
  for (const auto& name : orientable_closed()) manifolds.emplace_back(name, builtin(name));
  manifolds.emplace_back("sphere:1 x sphere:2", product(builtin("sphere:1"), builtin("sphere:2")));
  for (const auto& [name, K] : manifolds) {
    const auto o = orient(K);
    ASSERT_TRUE(o.has_value()) << name;
    const FieldHomology H(K, Field::rationals());
    const auto zeta = fundamental_class(K, *o);
    const auto b = betti_numbers(K);
    for (int q = 0; q <= K.dim(); ++q) {
      EXPECT_TRUE(poincare_pairing(H, zeta, q).nondegenerate()) << name << " q=" << q;
      EXPECT_EQ(b[q], b[K.dim() - q]) << name;
    }
  }
}

TEST(Pairing, UnimodularInIntegralBases) {
  // Re-express the rational pairing in the Smith bases of H_q(K;Z) and their duals.
  const Field F = Field::rationals();
  for (const auto& name : orientable_closed()) {
    const auto K = builtin(name);
    const FieldHomology H(K, F);
    const auto zeta = fundamental_class(K);
    const int n = zeta.n;
    auto change = [&](int q) {
      const IntegralHomology Z(H.chains(), q);
      ScalarMatrix A(H.dimension(q), std::vector<Scalar>(Z.rank()));
      for (std::size_t j = 0; j < Z.rank(); ++j) {
        const auto c = H.basis(q).coordinates(sparse::from_integers(F, Z.free_generators()[j]));
        for (std::size_t k = 0; k < c.size(); ++k) A[k][j] = c[k];
      }
      return A;
    };
    for (int q = 0; q <= n; ++q) {
      const auto M = poincare_pairing(H, zeta, q);
      const auto Aq_inv = inverse(F, change(q));
      const auto Ap_inv = inverse(F, change(n - q));
      const auto Mz = multiply(F, multiply(F, Aq_inv, M.matrix), transpose(Ap_inv));
      const Scalar det = determinant(F, Mz);
      EXPECT_TRUE(det == 1 || det == -1) << name << " q=" << q << " det=" << det.get_str();
    }
  }
}

TEST(Parity, Examples) {
  const auto t3 = parity_checks(builtin("torus:3"));
  EXPECT_EQ(t3.euler, 0);
  EXPECT_TRUE(t3.ok());
  EXPECT_TRUE(t3.items[0].applicable);
  const auto s2 = parity_checks(builtin("sphere:2"));
  EXPECT_EQ(s2.euler, 2);
  EXPECT_TRUE(s2.ok());
  EXPECT_TRUE(s2.items[1].applicable);
  const auto solid = product(builtin("cylinder"), builtin("sphere:1"));
  const auto b = boundary_parity_check(solid);
  EXPECT_EQ(b.euler, 0);
  EXPECT_TRUE(b.ok());
  EXPECT_TRUE(b.items[0].applicable);
  EXPECT_FALSE(parity_checks(builtin("simplex:2")).ok());
}

TEST(Parity, WholeClosedCorpus) {
  for (const auto& [name, K] : closed_corpus()) EXPECT_TRUE(parity_checks(K).ok()) << name;
  for (const auto& name : {"moebius", "cylinder", "simplex:2", "simplex:3"}) {
    EXPECT_TRUE(boundary_parity_check(builtin(name)).ok()) << name;
  }
}

TEST(Separation, Examples) {
  EXPECT_EQ(separation_check(1, "equator").components, 2u);
  EXPECT_EQ(separation_check(2, "equator").components, 2u);
  EXPECT_EQ(separation_check(2, "facet").components, 2u);
  EXPECT_EQ(separation_check(3, "facet").components, 2u);
  EXPECT_TRUE(separation_check(3, "equator").ok());
  EXPECT_EQ(kind_of([] { separation_check(2, "spiral"); }), ErrorKind::BadEmbedding);
  const auto S = builtin("sphere:2");
  EXPECT_EQ(kind_of([&] { separation_check(S, build_complex({{"0", "1"}})); }), ErrorKind::BadEmbedding);
}

TEST(Separation, CircleOnTheTorusDoesNotSeparate) {
  const auto T = builtin("torus");
  const auto meridian = build_complex({{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"0", "6"}});
  const auto r = separation_check(T, meridian);
  EXPECT_EQ(r.components, 1u);
  EXPECT_FALSE(r.ok());
}
