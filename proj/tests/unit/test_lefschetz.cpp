#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "topo/corpus.hpp"
#include "topo/error.hpp"
#include "topo/homology.hpp"
#include "topo/lefschetz.hpp"
#include "topo/manifold.hpp"

using namespace topo;

namespace {

SimplicialMap torus_affine(int a, int b) {
  const auto T = builtin("torus");
  std::map<std::string, std::string> m;
  for (int i = 0; i < 7; ++i) m[std::to_string(i)] = std::to_string((a * i + b) % 7);
  return SimplicialMap::from_tokens(T, T, m);
}

SimplicialMap permutation(const SimplicialComplex& K, const std::vector<int>& p) {
  std::map<std::string, std::string> m;
  for (std::size_t i = 0; i < p.size(); ++i) m[std::to_string(i)] = std::to_string(p[i]);
  return SimplicialMap::from_tokens(K, K, m);
}

// Fixed simplices of a vertex permutation, counted with the sign of the
// permutation it induces on the simplex (the local index of a simplicial
// automorphism). Sums to λ(f) by the chain-level Hopf formula.
long long signed_fixed_simplices(const SimplicialMap& f) {
  const auto& K = f.source();
  long long total = 0;
  for (int q = 0; q <= K.dim(); ++q) {
    for (const auto& s : K.simplices(q)) {
      std::vector<VertexId> image;
      for (VertexId v : s) image.push_back(f(v));
      std::vector<VertexId> sorted = image;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != s) continue;
      const int sign = sorting_sign(image);
      total += (q % 2 == 0 ? 1 : -1) * sign;
    }
  }
  return total;
}

}  // namespace

TEST(Lefschetz, Examples) {
  EXPECT_EQ(lefschetz_number(SimplicialMap::identity(builtin("torus"))), 0);
  EXPECT_EQ(lefschetz_number(SimplicialMap::identity(builtin("sphere:2"))), 2);
  EXPECT_EQ(lefschetz_number(circle_power_map(2).chain_map()), -1);
  EXPECT_EQ(lefschetz_number(torus_translation()), 0);
  EXPECT_EQ(lefschetz_number(antipodal_involution(2)), 0);
}

TEST(Lefschetz, IdentityIsEuler) {
  for (const auto& [name, K] : full_corpus()) {
    EXPECT_EQ(lefschetz_number(SimplicialMap::identity(K)), K.euler_characteristic()) << name;
  }
}

TEST(Lefschetz, CirclePowerMaps) {
  for (int d = -6; d <= 6; ++d) {
    const auto f = circle_power_map(d);
    EXPECT_EQ(degree(f.chain_map()), d) << d;
    EXPECT_EQ(lefschetz_number(f.chain_map()), 1 - d) << d;
    EXPECT_TRUE(hopf_trace_check(f.chain_map()).agree()) << d;
  }
}

TEST(Lefschetz, AntipodalInvolutions) {
  for (int n = 1; n <= 3; ++n) {
    const auto a = antipodal_involution(n);
    const long long deg = degree(ChainMap::from_simplicial(a));
    EXPECT_EQ(deg, n % 2 == 0 ? -1 : 1) << n;
    EXPECT_EQ(lefschetz_number(a), 1 + (n % 2 == 0 ? 1 : -1) * deg) << n;
    EXPECT_EQ(compose(a, a).vertex_map(), SimplicialMap::identity(a.source()).vertex_map());
    for (VertexId v = 0; v < a.source().vertex_count(); ++v) EXPECT_NE(a(v), v);
  }
  EXPECT_EQ(fixed_point_certificate(antipodal_involution(2)), Certificate::Inconclusive);
}

TEST(Lefschetz, Certificates) {
  EXPECT_EQ(fixed_point_certificate(SimplicialMap::identity(builtin("sphere:2"))), Certificate::GuaranteedFixedPoint);
  EXPECT_EQ(fixed_point_certificate(torus_translation()), Certificate::Inconclusive);
  EXPECT_EQ(to_string(Certificate::GuaranteedFixedPoint), "GuaranteedFixedPoint");
  EXPECT_EQ(hopf_trace_check(circle_power_map(2).chain_map()).certificate, Certificate::GuaranteedFixedPoint);
}

TEST(Lefschetz, Errors) {
  const auto S = builtin("sphere:1");
  try {
    lefschetz_number(SimplicialMap::constant(S, builtin("sphere:2"), 0));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSelfMap);
  }
  EXPECT_THROW(hopf_trace_check(ChainMap::subdivision(S, 1)), Error);
}

TEST(HopfTrace, SphereSymmetries) {
  const auto S = builtin("sphere:2");
  std::vector<int> p{0, 1, 2, 3};
  do {
    const auto f = permutation(S, p);
    const auto r = hopf_trace_check(f);
    EXPECT_TRUE(r.agree());
    EXPECT_EQ(r.homology_sum, Scalar(static_cast<long>(lefschetz_number(f))));
    EXPECT_EQ(r.chain_sum, Scalar(static_cast<long>(signed_fixed_simplices(f))));
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST(HopfTrace, TorusAffineMaps) {
  std::size_t count = 0;
  for (int a = 1; a < 7; ++a) {
    for (int b = 0; b < 7; ++b) {
      const auto f = torus_affine(a, b);
      const auto r = hopf_trace_check(f);
      EXPECT_TRUE(r.agree()) << a << " " << b;
      EXPECT_EQ(r.chain_sum, Scalar(static_cast<long>(signed_fixed_simplices(f)))) << a << " " << b;
      ++count;
    }
  }
  EXPECT_EQ(count, 42u);
  const auto t = hopf_trace_check(torus_translation());
  EXPECT_EQ(t.chain_sum, 0);
  EXPECT_EQ(t.homology_sum, 0);
}

TEST(HopfTrace, RandomVertexSymmetries) {
  std::mt19937_64 rng(123);
  const auto S3 = builtin("sphere:3");
  const auto S1 = builtin("sphere:1");
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> p{0, 1, 2, 3, 4};
    std::shuffle(p.begin(), p.end(), rng);
    EXPECT_TRUE(hopf_trace_check(permutation(S3, p)).agree());
    std::vector<int> q{0, 1, 2};
    std::shuffle(q.begin(), q.end(), rng);
    EXPECT_TRUE(hopf_trace_check(permutation(S1, q)).agree());
  }
}

TEST(HopfTrace, NonInjectiveMaps) {
  for (const auto& [name, K] : full_corpus()) {
    const auto c = SimplicialMap::constant(K, K, 0);
    const auto r = hopf_trace_check(c);
    EXPECT_TRUE(r.agree()) << name;
    EXPECT_EQ(r.homology_sum, Scalar(1)) << name;
  }
  // fold of the disk onto an edge
  const auto D = builtin("simplex:2");
  const auto fold = SimplicialMap::from_tokens(D, D, {{"0", "0"}, {"1", "1"}, {"2", "1"}});
  EXPECT_TRUE(hopf_trace_check(fold).agree());
  EXPECT_EQ(lefschetz_number(fold), 1);
}

TEST(Approximation, Validation) {
  const auto S = builtin("sphere:1");
  EXPECT_THROW(SimplicialApproximation(S, 1, SimplicialMap::identity(S)), Error);
  EXPECT_THROW(identity_approximation(S, -1), Error);
  const auto id0 = identity_approximation(S, 0);
  EXPECT_EQ(id0.subdivisions(), 0);
  const auto id2 = identity_approximation(S, 2);
  EXPECT_EQ(id2.map().source(), iterated_subdivision(S, 2));
  EXPECT_EQ(id2.target(), S);
}

TEST(Approximation, HomotopyInvarianceProxy) {
  // λ(f ∘ id_approx) = λ(f): compose at the chain level on C(K)
  for (const auto& [name, K] : closed_corpus()) {
    for (int k = 1; k <= 2; ++k) {
      if (k == 2 && K.count(K.dim()) > 20) continue;
      const auto approx = identity_approximation(K, k);
      EXPECT_EQ(lefschetz_number(approx.chain_map()), K.euler_characteristic()) << name << " k=" << k;
    }
  }
  for (int a = 1; a < 7; ++a) {
    const auto f = torus_affine(a, 2);
    const auto approx = identity_approximation(builtin("torus"), 1);
    const auto composite = compose(ChainMap::from_simplicial(f), approx.chain_map());
    EXPECT_EQ(lefschetz_number(composite), lefschetz_number(f)) << a;
    const SimplicialApproximation lifted(builtin("torus"), 1, compose(f, approx.map()));
    EXPECT_EQ(lefschetz_number(lifted.chain_map()), lefschetz_number(f)) << a;
    EXPECT_TRUE(hopf_trace_check(lifted.chain_map()).agree());
  }
}

TEST(Coincidence, Examples) {
  const auto T = builtin("torus");
  const auto S2 = builtin("sphere:2");
  EXPECT_EQ(coincidence_number(SimplicialMap::identity(T), SimplicialMap::identity(T)), 0);
  EXPECT_EQ(coincidence_number(SimplicialMap::identity(S2), SimplicialMap::identity(S2)), 2);
  const auto p2 = circle_power_map(2);
  const auto id = identity_approximation(builtin("sphere:1"), p2.subdivisions());
  EXPECT_EQ(coincidence_number(p2.chain_map(), id.chain_map()), lefschetz_number(p2.chain_map()));
  EXPECT_EQ(coincidence_number(p2.chain_map(), ChainMap::identity(builtin("sphere:1"))), -1);
}

TEST(Coincidence, AgreesWithLefschetzAgainstIdentity) {
  for (int a = 1; a < 7; ++a) {
    const auto f = torus_affine(a, 3);
    EXPECT_EQ(coincidence_number(f, SimplicialMap::identity(builtin("torus"))), lefschetz_number(f)) << a;
  }
  const auto S = builtin("sphere:2");
  std::vector<int> p{0, 1, 2, 3};
  do {
    const auto f = permutation(S, p);
    EXPECT_EQ(coincidence_number(f, SimplicialMap::identity(S)), lefschetz_number(f));
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST(Coincidence, Symmetry) {
  const auto sym = [](const ChainMap& f, const ChainMap& g) {
    const int n = f.source().dim();
    EXPECT_EQ(coincidence_number(f, g), (n % 2 == 0 ? 1 : -1) * coincidence_number(g, f));
  };
  for (int d = -3; d <= 3; ++d) {
    for (int e = -3; e <= 3; ++e) {
      sym(circle_power_map(d).chain_map(), circle_power_map(e).chain_map());
    }
  }
  for (int a = 1; a < 7; ++a) {
    for (int b = 1; b < 7; b += 2) sym(ChainMap::from_simplicial(torus_affine(a, 1)), ChainMap::from_simplicial(torus_affine(b, 4)));
  }
  const auto S = builtin("sphere:3");
  sym(ChainMap::from_simplicial(permutation(S, {1, 2, 3, 4, 0})), ChainMap::identity(S));
}

TEST(Coincidence, CircleFormula) {
  // on S¹, λ(p_d, p_e) = e − d with this convention
  for (int d = -3; d <= 3; ++d) {
    for (int e = -3; e <= 3; ++e) {
      EXPECT_EQ(coincidence_number(circle_power_map(d).chain_map(), circle_power_map(e).chain_map()), e - d)
          << d << " " << e;
    }
  }
}

TEST(Coincidence, Errors) {
  const auto rp2 = builtin("rp2");
  try {
    coincidence_number(SimplicialMap::identity(rp2), SimplicialMap::identity(rp2));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotOrientable);
  }
  const auto S = builtin("sphere:1");
  const auto T = builtin("torus");
  EXPECT_THROW(coincidence_number(SimplicialMap::identity(S), SimplicialMap::identity(T)), Error);
  try {
    coincidence_number(SimplicialMap::constant(S, T, 0), SimplicialMap::constant(S, T, 1));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}
