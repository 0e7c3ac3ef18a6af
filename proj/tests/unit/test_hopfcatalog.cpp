#include <gtest/gtest.h>

#include <numeric>

#include "topo/cohomology.hpp"
#include "topo/corpus.hpp"
#include "topo/error.hpp"
#include "topo/homology.hpp"
#include "topo/hopfcatalog.hpp"

using namespace topo;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Poincaré polynomial by multiplying out (1 + t^g) one factor at a time.
std::vector<Integer> expand(const std::vector<int>& degrees) {
  std::vector<Integer> p{1};
  for (int g : degrees) {
    std::vector<Integer> next(p.size() + static_cast<std::size_t>(g), 0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k] += p[k];
      next[k + static_cast<std::size_t>(g)] += p[k];
    }
    p = std::move(next);
  }
  return p;
}

long long group_dimension(LieType t, int l) {
  switch (t) {
    case LieType::A: return l * (l + 2);
    case LieType::B:
    case LieType::C: return l * (2 * l + 1);
    case LieType::D: return l * (2 * l - 1);
    case LieType::E6: return 78;
    case LieType::E7: return 133;
    case LieType::E8: return 248;
    case LieType::F4: return 52;
    case LieType::G2: return 14;
  }
  return -1;
}

std::vector<ExteriorModel> corpus_models() {
  std::vector<ExteriorModel> out{ExteriorModel(std::vector<int>{}), ExteriorModel({1}), ExteriorModel({1, 1}), ExteriorModel({1, 1, 1}),
                                 ExteriorModel({3}), ExteriorModel({3, 5}), ExteriorModel({3, 11}),
                                 ExteriorModel({1, 3, 5, 7})};
  for (const auto& e : full_catalog(5)) out.push_back(e.model);
  return out;
}

}  // namespace

TEST(ExteriorModel, Construction) {
  const ExteriorModel m({5, 3, 1}, "x");
  EXPECT_EQ(m.degrees(), (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(m.rank(), 3u);
  EXPECT_EQ(m.dimension(), 9);
  EXPECT_THROW(ExteriorModel({2}), Error);
  EXPECT_THROW(ExteriorModel({-1}), Error);
  const auto t = tensor(ExteriorModel({3}, "a"), ExteriorModel({1}, "b"));
  EXPECT_EQ(t.degrees(), (std::vector<int>{1, 3}));
  EXPECT_EQ(t.label(), "a x b");
}

TEST(Poincare, Examples) {
  EXPECT_EQ(poincare_polynomial(ExteriorModel(std::vector<int>{})), ints({1}));
  EXPECT_EQ(poincare_polynomial(ExteriorModel({1, 1})), ints({1, 2, 1}));
  const auto g2 = poincare_polynomial(ExteriorModel({3, 11}));
  ASSERT_EQ(g2.size(), 15u);
  for (std::size_t k = 0; k < g2.size(); ++k) {
    EXPECT_EQ(g2[k], (k == 0 || k == 3 || k == 11 || k == 14) ? 1 : 0) << k;
  }
}

TEST(Poincare, MatchesExpansionAndIsPalindromic) {
  for (const auto& m : corpus_models()) {
    const auto p = poincare_polynomial(m);
    EXPECT_EQ(p, expand(m.degrees())) << m.label();
    EXPECT_EQ(p.size(), static_cast<std::size_t>(m.dimension() + 1));
    for (std::size_t k = 0; k < p.size(); ++k) EXPECT_EQ(p[k], p[p.size() - 1 - k]) << m.label();
    Integer total = std::accumulate(p.begin(), p.end(), Integer(0));
    EXPECT_EQ(total, Integer(1) << static_cast<mp_bitcnt_t>(m.rank()));
  }
}

TEST(Poincare, ToriAgreeWithSimplicialBetti) {
  for (int n = 1; n <= 3; ++n) {
    const auto p = poincare_polynomial(ExteriorModel(std::vector<int>(static_cast<std::size_t>(n), 1)));
    const auto b = betti_numbers(builtin("torus:" + std::to_string(n)));
    ASSERT_EQ(p.size(), b.size());
    for (std::size_t q = 0; q < b.size(); ++q) EXPECT_EQ(p[q], b[q]) << n;
  }
}

TEST(PowerMap, Examples) {
  EXPECT_EQ(power_map_lefschetz(ExteriorModel({3, 5}), 1), 0);
  EXPECT_EQ(power_map_lefschetz(ExteriorModel(std::vector<int>{}), 1), 1);
  EXPECT_EQ(power_map_lefschetz(ExteriorModel({1, 1}), 2), 1);
  EXPECT_EQ(power_map_lefschetz(ExteriorModel({3, 11}), -1), 4);
}

TEST(PowerMap, EnumerationMatchesClosedForm) {
  for (const auto& m : corpus_models()) {
    for (long l = -5; l <= 5; ++l) {
      const auto t = power_map_trace(m, l);
      EXPECT_TRUE(t.agree()) << m.label() << " l=" << l;
      Integer expected = 1;
      for (std::size_t i = 0; i < m.rank(); ++i) expected *= 1 - l;
      EXPECT_EQ(t.enumerated, expected);
    }
  }
}

TEST(PowerMap, CircleModelDoubling) {
  EXPECT_EQ(power_map_lefschetz(ExteriorModel({1}), 2), -1);
}

TEST(Comultiplication, Primitive) {
  const ExteriorModel m({1, 3});
  const auto e = comultiplication_primitive(m, 1);
  ASSERT_EQ(e.terms.size(), 2u);
  EXPECT_EQ(e.to_string(m), "y2(x)1 + 1(x)y2");
  EXPECT_THROW(comultiplication_primitive(m, 2), Error);
}

TEST(Comultiplication, ExteriorSigns) {
  const ExteriorModel m({1, 1});
  const ExteriorElement y1{{1, 1}}, y2{{2, 1}};
  EXPECT_EQ(exterior_multiply(m, y1, y2), (ExteriorElement{{3, 1}}));
  EXPECT_EQ(exterior_multiply(m, y2, y1), (ExteriorElement{{3, -1}}));
  EXPECT_TRUE(exterior_multiply(m, y1, y1).empty());
  EXPECT_EQ(format_element(m, exterior_multiply(m, y2, y1)), "-y1^y2");
}

TEST(PowerMapOnPrimitive, Examples) {
  const ExteriorModel m({3, 11});
  EXPECT_TRUE(power_map_on_primitive(m, 0, 0).empty());
  EXPECT_EQ(power_map_on_primitive(m, 0, 1), (ExteriorElement{{1, 1}}));
  EXPECT_EQ(power_map_on_primitive(m, 1, 5), (ExteriorElement{{2, 5}}));
  EXPECT_EQ(power_map_on_primitive(m, 1, -3), (ExteriorElement{{2, -3}}));
  EXPECT_THROW(power_map_on_primitive(m, 2, 1), Error);
}

TEST(PowerMapOnPrimitive, MultiplicationByK) {
  for (const auto& m : corpus_models()) {
    if (m.rank() > 8) continue;
    const auto check = check_primitive_power_maps(m, 10);
    EXPECT_TRUE(check.ok()) << m.label();
    EXPECT_EQ(check.checked, m.rank() * 21);
  }
}

TEST(Catalog, Examples) {
  const auto a2 = catalog(LieType::A, 2);
  EXPECT_EQ(a2.model.degrees(), (std::vector<int>{3, 5}));
  EXPECT_EQ(a2.dim, 8);
  EXPECT_EQ(a2.rank, 2);
  EXPECT_TRUE(a2.consistent());
  EXPECT_EQ(a2.name(), "A_2");
  const auto f4 = catalog(LieType::F4);
  EXPECT_EQ(f4.model.degrees(), (std::vector<int>{3, 11, 15, 23}));
  EXPECT_EQ(f4.model.dimension(), 52);
  const auto d4 = catalog(LieType::D, 4);
  EXPECT_EQ(d4.model.degrees(), (std::vector<int>{3, 7, 7, 11}));
  EXPECT_EQ(d4.dim, 28);
  EXPECT_TRUE(d4.consistent());
  EXPECT_EQ(catalog(LieType::G2).model.degrees(), (std::vector<int>{3, 11}));
  EXPECT_EQ(catalog(LieType::E6).model.degrees(), (std::vector<int>{3, 9, 11, 15, 17, 23}));
  EXPECT_EQ(catalog(LieType::E7).model.degrees(), (std::vector<int>{3, 11, 15, 19, 23, 27, 35}));
  EXPECT_EQ(catalog(LieType::E8).model.degrees(), (std::vector<int>{3, 15, 23, 27, 35, 39, 47, 59}));
  EXPECT_EQ(catalog(LieType::B, 3).model.degrees(), (std::vector<int>{3, 7, 11}));
  EXPECT_EQ(catalog(LieType::C, 3).model.degrees(), (std::vector<int>{3, 7, 11}));
}

TEST(Catalog, RangeErrors) {
  EXPECT_THROW(catalog(LieType::A, 0), Error);
  EXPECT_THROW(catalog(LieType::B, 1), Error);
  EXPECT_THROW(catalog(LieType::C, 2), Error);
  EXPECT_THROW(catalog(LieType::D, 3), Error);
  EXPECT_NO_THROW(catalog(LieType::D, 4));
  EXPECT_EQ(parse_lie_type("E7"), LieType::E7);
  EXPECT_THROW(parse_lie_type("H3"), Error);
  EXPECT_TRUE(has_parameter(LieType::B));
  EXPECT_FALSE(has_parameter(LieType::F4));
}

TEST(Catalog, ConsistentForEveryTypeUpToEight) {
  for (const auto& e : full_catalog(8)) {
    const auto& d = e.model.degrees();
    const long long sum = std::accumulate(d.begin(), d.end(), 0LL);
    EXPECT_EQ(sum, group_dimension(e.type, e.l)) << e.name();
    EXPECT_EQ(e.dim, group_dimension(e.type, e.l)) << e.name();
    EXPECT_EQ((e.dim - e.rank) % 2, 0) << e.name();
    EXPECT_EQ(static_cast<std::size_t>(e.rank), d.size()) << e.name();
    EXPECT_TRUE(e.consistent()) << e.name();
  }
}

TEST(Catalog, StrictModeFlagsTheElidedGenerators) {
  for (const auto& e : full_catalog(8, true)) {
    const bool elided = e.type == LieType::D || e.type == LieType::E8;
    EXPECT_EQ(e.consistent(), !elided) << e.name();
    if (elided) {
      EXPECT_FALSE(e.sum_matches) << e.name();
      EXPECT_FALSE(e.count_matches) << e.name();
    }
  }
  EXPECT_EQ(catalog(LieType::D, 5, true).model.degrees(), (std::vector<int>{3, 7, 11, 15}));
  EXPECT_EQ(catalog(LieType::E8, 0, true).model.rank(), 7u);
}

TEST(Catalog, TorsionTable) {
  EXPECT_TRUE(torsion_free_mod(LieType::A, 2));
  EXPECT_FALSE(torsion_free_mod(LieType::G2, 2));
  EXPECT_TRUE(torsion_free_mod(LieType::G2, 3));
  EXPECT_FALSE(torsion_free_mod(LieType::E8, 5));
  EXPECT_TRUE(torsion_free_mod(LieType::E8, 7));
  EXPECT_THROW(torsion_free_mod(LieType::A, 4), Error);
}

TEST(GroupPrediction, Examples) {
  const auto torus = group_prediction(GroupModel::make(2, {}));
  EXPECT_EQ(torus.torsion_points(5), 25);
  EXPECT_EQ(torus.poincare, ints({1, 2, 1}));
  const auto g2 = group_prediction(GroupModel::make(0, {catalog(LieType::G2)}));
  EXPECT_EQ(g2.rank, 2);
  EXPECT_EQ(g2.euler, 0);
  EXPECT_EQ(g2.poincare, poincare_polynomial(ExteriorModel({3, 11})));
  const auto u2 = group_prediction(GroupModel::make(1, {catalog(LieType::A, 1)}));
  EXPECT_EQ(u2.model.degrees(), (std::vector<int>{1, 3}));
  EXPECT_EQ(u2.dim, 4);
  EXPECT_TRUE(u2.parity_matches);
  EXPECT_EQ(u2.torsion_points(1), 1);
  EXPECT_THROW(u2.torsion_points(0), Error);
  EXPECT_THROW(GroupModel::make(-1, {}), Error);
  const auto trivial = group_prediction(GroupModel::make(0, {}));
  EXPECT_EQ(trivial.euler, 1);
}

TEST(GroupPrediction, HurewiczCountOnTori) {
  for (int n = 1; n <= 3; ++n) {
    const auto g = group_prediction(GroupModel::make(n, {}));
    for (long k = 2; k <= 6; ++k) {
      Integer kn = 1;
      for (int i = 0; i < n; ++i) kn *= k;
      EXPECT_EQ(g.torsion_points(k), kn);
    }
  }
}

TEST(GroupPrediction, ProductsOfFactors) {
  const auto g = group_prediction(GroupModel::make(1, {catalog(LieType::A, 2), catalog(LieType::G2)}));
  EXPECT_EQ(g.rank, 5);
  EXPECT_EQ(g.dim, 1 + 8 + 14);
  EXPECT_EQ(g.euler, 0);
  EXPECT_TRUE(g.parity_matches);
  EXPECT_EQ(g.poincare, expand({1, 3, 5, 3, 11}));
}
