// One line per acceptance criterion; exit status 0 only when every line passes.

#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "topo/cohomology.hpp"
#include "topo/corpus.hpp"
#include "topo/error.hpp"
#include "topo/homology.hpp"
#include "topo/hopfcatalog.hpp"
#include "topo/lefschetz.hpp"
#include "topo/manifold.hpp"
#include "topo/pi1.hpp"

using namespace topo;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::string&)> check;
};

#define REQUIRE(cond, what)        \
  do {                             \
    if (!(cond)) {                 \
      detail = (what);             \
      return false;                \
    }                              \
  } while (0)

std::string name_of(const char* base, int n) { return std::string(base) + std::to_string(n); }

SimplicialMap permutation(const SimplicialComplex& K, const std::vector<int>& p) {
  std::map<std::string, std::string> m;
  for (std::size_t i = 0; i < p.size(); ++i) m[std::to_string(i)] = std::to_string(p[i]);
  return SimplicialMap::from_tokens(K, K, m);
}

std::vector<Scalar> unit_vector(std::size_t n, std::size_t i) {
  std::vector<Scalar> v(n, 0);
  v[i] = 1;
  return v;
}

bool sphere_homology(std::string& detail) {
  for (int n = 1; n <= 4; ++n) {
    const auto H = homology(builtin(name_of("sphere:", n)), Coefficients::integers(), std::nullopt, true);
    for (int q = 0; q <= n; ++q) {
      const bool expect_z = q == n;
      const bool is_z = H[static_cast<std::size_t>(q)].betti == 1 && H[static_cast<std::size_t>(q)].torsion.empty();
      REQUIRE(expect_z ? is_z : H[static_cast<std::size_t>(q)].is_zero(), name_of("sphere:", n) + " degree " + std::to_string(q));
    }
  }
  return true;
}

bool torus_torsion(std::string& detail) {
  for (int n = 1; n <= 3; ++n) {
    const auto inv = abelianization(edge_path_group(builtin(name_of("torus:", n))));
    REQUIRE(inv.free_rank == static_cast<std::size_t>(n) && inv.torsion.empty(), name_of("torus:", n) + " pi1ab = " + inv.describe());
    for (long k = 2; k <= 6; ++k) {
      Integer kn = 1;
      for (int i = 0; i < n; ++i) kn *= k;
      REQUIRE(torsion_count(inv, k) == kn, name_of("torus:", n) + " k=" + std::to_string(k));
    }
  }
  return true;
}

bool euler_vanishing(std::string& detail) {
  std::vector<std::string> names{"torus:1", "torus:2", "torus:3", "klein"};
  for (const auto& name : names) {
    const auto r = euler_report(builtin(name));
    REQUIRE(r.agree() && r.by_counts == 0, name + " E = " + std::to_string(r.by_counts));
  }
  return true;
}

bool power_map_traces(std::string& detail) {
  for (std::size_t r = 0; r <= 8; ++r) {
    std::vector<int> degrees;
    for (std::size_t i = 0; i < r; ++i) degrees.push_back(static_cast<int>(2 * i + 1));
    const ExteriorModel m(degrees);
    for (long l = -5; l <= 5; ++l) {
      const auto t = power_map_trace(m, l);
      Integer expected = 1;
      for (std::size_t i = 0; i < r; ++i) expected *= 1 - l;
      REQUIRE(t.agree() && t.enumerated == expected, "r=" + std::to_string(r) + " l=" + std::to_string(l));
    }
  }
  REQUIRE(lefschetz_number(circle_power_map(2).chain_map()) == -1, "doubling on the circle");
  return true;
}

bool torus_ring(std::string& detail) {
  for (int n = 1; n <= 3; ++n) {
    const auto K = builtin(name_of("torus:", n));
    const auto ring = ring_structure(K, Coefficients::rationals());
    const auto ext = exterior_rank_degrees(ring);
    const auto* e = std::get_if<ExteriorRank>(&ext);
    REQUIRE(e && e->r == static_cast<std::size_t>(n) &&
                e->degrees == std::vector<int>(static_cast<std::size_t>(n), 1),
            name_of("torus:", n) + " is not a free exterior algebra on degree-1 generators");
    const auto S = ring.space();
    CohomologyClass top = S->unit();
    for (int i = 0; i < n; ++i) top = cup(top, S->basis_cohomology(1, static_cast<std::size_t>(i)));
    const auto zeta = fundamental_class(K);
    const auto z = S->class_of_cycle(n, sparse::from_integers(S->field(), zeta.chain));
    const Scalar v = kronecker(top, z);
    REQUIRE(v == 1 || v == -1, name_of("torus:", n) + " top product evaluates to " + v.get_str());
  }
  return true;
}

bool cup_laws(std::string& detail) {
  for (const auto& [name, K] : full_corpus()) {
    for (const auto& coeff : {Coefficients::rationals(), Coefficients::prime(2)}) {
      const auto ring = ring_structure(K, coeff);
      const Field F = coeff.field();
      const int n = ring.dim();
      for (int p = 0; p <= n; ++p) {
        for (int q = 0; p + q <= n; ++q) {
          for (std::size_t i = 0; i < ring.dimension(p); ++i) {
            for (std::size_t j = 0; j < ring.dimension(q); ++j) {
              auto flipped = ring.product(q, j, p, i);
              if ((p * q) % 2) {
                for (auto& x : flipped) x = F.neg(x);
              }
              REQUIRE(ring.product(p, i, q, j) == flipped, name + " skew-commutativity over " + coeff.name());
              for (int r = 0; p + q + r <= n; ++r) {
                for (std::size_t k = 0; k < ring.dimension(r); ++k) {
                  const auto left = ring.multiply(p + q, ring.product(p, i, q, j), r, unit_vector(ring.dimension(r), k));
                  const auto right = ring.multiply(p, unit_vector(ring.dimension(p), i), q + r, ring.product(q, j, r, k));
                  REQUIRE(left == right, name + " associativity over " + coeff.name());
                }
              }
            }
          }
        }
      }
    }
  }
  return true;
}

bool hopf_trace(std::string& detail) {
  std::size_t maps = 0;
  auto check = [&](const ChainMap& f, const std::string& what) {
    ++maps;
    return hopf_trace_check(f).agree() ? std::string() : what;
  };
  std::vector<std::string> failures;
  for (const auto& [name, K] : full_corpus()) failures.push_back(check(ChainMap::identity(K), name + " identity"));
  const auto S2 = builtin("sphere:2");
  std::vector<int> p{0, 1, 2, 3};
  do failures.push_back(check(ChainMap::from_simplicial(permutation(S2, p)), "sphere:2 permutation"));
  while (std::next_permutation(p.begin(), p.end()));
  std::mt19937_64 rng(15);
  const auto T = builtin("torus");
  std::uniform_int_distribution<int> unit(1, 6), shift(0, 6);
  for (int trial = 0; trial < 10; ++trial) {
    const int a = unit(rng), b = shift(rng);
    std::map<std::string, std::string> m;
    for (int i = 0; i < 7; ++i) m[std::to_string(i)] = std::to_string((a * i + b) % 7);
    failures.push_back(check(ChainMap::from_simplicial(SimplicialMap::from_tokens(T, T, m)), "torus affine map"));
  }
  for (int d = -3; d <= 3; ++d) failures.push_back(check(circle_power_map(d).chain_map(), "circle power map"));
  failures.push_back(check(ChainMap::from_simplicial(antipodal_involution(2)), "antipodal involution"));
  failures.push_back(check(ChainMap::from_simplicial(torus_translation()), "torus translation"));
  for (const auto& f : failures) REQUIRE(f.empty(), f);
  REQUIRE(maps >= 20, "only " + std::to_string(maps) + " maps");
  detail = std::to_string(maps) + " maps";
  return true;
}

bool poincare_duality(std::string& detail) {
  std::vector<std::pair<std::string, SimplicialComplex>> manifolds;
  for (int n = 1; n <= 3; ++n) manifolds.emplace_back(name_of("sphere:", n), builtin(name_of("sphere:", n)));
  for (int n = 1; n <= 3; ++n) manifolds.emplace_back(name_of("torus:", n), builtin(name_of("torus:", n)));
  manifolds.emplace_back("torus", builtin("torus"));
  manifolds.emplace_back("sphere:1 x sphere:2", product(builtin("sphere:1"), builtin("sphere:2")));
  manifolds.emplace_back("torus x sphere:1", product(builtin("torus"), builtin("sphere:1")));
  for (const auto& [name, K] : manifolds) {
    const auto o = orient(K);
    REQUIRE(o.has_value(), name + " not orientable");
    const FieldHomology H(K, Field::rationals());
    const auto zeta = fundamental_class(K, *o);
    const auto b = betti_numbers(K);
    for (int q = 0; q <= K.dim(); ++q) {
      REQUIRE(poincare_pairing(H, zeta, q).nondegenerate(), name + " pairing degenerate at q=" + std::to_string(q));
      REQUIRE(b[static_cast<std::size_t>(q)] == b[static_cast<std::size_t>(K.dim() - q)], name + " Betti numbers not palindromic");
    }
  }
  return true;
}

bool orientability(std::string& detail) {
  const auto T = builtin("torus");
  REQUIRE(orient(T).has_value(), "torus not orientable");
  const auto HT = homology(T, Coefficients::integers());
  REQUIRE(HT[2].betti == 1 && HT[2].torsion.empty(), "H_2(torus) != Z");
  for (const auto& name : {"rp2", "klein"}) {
    const auto K = builtin(name);
    REQUIRE(!orient(K).has_value(), std::string(name) + " orientable");
    bool threw = false;
    try {
      fundamental_class(K);
    } catch (const Error& e) {
      threw = e.kind() == ErrorKind::NotOrientable;
    }
    REQUIRE(threw, std::string(name) + " fundamental class did not report NotOrientable");
    REQUIRE(homology(K, Coefficients::integers())[2].is_zero(), std::string(name) + " H_2(Z) != 0");
    REQUIRE(homology(K, Coefficients::prime(2))[2].betti == 1, std::string(name) + " H_2(F2) != F2");
    REQUIRE(mod2_fundamental_class_is_cycle(K), std::string(name) + " mod-2 class is not a cycle");
  }
  return true;
}

bool exact_sequences(std::string& detail) {
  std::vector<VerificationReport> reports;
  const auto T = builtin("torus");
  const auto loop = build_complex({{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"0", "6"}});
  const auto S2 = builtin("sphere:2");
  const auto equator = build_complex({{"0", "2"}, {"2", "1"}, {"1", "3"}, {"0", "3"}});
  reports.push_back(verify_les_pair(builtin("simplex:2"), builtin("sphere:1")));
  reports.push_back(verify_les_pair(builtin("moebius"), boundary_complex(builtin("moebius"))));
  reports.push_back(verify_les_pair(builtin("cylinder"), boundary_complex(builtin("cylinder"))));
  reports.push_back(verify_les_pair(T, loop));
  reports.push_back(verify_les_pair(S2, equator));
  auto halves = [](const SimplicialComplex& K) {
    const auto& facets = K.simplices(K.dim());
    std::vector<Simplex> a(facets.begin(), facets.begin() + static_cast<std::ptrdiff_t>(facets.size() / 2));
    std::vector<Simplex> b(facets.begin() + static_cast<std::ptrdiff_t>(facets.size() / 2), facets.end());
    return std::make_pair(subcomplex_from(K, a), subcomplex_from(K, b));
  };
  for (const auto& name : {"sphere:2", "torus", "klein"}) {
    const auto K = builtin(name);
    const auto [A, B] = halves(K);
    reports.push_back(verify_mayer_vietoris(K, A, B));
  }
  for (const auto& name : {"rp2", "klein"}) {
    for (unsigned long p : {2UL, 3UL, 5UL}) reports.push_back(verify_uct(builtin(name), p));
  }
  const auto S1 = builtin("sphere:1");
  for (const auto& name : {"sphere:1", "rp2", "klein"}) {
    for (const auto& coeff : {Coefficients::rationals(), Coefficients::prime(2)}) {
      reports.push_back(verify_kunneth(builtin(name), S1, coeff));
    }
  }
  for (const auto& r : reports) REQUIRE(r.ok, r.title);
  detail = std::to_string(reports.size()) + " reports";
  return true;
}

bool hurewicz(std::string& detail) {
  for (const auto& [name, K] : full_corpus()) {
    REQUIRE(K.component_count() == 1, name + " disconnected");
    REQUIRE(verify_hurewicz(K).ok, name);
  }
  return true;
}

bool jordan_brouwer(std::string& detail) {
  for (const auto& embed : {"equator", "facet"}) {
    const auto r = separation_check(2, embed);
    REQUIRE(r.components == 2, std::string(embed) + ": " + std::to_string(r.components) + " components");
  }
  return true;
}

bool catalog_consistency(std::string& detail) {
  for (const auto& e : full_catalog(8)) REQUIRE(e.consistent(), e.name() + " inconsistent");
  std::vector<std::string> flagged;
  for (const auto& e : full_catalog(8, true)) {
    if (!e.consistent()) flagged.push_back(e.name());
    const bool expect_flag = e.type == LieType::D || e.type == LieType::E8;
    REQUIRE(e.consistent() != expect_flag, e.name() + " strict flag");
  }
  std::ostringstream os;
  os << "strict flags:";
  for (const auto& f : flagged) os << ' ' << f;
  detail = os.str();
  return true;
}

bool parity(std::string& detail) {
  const auto t3 = parity_checks(builtin("torus:3"));
  REQUIRE(t3.ok() && t3.euler == 0, "torus:3");
  for (const auto& name : {"sphere:2", "torus", "torus:2"}) {
    const auto r = parity_checks(builtin(name));
    REQUIRE(r.ok() && r.orientable && r.euler % 2 == 0, name);
  }
  const auto solid = product(builtin("cylinder"), builtin("sphere:1"));
  const auto b = boundary_parity_check(solid);
  REQUIRE(b.ok() && b.items.front().applicable && b.euler % 2 == 0, "cylinder x circle boundary");
  const auto slab = boundary_parity_check(product(builtin("cylinder"), builtin("simplex:1")));
  REQUIRE(slab.ok() && slab.items.front().applicable, "cylinder x interval boundary");
  return true;
}

bool determinism(std::string& detail) {
  const std::vector<std::vector<std::string>> commands{
      {"homology", "--builtin", "torus", "--coeff", "Z"},
      {"cohomology", "--builtin", "rp2"},
      {"ring", "--builtin", "torus:2"},
      {"euler", "--builtin", "sphere:2"},
      {"pi1", "--builtin", "klein"},
      {"hurewicz", "--builtin", "torus"},
      {"orient", "--builtin", "rp2"},
      {"duality", "--builtin", "torus"},
      {"degree", "--builtin", "sphere:1", "--map", "power:2"},
      {"lefschetz", "--builtin", "torus", "--map", "translation"},
      {"coincidence", "--builtin", "sphere:1", "--map", "power:2", "--map", "power:3"},
      {"separation", "--dim", "2", "--embed", "equator"},
      {"kunneth", "--builtin", "sphere:1", "--builtin", "rp2"},
      {"uct", "--builtin", "klein"},
      {"les", "--builtin", "moebius"},
      {"mv", "--builtin", "sphere:1", "--builtin", "simplex:2"},
      {"product", "--builtin", "sphere:1", "--builtin", "simplex:1"},
      {"subdivide", "--builtin", "sphere:2"},
      {"catalog"},
      {"catalog", "--strict-paper"},
      {"group-predict", "--center", "1", "--factor", "A1"},
      {"torsion", "--builtin", "torus", "--k", "3"},
      {"homology", "--builtin", "torus", "--format", "tsv"},
  };
  for (const auto& c : commands) {
    std::string first;
    for (int rep = 0; rep < 3; ++rep) {
      std::ostringstream out, err;
      cli::run(c, out, err);
      if (rep == 0) {
        first = out.str();
        REQUIRE(!first.empty(), c[0] + " produced no output");
      } else {
        REQUIRE(out.str() == first, c[0] + " output differs between runs");
      }
    }
  }
  detail = std::to_string(commands.size()) + " commands x 3";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "sphere homology", sphere_homology},
      {2, "torus torsion theorem", torus_torsion},
      {3, "Euler vanishing", euler_vanishing},
      {4, "power-map traces", power_map_traces},
      {5, "cohomology ring of the torus", torus_ring},
      {6, "cup-product laws", cup_laws},
      {7, "Hopf trace", hopf_trace},
      {8, "Poincare duality", poincare_duality},
      {9, "orientability trichotomy", orientability},
      {10, "exact sequences", exact_sequences},
      {11, "Hurewicz", hurewicz},
      {12, "Jordan-Brouwer separation", jordan_brouwer},
      {13, "catalog consistency", catalog_consistency},
      {14, "parity corollaries", parity},
      {15, "determinism", determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    failures += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << '\n';
  }
  return failures == 0 ? 0 : 1;
}
