#include "topo/pi1.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "topo/error.hpp"

namespace topo {

std::string GroupPresentation::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? "," : "") << generators[i];
  os << "| ";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    if (r) os << ',';
    if (relators[r].empty()) os << '1';
    for (std::size_t i = 0; i < relators[r].size(); ++i) {
      const auto& [g, e] = relators[r][i];
      os << (i ? "*" : "") << generators[g] << (e < 0 ? "^-1" : "");
    }
  }
  os << '>';
  return os.str();
}

std::string AbelianInvariants::describe() const {
  HomologyGroup h{1, free_rank, torsion};
  return h.describe("Z");
}

GroupPresentation edge_path_group(const SimplicialComplex& K, const std::optional<std::vector<Edge>>& tree) {
  if (K.component_count() > 1) fail(ErrorKind::Disconnected, "complex is not connected");
  const std::vector<Edge> T = tree ? *tree : (K.dim() >= 1 ? spanning_tree(K) : std::vector<Edge>{});
  if (!K.empty() && T.size() + 1 != K.vertex_count()) {
    fail(ErrorKind::InvalidMap, "tree does not span the vertices");
  }
  const std::set<Edge> in_tree(T.begin(), T.end());

  GroupPresentation P;
  std::map<Edge, std::size_t> gen;
  for (const Simplex& e : K.simplices(1)) {
    const Edge edge{e[0], e[1]};
    if (in_tree.count(edge)) continue;
    gen[edge] = P.generators.size();
    P.generators.push_back("g(" + K.token(e[0]) + "," + K.token(e[1]) + ")");
    P.generator_edges.push_back(edge);
  }
  for (const Simplex& t : K.simplices(2)) {
    Word w;
    auto letter = [&](VertexId a, VertexId b, int exponent) {
      auto it = gen.find({a, b});
      if (it != gen.end()) w.emplace_back(it->second, exponent);
    };
    letter(t[0], t[1], 1);
    letter(t[1], t[2], 1);
    letter(t[0], t[2], -1);
    P.relators.push_back(std::move(w));
  }
  return P;
}

AbelianInvariants abelianization(const GroupPresentation& P) {
  const std::size_t n = P.generators.size();
  // relator exponent sums as columns of an n x |R| matrix
  IntMatrix M(n, P.relators.size());
  for (std::size_t r = 0; r < P.relators.size(); ++r) {
    for (const auto& [g, e] : P.relators[r]) M.add_to(g, r, Integer(e));
  }
  const std::vector<Integer> factors = invariant_factors(M);
  AbelianInvariants inv;
  inv.free_rank = n - factors.size();
  for (const auto& d : factors) {
    if (d > 1) inv.torsion.push_back(d);
  }
  return inv;
}

AbelianInvariants first_homology(const SimplicialComplex& K) {
  const auto h = homology(K, Coefficients::integers());
  if (h.size() < 2) return {};
  return {h[1].betti, h[1].torsion};
}

VerificationReport verify_hurewicz(const SimplicialComplex& K) {
  const AbelianInvariants pi = abelianization(edge_path_group(K));
  const AbelianInvariants h1 = first_homology(K);
  VerificationReport report{"Hurewicz", {}, true};
  report.check(pi == h1, "abelianized pi1 = " + pi.describe() + ", H1 = " + h1.describe());
  return report;
}

Integer torsion_count(const AbelianInvariants& inv, long k) {
  if (k < 1) fail(ErrorKind::RangeError, "k must be at least 1");
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(k), inv.free_rank);
  for (const auto& m : inv.torsion) out *= gcd(Integer(k), m);
  return out;
}

}  // namespace topo
