#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topo/complex.hpp"
#include "topo/exactlinalg.hpp"
#include "topo/homology.hpp"

namespace topo {

/// Letter (generator index, ±1).
using Letter = std::pair<std::size_t, int>;
using Word = std::vector<Letter>;

struct GroupPresentation {
  /// Generator names "g(a,b)" for the non-tree edges {a < b}.
  std::vector<std::string> generators;
  std::vector<Edge> generator_edges;
  std::vector<Word> relators;

  /// `<g1,...| r1,...>`; words use `*` and `^-1`, the empty word is `1`.
  std::string to_string() const;
};

struct AbelianInvariants {
  std::size_t free_rank = 0;
  /// Invariant factors > 1 in divisibility order.
  std::vector<Integer> torsion;

  bool operator==(const AbelianInvariants& o) const { return free_rank == o.free_rank && torsion == o.torsion; }
  std::string describe() const;
};

/// G(K,T) for the breadth-first tree (or the given tree): one generator per
/// non-tree edge, one relator g_ab·g_bc·g_ac^-1 per triangle {a<b<c}, tree
/// generators deleted. Throws Disconnected.
GroupPresentation edge_path_group(const SimplicialComplex& K,
                                  const std::optional<std::vector<Edge>>& tree = std::nullopt);

/// Cokernel of the relator exponent matrix.
AbelianInvariants abelianization(const GroupPresentation& P);

/// H_1(K;Z) in the same shape.
AbelianInvariants first_homology(const SimplicialComplex& K);

/// abelianization(π1) = H_1(K;Z). Throws Disconnected.
VerificationReport verify_hurewicz(const SimplicialComplex& K);

/// #{x : kx = 0} = k^s · Π gcd(k, m_i). Throws RangeError for k < 1.
Integer torsion_count(const AbelianInvariants& inv, long k);

}  // namespace topo
