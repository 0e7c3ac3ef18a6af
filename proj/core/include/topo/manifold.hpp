#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "topo/chain.hpp"
#include "topo/complex.hpp"
#include "topo/field.hpp"
#include "topo/homology.hpp"

namespace topo {

struct PseudomanifoldCheck {
  bool ok = false;
  std::vector<std::string> diagnostics;
};

/// Pure of dimension n, every (n-1)-simplex in exactly two n-simplices,
/// connected facet adjacency.
PseudomanifoldCheck is_closed_pseudomanifold(const SimplicialComplex& K, int n);

struct Orientation {
  int n = 0;
  /// Sign per n-simplex (index into simplices(n)) relative to ascending order.
  std::vector<int> signs;
};

/// Propagates signs from the least facet; nullopt when not orientable. The
/// result is cross-checked against rank H_n(K;Q). Throws NotPseudomanifold.
std::optional<Orientation> orient(const SimplicialComplex& K);

/// Every interior facet pair induces opposite signs on the shared face.
bool is_coherent(const SimplicialComplex& K, const Orientation& o);

struct FundamentalClass {
  int n = 0;
  IntVector chain;  // over simplices(n)
};

FundamentalClass fundamental_class(const SimplicialComplex& K, const Orientation& o);
/// Orients first. Throws NotOrientable / NotPseudomanifold.
FundamentalClass fundamental_class(const SimplicialComplex& K);

/// Σσ over F_2, a cycle for every closed pseudomanifold.
bool mod2_fundamental_class_is_cycle(const SimplicialComplex& K);

/// d with f_*(ζ_K) = d·ζ_L. Throws DimensionMismatch, NotOrientable.
long long degree(const ChainMap& f, const Orientation& oK, const Orientation& oL);
long long degree(const ChainMap& f);

struct PairingMatrix {
  int q = 0;
  ScalarMatrix matrix;  // rows: basis of H^q, cols: basis of H^{n-q}
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  bool nondegenerate() const { return rows == cols && rank == rows; }
};

/// M_ij = ⟨ζ, α_i ∪ β_j⟩ over Q for α_i ∈ H^q and β_j ∈ H^{n-q}.
PairingMatrix poincare_pairing(const SimplicialComplex& K, const Orientation& o, int q);
/// Same, over the given field homology of K.
PairingMatrix poincare_pairing(const FieldHomology& H, const FundamentalClass& zeta, int q);

struct ParityItem {
  std::string statement;
  bool applicable = false;
  bool pass = true;
};

struct ParityReport {
  long long euler = 0;
  int dim = 0;
  bool orientable = false;
  std::vector<ParityItem> items;
  bool ok() const;
};

/// dim odd ⇒ E = 0; dim ≡ 2 (mod 4) and orientable ⇒ E even.
ParityReport parity_checks(const SimplicialComplex& K);
/// E(∂X) is even, for X a pseudomanifold with boundary.
ParityReport boundary_parity_check(const SimplicialComplex& X);

struct SeparationReport {
  std::size_t ambient_vertices = 0;
  std::size_t embedded_vertices = 0;
  std::size_t components = 0;
  bool ok() const { return components == 2; }
};

/// Complement of A in Sd²K, A given as a subcomplex of K. Throws BadEmbedding
/// unless A is a closed (dim K - 1)-pseudomanifold.
SeparationReport separation_check(const SimplicialComplex& K, const SimplicialComplex& A);

/// The embedded sphere in ∂Δ^{n+1}: "equator" is the suspension of
/// ∂Δ^{n-1} on the vertices 2..n+1 with poles 0 and 1; "facet" is the
/// boundary of the facet {0..n}. Throws BadEmbedding for other names.
SimplicialComplex embedded_sphere(int n, const std::string& embed);
SeparationReport separation_check(int n, const std::string& embed);

}  // namespace topo
