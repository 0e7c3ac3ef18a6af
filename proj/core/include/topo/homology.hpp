#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "topo/chain.hpp"
#include "topo/complex.hpp"
#include "topo/exactlinalg.hpp"
#include "topo/field.hpp"

namespace topo {

struct HomologyGroup {
  int degree = 0;
  std::size_t betti = 0;
  /// Invariant factors > 1, in divisibility order.
  std::vector<Integer> torsion;

  bool is_zero() const { return betti == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2 + Z/2", "F2^3", ...
  std::string describe(const std::string& ring) const;
  bool operator==(const HomologyGroup& o) const {
    return degree == o.degree && betti == o.betti && torsion == o.torsion;
  }
};

/// H_q for q = 0..dim K. Over Z from invariant factors; over a field from ranks.
std::vector<HomologyGroup> homology(const SimplicialComplex& K, const Coefficients& coeff,
                                    const std::optional<SimplicialComplex>& rel = std::nullopt,
                                    bool reduced = false);
std::vector<HomologyGroup> homology(const ChainComplexRep& C, const Coefficients& coeff);

/// Rational Betti numbers b_0..b_dim.
std::vector<std::size_t> betti_numbers(const SimplicialComplex& K);
std::vector<std::size_t> betti_numbers(const SimplicialComplex& K, const Field& F);

/// Basis of H_q of a chain complex over a field: representative cycles z_j,
/// dual cocycles φ_i with ⟨φ_i, z_j⟩ = δ_ij, and coordinate maps for both.
class HomologyBasis {
 public:
  HomologyBasis(const ChainComplexRep& C, int q, Field F);

  int degree() const noexcept { return q_; }
  std::size_t dimension() const noexcept { return cycles_.size(); }
  const Field& field() const noexcept { return F_; }

  const std::vector<SparseVector>& cycles() const noexcept { return cycles_; }
  const std::vector<SparseVector>& cocycles() const noexcept { return cocycles_; }

  /// Coordinates of the class of a cycle. Throws InternalMismatch when
  /// `chain` is not a cycle.
  std::vector<Scalar> coordinates(const SparseVector& chain) const;
  /// Coordinates of the class of a cocycle: its values on the basis cycles.
  std::vector<Scalar> cocycle_coordinates(const SparseVector& cochain) const;

  SparseVector cycle_of(const std::vector<Scalar>& coords) const;
  SparseVector cocycle_of(const std::vector<Scalar>& coords) const;

 private:
  int q_;
  Field F_;
  std::size_t boundary_generators_ = 0;
  std::vector<std::size_t> generator_slot_;  // generator index -> basis position or npos
  Reducer span_;                             // boundaries, then basis cycles
  std::vector<SparseVector> cycles_;
  std::vector<SparseVector> cocycles_;
  IntMatrix boundary_;                       // ∂_q, to test cycles
};

/// All degrees 0..dim of a (non-relative, non-augmented) complex over a field.
class FieldHomology {
 public:
  FieldHomology(SimplicialComplex K, Field F);

  const SimplicialComplex& complex() const noexcept { return chains_.complex(); }
  const Field& field() const noexcept { return F_; }
  const ChainComplexRep& chains() const noexcept { return chains_; }
  int dim() const noexcept { return chains_.top_degree(); }

  /// Empty basis outside 0..dim.
  const HomologyBasis& basis(int q) const;
  std::size_t dimension(int q) const { return basis(q).dimension(); }

 private:
  Field F_;
  ChainComplexRep chains_;
  std::vector<HomologyBasis> bases_;
  std::optional<HomologyBasis> empty_;
};

/// H_q over Z with representatives taken from the Smith change of basis:
/// free generators span a complement of the torsion, torsion generators have
/// order d_k.
class IntegralHomology {
 public:
  IntegralHomology(const ChainComplexRep& C, int q);

  std::size_t rank() const noexcept { return free_.size(); }
  const std::vector<Integer>& torsion() const noexcept { return torsion_orders_; }
  const std::vector<IntVector>& free_generators() const noexcept { return free_; }
  const std::vector<IntVector>& torsion_generators() const noexcept { return torsion_gens_; }

  /// Free-part coordinates of a cycle. Throws InternalMismatch otherwise.
  IntVector coordinates(const IntVector& cycle) const;

 private:
  std::size_t n_ = 0;
  std::size_t boundary_rank_ = 0;  // rank of ∂_q
  std::size_t image_rank_ = 0;     // rank of ∂_{q+1} on cycles
  IntMatrix V_inv_;
  IntMatrix U_A_;
  IntMatrix boundary_;
  std::vector<IntVector> free_;
  std::vector<IntVector> torsion_gens_;
  std::vector<Integer> torsion_orders_;
};

/// Matrix of H_q(f) in the computed bases (rows: target basis). Over a field
/// the bases are those of FieldHomology; over Z, the free parts of
/// IntegralHomology.
ScalarMatrix induced_map(const ChainMap& f, int q, const Coefficients& coeff);
ScalarMatrix induced_map(const SimplicialMap& f, int q, const Coefficients& coeff);
/// Same, reusing precomputed field bases of source and target.
ScalarMatrix induced_map(const ChainMap& f, int q, const FieldHomology& source,
                         const FieldHomology& target);

struct EulerReport {
  long long by_counts = 0;
  long long by_betti = 0;
  long long by_lefschetz = 0;
  bool agree() const { return by_counts == by_betti && by_betti == by_lefschetz; }
};

/// Alternating simplex counts, alternating rational Betti numbers and the
/// Lefschetz number of the identity.
EulerReport euler_report(const SimplicialComplex& K);
/// Throws InternalMismatch when the three computations disagree.
long long euler_characteristic(const SimplicialComplex& K);

/// Outcome of a theorem check: each line is one identity that was tested.
struct VerificationReport {
  std::string title;
  std::vector<std::string> lines;
  bool ok = true;

  void check(bool condition, std::string line);
};

/// Fields used when none is specified: Q, F2, F3, F5.
std::vector<Field> default_fields();

/// Exactness of H(A) -> H(K) -> H(K,A) -> H(A) at every node. Uses the given
/// field or, for Z / nullopt, the default fields. Throws NotASubcomplex.
VerificationReport verify_les_pair(const SimplicialComplex& K, const SimplicialComplex& A,
                                   const std::optional<Coefficients>& coeff = std::nullopt);

/// Exactness of H(K1∩K2) -> H(K1)+H(K2) -> H(K) -> H(K1∩K2). Requires
/// K = K1 ∪ K2 simplex by simplex, else BadCover.
VerificationReport verify_mayer_vietoris(const SimplicialComplex& K, const SimplicialComplex& K1,
                                         const SimplicialComplex& K2,
                                         const std::optional<Coefficients>& coeff = std::nullopt);

/// dim H_n(K;F_p) = b_n + t_n(p) + t_{n-1}(p). Throws NotPrime.
VerificationReport verify_uct(const SimplicialComplex& K, unsigned long p);

/// dim H_n(K×L) = Σ_{i+j=n} dim H_i(K)·dim H_j(L) over the field.
VerificationReport verify_kunneth(const SimplicialComplex& K, const SimplicialComplex& L,
                                  const Coefficients& coeff = Coefficients::rationals());

}  // namespace topo
