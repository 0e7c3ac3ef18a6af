#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "topo/chain.hpp"
#include "topo/homology.hpp"

namespace topo {

/// H^q for q = 0..dim from the coboundaries δ^q = ∂_{q+1}^T. Over Z the
/// torsion of H^q is that of H_{q-1}.
std::vector<HomologyGroup> cohomology_groups(const SimplicialComplex& K, const Coefficients& coeff,
                                             const std::optional<SimplicialComplex>& rel = std::nullopt);

/// δ^q as an integer matrix (rank(q+1) x rank(q)).
IntMatrix coboundary(const ChainComplexRep& C, int q);

class HomologyClass;
class CohomologyClass;

/// Shared basis data for classes on one complex over one field.
class ClassSpace : public std::enable_shared_from_this<ClassSpace> {
 public:
  static std::shared_ptr<const ClassSpace> create(const SimplicialComplex& K, const Field& F);

  const FieldHomology& homology() const noexcept { return H_; }
  const SimplicialComplex& complex() const noexcept { return H_.complex(); }
  const Field& field() const noexcept { return H_.field(); }
  int dim() const noexcept { return H_.dim(); }

  HomologyClass homology_class(int q, std::vector<Scalar> coords) const;
  CohomologyClass cohomology_class(int q, std::vector<Scalar> coords) const;
  /// Class of a cycle / cocycle given in simplex coordinates.
  HomologyClass class_of_cycle(int q, const SparseVector& chain) const;
  CohomologyClass class_of_cocycle(int q, const SparseVector& cochain) const;
  HomologyClass basis_homology(int q, std::size_t i) const;
  CohomologyClass basis_cohomology(int q, std::size_t i) const;
  /// The class of the constant cocycle 1 on vertices.
  CohomologyClass unit() const;

 private:
  ClassSpace(const SimplicialComplex& K, const Field& F) : H_(K, F) {}
  FieldHomology H_;
};

class HomologyClass {
 public:
  int degree() const noexcept { return q_; }
  const std::vector<Scalar>& coordinates() const noexcept { return coords_; }
  const SparseVector& representative() const noexcept { return rep_; }
  const std::shared_ptr<const ClassSpace>& space() const noexcept { return space_; }
  bool is_zero() const;

 private:
  friend class ClassSpace;
  std::shared_ptr<const ClassSpace> space_;
  int q_ = 0;
  std::vector<Scalar> coords_;
  SparseVector rep_;
};

class CohomologyClass {
 public:
  int degree() const noexcept { return q_; }
  const std::vector<Scalar>& coordinates() const noexcept { return coords_; }
  const SparseVector& representative() const noexcept { return rep_; }
  const std::shared_ptr<const ClassSpace>& space() const noexcept { return space_; }
  bool is_zero() const;
  /// Set when produced by a cup product whose degree exceeds dim K.
  bool degree_overflow() const noexcept { return overflow_; }

 private:
  friend class ClassSpace;
  friend CohomologyClass cup(const CohomologyClass&, const CohomologyClass&);
  std::shared_ptr<const ClassSpace> space_;
  int q_ = 0;
  std::vector<Scalar> coords_;
  SparseVector rep_;
  bool overflow_ = false;
};

/// ⟨φ, z⟩. Throws DegreeMismatch; DimensionMismatch for different spaces.
Scalar kronecker(const CohomologyClass& phi, const HomologyClass& z);

/// Alexander–Whitney: (φ∪θ)[v0..v_{p+q}] = φ[v0..vp]·θ[vp..v_{p+q}].
CohomologyClass cup(const CohomologyClass& phi, const CohomologyClass& theta);

/// z ∩ φ = Σ z(σ)·φ[v0..vp]·[vp..v_{p+q}]. Throws DegreeMismatch.
HomologyClass cap(const HomologyClass& z, const CohomologyClass& phi);

/// Cochain-level cup product of a p-cochain and a q-cochain.
SparseVector cup_cochain(const SimplicialComplex& K, const Field& F, int p, const SparseVector& phi, int q,
                         const SparseVector& theta);

class CohomologyRing {
 public:
  CohomologyRing(std::shared_ptr<const ClassSpace> space);

  const Field& field() const noexcept { return space_->field(); }
  int dim() const noexcept { return space_->dim(); }
  std::size_t dimension(int q) const;
  std::vector<std::size_t> dimensions() const;
  const std::shared_ptr<const ClassSpace>& space() const noexcept { return space_; }

  /// Coordinates of e_i^p ∪ e_j^q in degree p+q (empty above dim).
  const std::vector<Scalar>& product(int p, std::size_t i, int q, std::size_t j) const;
  /// Bilinear extension to arbitrary coordinate vectors.
  std::vector<Scalar> multiply(int p, const std::vector<Scalar>& a, int q, const std::vector<Scalar>& b) const;
  const std::vector<Scalar>& unit() const noexcept { return unit_; }

 private:
  std::shared_ptr<const ClassSpace> space_;
  std::map<std::tuple<int, std::size_t, int, std::size_t>, std::vector<Scalar>> table_;
  std::vector<Scalar> unit_;
  std::vector<Scalar> none_;
};

/// All pairwise basis products. Throws RangeError for Z.
CohomologyRing ring_structure(const SimplicialComplex& K, const Coefficients& coeff);

struct ExteriorRank {
  std::size_t r = 0;
  std::vector<int> degrees;
};

struct NotFreeExterior {
  std::string reason;
};

/// Greedy odd-degree generator extraction plus the check that the monomials
/// form a basis and the Poincaré polynomial is Π(1 + t^{g_i}).
std::variant<ExteriorRank, NotFreeExterior> exterior_rank_degrees(const CohomologyRing& ring);

}  // namespace topo
