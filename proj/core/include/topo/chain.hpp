#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topo/complex.hpp"
#include "topo/exactlinalg.hpp"
#include "topo/field.hpp"

namespace topo {

class Coefficients {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  static Coefficients integers() { return Coefficients(Kind::Integers, 0); }
  static Coefficients rationals() { return Coefficients(Kind::Rationals, 0); }
  /// Throws NotPrime.
  static Coefficients prime(unsigned long p);
  /// "Z", "Q", "F<p>". Throws ParseError / NotPrime.
  static Coefficients parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_field() const noexcept { return kind_ != Kind::Integers; }
  /// 0 for Z and Q.
  unsigned long characteristic() const noexcept { return p_; }
  /// Throws RangeError for Z.
  Field field() const;
  std::string name() const;

  bool operator==(const Coefficients& o) const noexcept { return kind_ == o.kind_ && p_ == o.p_; }

 private:
  Coefficients(Kind kind, unsigned long p) : kind_(kind), p_(p) {}
  Kind kind_;
  unsigned long p_;
};

/// Simplicial chain complex of K or of the pair (K, rel). Bases are the
/// simplices of K not in rel, in lexicographic order. Augmented complexes
/// carry degree -1 (rank 1) when rel is absent or empty.
class ChainComplexRep {
 public:
  /// Throws NotASubcomplex.
  static ChainComplexRep build(const SimplicialComplex& K,
                               const std::optional<SimplicialComplex>& rel = std::nullopt,
                               bool augmented = false);

  const SimplicialComplex& complex() const noexcept { return K_; }
  bool augmented() const noexcept { return augmented_; }
  bool relative() const noexcept { return relative_; }

  int bottom_degree() const noexcept { return augmented_ ? -1 : 0; }
  int top_degree() const noexcept { return K_.dim(); }

  std::size_t rank(int q) const;
  /// ∂_q : C_q -> C_{q-1}, shape rank(q-1) x rank(q); zero outside the range.
  const IntMatrix& boundary(int q) const;

  /// Basis simplices of degree q >= 0.
  const std::vector<Simplex>& basis(int q) const;
  std::optional<std::size_t> basis_index(int q, const Simplex& s) const;

 private:
  SimplicialComplex K_;
  bool augmented_ = false;
  bool relative_ = false;
  std::vector<std::vector<Simplex>> basis_;
  std::vector<std::size_t> ranks_;        // index q + 1
  std::vector<IntMatrix> boundaries_;     // index q + 1, q in [-1, dim + 1]
};

/// Sign of the permutation that sorts `tuple` (0 if it has a repeat).
int sorting_sign(std::vector<VertexId>& tuple);

/// Matrix of f_# : C_q(source) -> C_q(target) in simplex bases. Degenerate
/// images map to 0; otherwise the entry is the sign of the vertex reordering.
IntMatrix chain_map_matrix(const SimplicialMap& f, int q);

/// The subdivision chain map C_q(K) -> C_q(Sd K), sd(σ) = b_σ · sd(∂σ).
IntMatrix subdivision_chain_matrix(const SimplicialComplex& K, int q);

/// Inclusion C_q(sub) -> C_q(ambient), matched by tokens. Throws NotASubcomplex.
IntMatrix inclusion_matrix(const SimplicialComplex& sub, const SimplicialComplex& ambient, int q);

/// A degree-preserving chain map between simplicial chain complexes (no rel,
/// no augmentation), stored as one matrix per degree 0..dim(source).
class ChainMap {
 public:
  ChainMap(SimplicialComplex source, SimplicialComplex target, std::vector<IntMatrix> matrices);

  static ChainMap from_simplicial(const SimplicialMap& f);
  /// sd^times : C(K) -> C(Sd^times K).
  static ChainMap subdivision(const SimplicialComplex& K, int times);
  static ChainMap identity(const SimplicialComplex& K);

  const SimplicialComplex& source() const noexcept { return source_; }
  const SimplicialComplex& target() const noexcept { return target_; }
  /// Zero matrix of the right shape outside 0..dim(source).
  IntMatrix matrix(int q) const;
  bool is_self_map() const { return source_ == target_; }

 private:
  SimplicialComplex source_;
  SimplicialComplex target_;
  std::vector<IntMatrix> matrices_;
};

/// g ∘ f. Throws InvalidMap if they do not compose.
ChainMap compose(const ChainMap& g, const ChainMap& f);

}  // namespace topo
