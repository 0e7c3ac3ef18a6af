#pragma once

#include <string>
#include <vector>

#include "topo/chain.hpp"
#include "topo/complex.hpp"
#include "topo/field.hpp"

namespace topo {

/// A map Sd^k K -> L standing for a map |K| -> |L|. Its chain map on C(K) is
/// f_# ∘ sd^k_#. With k = 0 it is just a simplicial map.
class SimplicialApproximation {
 public:
  /// Throws InvalidMap unless map.source() is Sd^subdivisions(base).
  SimplicialApproximation(SimplicialComplex base, int subdivisions, SimplicialMap map);
  explicit SimplicialApproximation(SimplicialMap map);

  const SimplicialComplex& base() const noexcept { return base_; }
  const SimplicialComplex& target() const noexcept { return map_.target(); }
  int subdivisions() const noexcept { return k_; }
  const SimplicialMap& map() const noexcept { return map_; }

  ChainMap chain_map() const;

 private:
  SimplicialComplex base_;
  int k_;
  SimplicialMap map_;
};

/// Sd^k K -> K sending each barycenter {σ} to the last vertex of σ, one
/// subdivision at a time. Homotopic to the identity.
SimplicialApproximation identity_approximation(const SimplicialComplex& K, int k);

/// Degree-d self-map of the 3-vertex circle sphere:1, realized on the
/// smallest subdivision with room for it.
SimplicialApproximation circle_power_map(int d);

/// σ ↦ complement of σ on Sd(∂Δ^{n+1}), a simplicial antipodal involution.
SimplicialMap antipodal_involution(int n);

/// i ↦ i+1 (mod 7) on the 7-vertex torus.
SimplicialMap torus_translation();

enum class Certificate { GuaranteedFixedPoint, Inconclusive };
std::string to_string(Certificate c);

struct LefschetzReport {
  std::vector<Scalar> chain_traces;     // per degree
  std::vector<Scalar> homology_traces;  // per degree, over Q
  Scalar chain_sum = 0;
  Scalar homology_sum = 0;
  bool agree() const { return chain_sum == homology_sum; }
  Certificate certificate = Certificate::Inconclusive;
};

/// Σ(-1)^i tr H_i(f;Q), asserted integral. Throws NotSelfMap.
long long lefschetz_number(const ChainMap& f);
long long lefschetz_number(const SimplicialMap& f);

/// Chain-level and homology-level alternating traces. Throws NotSelfMap.
LefschetzReport hopf_trace_check(const ChainMap& f);
LefschetzReport hopf_trace_check(const SimplicialMap& f);

/// GuaranteedFixedPoint iff λ(f) != 0. Throws NotSelfMap.
Certificate fixed_point_certificate(const ChainMap& f);
Certificate fixed_point_certificate(const SimplicialMap& f);

/// λ(f,g) = Σ(-1)^p tr(f^{*p} ∘ g̃^p) with g̃ the Poincaré adjoint of g^*.
/// Throws DimensionMismatch, NotOrientable.
long long coincidence_number(const ChainMap& f, const ChainMap& g);
long long coincidence_number(const SimplicialMap& f, const SimplicialMap& g);

}  // namespace topo
