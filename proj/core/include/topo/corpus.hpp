#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "topo/complex.hpp"

namespace topo {

/// Named complexes:
///   sphere:n    boundary of the (n+1)-simplex, f-vector binom(n+2, q+1)
///   simplex:n   the full n-simplex
///   circle:n    n-gon, n >= 3
///   torus       7-vertex torus, f-vector (7,21,14)
///   torus:n     n-fold staircase product of 3-gons
///   rp2         6-vertex projective plane, f-vector (6,15,10)
///   klein       9-vertex Klein bottle from a flipped 3x3 grid, (9,27,18)
///   moebius     5-vertex Moebius strip, (5,10,5)
///   cylinder    6-vertex annulus, (6,12,6)
///   point       a single vertex
/// Throws UnknownBuiltin.
SimplicialComplex builtin(std::string_view name);

/// Closed, connected members of the test corpus with their names.
std::vector<std::pair<std::string, SimplicialComplex>> closed_corpus();

/// All corpus members, including those with boundary.
std::vector<std::pair<std::string, SimplicialComplex>> full_corpus();

}  // namespace topo
