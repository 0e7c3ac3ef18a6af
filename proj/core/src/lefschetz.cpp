#include "topo/lefschetz.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "topo/corpus.hpp"
#include "topo/error.hpp"
#include "topo/homology.hpp"
#include "topo/manifold.hpp"

namespace topo {

namespace {

long long as_integer(const Scalar& v, const char* what) {
  if (v.get_den() != 1) fail(ErrorKind::InternalMismatch, std::string(what) + " is not an integer");
  return v.get_num().get_si();
}

void require_self_map(const ChainMap& f) {
  if (!f.is_self_map()) fail(ErrorKind::NotSelfMap, "source and target differ");
}

Scalar chain_trace(const ChainMap& f, int q) {
  const IntMatrix M = f.matrix(q);
  Integer t = 0;
  for (std::size_t i = 0; i < M.cols() && i < M.rows(); ++i) t += M.get(i, i);
  return Scalar(t);
}

// Vertices of a triangulated circle in cyclic order, starting at vertex 0 and
// stepping first to its smaller neighbour.
std::vector<VertexId> cycle_order(const SimplicialComplex& S) {
  std::vector<std::vector<VertexId>> nbr(S.vertex_count());
  for (const Simplex& e : S.simplices(1)) {
    nbr[e[0]].push_back(e[1]);
    nbr[e[1]].push_back(e[0]);
  }
  std::vector<VertexId> order{0};
  VertexId prev = 0;
  VertexId cur = std::min(nbr[0][0], nbr[0][1]);
  while (cur != 0) {
    order.push_back(cur);
    const VertexId next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace

SimplicialApproximation::SimplicialApproximation(SimplicialComplex base, int subdivisions, SimplicialMap map)
    : base_(std::move(base)), k_(subdivisions), map_(std::move(map)) {
  if (k_ < 0) fail(ErrorKind::RangeError, "negative subdivision count");
  if (!(map_.source() == iterated_subdivision(base_, k_))) {
    fail(ErrorKind::InvalidMap, "map source is not the subdivided base");
  }
}

SimplicialApproximation::SimplicialApproximation(SimplicialMap map)
    : base_(map.source()), k_(0), map_(std::move(map)) {}

ChainMap SimplicialApproximation::chain_map() const {
  const ChainMap f = ChainMap::from_simplicial(map_);
  if (k_ == 0) return f;
  return compose(f, ChainMap::subdivision(base_, k_));
}

SimplicialApproximation identity_approximation(const SimplicialComplex& K, int k) {
  if (k < 0) fail(ErrorKind::RangeError, "negative subdivision count");
  SimplicialMap total = SimplicialMap::identity(K);
  SimplicialComplex lower = K;
  for (int j = 0; j < k; ++j) {
    const SimplicialComplex upper = barycentric_subdivision(lower);
    std::map<std::string, std::string> last;
    for (int q = 0; q <= lower.dim(); ++q) {
      for (const Simplex& s : lower.simplices(q)) last[barycenter_token(lower, s)] = lower.token(s.back());
    }
    total = compose(total, SimplicialMap::from_tokens(upper, lower, last));
    lower = upper;
  }
  return SimplicialApproximation(K, k, total);
}

SimplicialApproximation circle_power_map(int d) {
  const SimplicialComplex C = builtin("sphere:1");
  const long m = std::labs(static_cast<long>(d));
  if (m == 0) return SimplicialApproximation(SimplicialMap::constant(C, C, 0));
  int k = 0;
  while ((1L << k) < m) ++k;
  const SimplicialComplex S = iterated_subdivision(C, k);
  const std::vector<VertexId> order = cycle_order(S);

  auto build = [&](bool reflect) {
    std::vector<VertexId> image(S.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) {
      const long t = (static_cast<long>(i) * m >> k) % 3;
      image[order[i]] = static_cast<VertexId>(reflect ? (3 - t) % 3 : t);
    }
    return SimplicialApproximation(C, k, SimplicialMap(S, C, image));
  };
  SimplicialApproximation f = build(false);
  const long long deg = degree(f.chain_map());
  if (deg == d) return f;
  f = build(true);
  if (degree(f.chain_map()) != d) fail(ErrorKind::InternalMismatch, "power map has the wrong degree");
  return f;
}

SimplicialMap antipodal_involution(int n) {
  if (n < 1) fail(ErrorKind::RangeError, "sphere dimension must be at least 1");
  const SimplicialComplex S = builtin("sphere:" + std::to_string(n));
  const SimplicialComplex Sd = barycentric_subdivision(S);
  const VertexId all = static_cast<VertexId>(S.vertex_count());
  std::map<std::string, std::string> assignment;
  for (int q = 0; q <= S.dim(); ++q) {
    for (const Simplex& s : S.simplices(q)) {
      Simplex complement;
      std::size_t j = 0;
      for (VertexId v = 0; v < all; ++v) {
        if (j < s.size() && s[j] == v) {
          ++j;
        } else {
          complement.push_back(v);
        }
      }
      assignment[barycenter_token(S, s)] = barycenter_token(S, complement);
    }
  }
  return SimplicialMap::from_tokens(Sd, Sd, assignment);
}

SimplicialMap torus_translation() {
  const SimplicialComplex T = builtin("torus");
  std::map<std::string, std::string> assignment;
  for (int i = 0; i < 7; ++i) assignment[std::to_string(i)] = std::to_string((i + 1) % 7);
  return SimplicialMap::from_tokens(T, T, assignment);
}

std::string to_string(Certificate c) {
  return c == Certificate::GuaranteedFixedPoint ? "GuaranteedFixedPoint" : "Inconclusive";
}

LefschetzReport hopf_trace_check(const ChainMap& f) {
  require_self_map(f);
  const Field Q = Field::rationals();
  const FieldHomology H(f.source(), Q);
  LefschetzReport r;
  for (int q = 0; q <= f.source().dim(); ++q) {
    const Scalar sign = q % 2 == 0 ? 1 : -1;
    r.chain_traces.push_back(chain_trace(f, q));
    r.homology_traces.push_back(H.dimension(q) == 0 ? Scalar(0) : trace(Q, induced_map(f, q, H, H)));
    r.chain_sum += sign * r.chain_traces.back();
    r.homology_sum += sign * r.homology_traces.back();
  }
  if (!r.agree()) {
    fail(ErrorKind::InternalMismatch, "chain trace " + format_scalar(r.chain_sum) + " != homology trace " +
                                          format_scalar(r.homology_sum));
  }
  as_integer(r.homology_sum, "Lefschetz number");
  r.certificate = sgn(r.homology_sum) != 0 ? Certificate::GuaranteedFixedPoint : Certificate::Inconclusive;
  return r;
}

LefschetzReport hopf_trace_check(const SimplicialMap& f) { return hopf_trace_check(ChainMap::from_simplicial(f)); }

long long lefschetz_number(const ChainMap& f) {
  require_self_map(f);
  const Field Q = Field::rationals();
  const FieldHomology H(f.source(), Q);
  Scalar sum = 0;
  for (int q = 0; q <= f.source().dim(); ++q) {
    if (H.dimension(q) == 0) continue;
    const Scalar t = trace(Q, induced_map(f, q, H, H));
    sum += q % 2 == 0 ? t : Scalar(-t);
  }
  return as_integer(sum, "Lefschetz number");
}

long long lefschetz_number(const SimplicialMap& f) { return lefschetz_number(ChainMap::from_simplicial(f)); }

Certificate fixed_point_certificate(const ChainMap& f) {
  return lefschetz_number(f) != 0 ? Certificate::GuaranteedFixedPoint : Certificate::Inconclusive;
}

Certificate fixed_point_certificate(const SimplicialMap& f) {
  return fixed_point_certificate(ChainMap::from_simplicial(f));
}

long long coincidence_number(const ChainMap& f, const ChainMap& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) {
    fail(ErrorKind::InvalidMap, "maps have different source or target");
  }
  const SimplicialComplex& K = f.source();
  const SimplicialComplex& L = f.target();
  if (K.dim() != L.dim()) fail(ErrorKind::DimensionMismatch, "source and target dimensions differ");
  const int n = K.dim();
  const FundamentalClass zK = fundamental_class(K);
  const FundamentalClass zL = fundamental_class(L);

  const Field Q = Field::rationals();
  const FieldHomology HK(K, Q);
  const FieldHomology HL(L, Q);
  Scalar sum = 0;
  for (int p = 0; p <= n; ++p) {
    if (HK.dimension(p) == 0 || HL.dimension(p) == 0) continue;
    // Cohomology matrices in the dual bases are transposes of homology ones.
    const ScalarMatrix Fp = transpose(induced_map(f, p, HK, HL));
    const ScalarMatrix Gq = transpose(induced_map(g, n - p, HK, HL));
    const ScalarMatrix PK = poincare_pairing(HK, zK, p).matrix;
    const ScalarMatrix PL = poincare_pairing(HL, zL, p).matrix;
    // P_L(g~ α, β) = P_K(α, g^* β)
    const ScalarMatrix T = transpose(multiply(Q, multiply(Q, PK, Gq), inverse(Q, PL)));
    const Scalar t = trace(Q, multiply(Q, Fp, T));
    sum += p % 2 == 0 ? t : Scalar(-t);
  }
  return as_integer(sum, "coincidence number");
}

long long coincidence_number(const SimplicialMap& f, const SimplicialMap& g) {
  return coincidence_number(ChainMap::from_simplicial(f), ChainMap::from_simplicial(g));
}

}  // namespace topo
