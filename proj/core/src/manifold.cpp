#include "topo/manifold.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "topo/cohomology.hpp"
#include "topo/corpus.hpp"
#include "topo/error.hpp"

namespace topo {

namespace {

struct Incidence {
  std::size_t facet;
  std::size_t position;  // index of the vertex dropped to get the face
};

std::map<Simplex, std::vector<Incidence>> facet_incidences(const SimplicialComplex& K, int n) {
  std::map<Simplex, std::vector<Incidence>> out;
  const auto& facets = K.simplices(n);
  for (std::size_t f = 0; f < facets.size(); ++f) {
    for (std::size_t i = 0; i < facets[f].size(); ++i) {
      Simplex face = facets[f];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      out[face].push_back({f, i});
    }
  }
  return out;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

PseudomanifoldCheck is_closed_pseudomanifold(const SimplicialComplex& K, int n) {
  PseudomanifoldCheck out;
  if (n < 0 || K.dim() != n) {
    out.diagnostics.push_back("dimension is " + std::to_string(K.dim()) + ", expected " + std::to_string(n));
    return out;
  }
  for (const Simplex& s : K.maximal_simplices()) {
    if (static_cast<int>(s.size()) != n + 1) {
      out.diagnostics.push_back("not pure: maximal simplex of dimension " + std::to_string(s.size() - 1));
      return out;
    }
  }
  if (n == 0) {
    out.ok = K.vertex_count() == 2;
    if (!out.ok) out.diagnostics.push_back("a closed 0-pseudomanifold has exactly two points");
    return out;
  }
  const auto inc = facet_incidences(K, n);
  std::size_t bad = 0;
  for (const auto& [face, list] : inc) {
    if (list.size() != 2) {
      if (bad++ < 3) {
        out.diagnostics.push_back("face " + barycenter_token(K, face) + " lies in " + std::to_string(list.size()) +
                                  " facets");
      }
    }
  }
  if (bad > 0) {
    out.diagnostics.push_back(std::to_string(bad) + " faces of codimension one are not in exactly two facets");
    return out;
  }
  std::vector<std::size_t> parent(K.count(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [face, list] : inc) {
    parent[find_root(parent, list[0].facet)] = find_root(parent, list[1].facet);
  }
  std::size_t classes = 0;
  for (std::size_t f = 0; f < parent.size(); ++f) classes += find_root(parent, f) == f ? 1 : 0;
  if (classes != 1) {
    out.diagnostics.push_back("facet adjacency graph has " + std::to_string(classes) + " components");
    return out;
  }
  out.ok = true;
  return out;
}

bool is_coherent(const SimplicialComplex& K, const Orientation& o) {
  if (o.n != K.dim() || o.signs.size() != K.count(o.n)) return false;
  for (const auto& [face, list] : facet_incidences(K, o.n)) {
    int total = 0;
    for (const Incidence& x : list) total += o.signs[x.facet] * (x.position % 2 == 0 ? 1 : -1);
    if (total != 0) return false;
  }
  return true;
}

std::optional<Orientation> orient(const SimplicialComplex& K) {
  const int n = K.dim();
  const PseudomanifoldCheck pm = is_closed_pseudomanifold(K, n);
  if (!pm.ok) {
    fail(ErrorKind::NotPseudomanifold, pm.diagnostics.empty() ? "not a closed pseudomanifold" : pm.diagnostics[0]);
  }
  Orientation o{n, std::vector<int>(K.count(n), 0)};
  if (n == 0) {
    std::fill(o.signs.begin(), o.signs.end(), 1);
    return o;
  }
  const auto inc = facet_incidences(K, n);
  // neighbours of each facet: (other facet, own position, other position)
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>> adj(K.count(n));
  for (const auto& [face, list] : inc) {
    adj[list[0].facet].emplace_back(list[1].facet, list[0].position, list[1].position);
    adj[list[1].facet].emplace_back(list[0].facet, list[1].position, list[0].position);
  }
  bool orientable = true;
  std::deque<std::size_t> queue{0};
  o.signs[0] = 1;
  while (!queue.empty() && orientable) {
    const std::size_t f = queue.front();
    queue.pop_front();
    for (const auto& [g, i, j] : adj[f]) {
      const int want = -o.signs[f] * ((i + j) % 2 == 0 ? 1 : -1);
      if (o.signs[g] == 0) {
        o.signs[g] = want;
        queue.push_back(g);
      } else if (o.signs[g] != want) {
        orientable = false;
        break;
      }
    }
  }
  const auto h = homology(K, Coefficients::rationals());
  const bool homological = h[n].betti == 1;
  if (orientable != homological) {
    fail(ErrorKind::InternalMismatch, "sign propagation and H_n disagree about orientability");
  }
  if (!orientable) return std::nullopt;
  if (!is_coherent(K, o)) fail(ErrorKind::InternalMismatch, "propagated orientation is not coherent");
  return o;
}

FundamentalClass fundamental_class(const SimplicialComplex& K, const Orientation& o) {
  if (o.n != K.dim() || o.signs.size() != K.count(o.n)) {
    fail(ErrorKind::DimensionMismatch, "orientation does not belong to this complex");
  }
  FundamentalClass z{o.n, IntVector(o.signs.size())};
  for (std::size_t i = 0; i < o.signs.size(); ++i) z.chain[i] = o.signs[i];
  return z;
}

FundamentalClass fundamental_class(const SimplicialComplex& K) {
  auto o = orient(K);
  if (!o) fail(ErrorKind::NotOrientable, "complex is not orientable");
  return fundamental_class(K, *o);
}

bool mod2_fundamental_class_is_cycle(const SimplicialComplex& K) {
  const int n = K.dim();
  if (n < 0) return false;
  const Field F2 = Field::prime(2);
  SparseVector all;
  for (std::size_t i = 0; i < K.count(n); ++i) all.emplace_back(i, Scalar(1));
  const ChainComplexRep C = ChainComplexRep::build(K);
  return sparse::apply(F2, C.boundary(n), all).empty();
}

long long degree(const ChainMap& f, const Orientation& oK, const Orientation& oL) {
  const int n = f.source().dim();
  if (f.target().dim() != n || oK.n != n || oL.n != n) {
    fail(ErrorKind::DimensionMismatch, "degree needs equal-dimensional oriented complexes");
  }
  const FundamentalClass zK = fundamental_class(f.source(), oK);
  const FundamentalClass zL = fundamental_class(f.target(), oL);
  const IntVector image = f.matrix(n).apply(zK.chain);
  // ζ_L has entries ±1, so the ratio is read off the first entry.
  const Integer d = image[0] * zL.chain[0];
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] != d * zL.chain[i]) fail(ErrorKind::InternalMismatch, "image of the fundamental class is not a multiple");
  }
  return d.get_si();
}

long long degree(const ChainMap& f) {
  auto oK = orient(f.source());
  auto oL = orient(f.target());
  if (!oK || !oL) fail(ErrorKind::NotOrientable, "degree needs orientable complexes");
  return degree(f, *oK, *oL);
}

PairingMatrix poincare_pairing(const FieldHomology& H, const FundamentalClass& zeta, int q) {
  const Field& F = H.field();
  const int n = zeta.n;
  const SimplicialComplex& K = H.complex();
  SparseVector z;
  for (std::size_t i = 0; i < zeta.chain.size(); ++i) {
    if (sgn(zeta.chain[i]) != 0) z.emplace_back(i, F.from_integer(zeta.chain[i]));
  }
  const auto& alpha = H.basis(q).cocycles();
  const auto& beta = H.basis(n - q).cocycles();
  PairingMatrix M;
  M.q = q;
  M.rows = alpha.size();
  M.cols = beta.size();
  M.matrix.assign(M.rows, std::vector<Scalar>(M.cols, Scalar(0)));
  for (std::size_t i = 0; i < M.rows; ++i) {
    for (std::size_t j = 0; j < M.cols; ++j) {
      M.matrix[i][j] = sparse::dot(F, z, cup_cochain(K, F, q, alpha[i], n - q, beta[j]));
    }
  }
  M.rank = M.rows == 0 || M.cols == 0 ? 0 : rank(F, M.matrix);
  return M;
}

PairingMatrix poincare_pairing(const SimplicialComplex& K, const Orientation& o, int q) {
  return poincare_pairing(FieldHomology(K, Field::rationals()), fundamental_class(K, o), q);
}

bool ParityReport::ok() const {
  return std::all_of(items.begin(), items.end(), [](const ParityItem& i) { return !i.applicable || i.pass; });
}

ParityReport parity_checks(const SimplicialComplex& K) {
  ParityReport r;
  r.dim = K.dim();
  r.euler = euler_characteristic(K);
  const bool closed = is_closed_pseudomanifold(K, r.dim).ok;
  if (!closed) {
    r.items.push_back({"closed pseudomanifold", true, false});
    return r;
  }
  r.orientable = orient(K).has_value();
  r.items.push_back({"dim odd => E = 0", r.dim % 2 == 1, r.euler == 0});
  r.items.push_back({"dim = 2 mod 4, orientable => E even", r.dim % 4 == 2 && r.orientable, r.euler % 2 == 0});
  return r;
}

ParityReport boundary_parity_check(const SimplicialComplex& X) {
  const SimplicialComplex B = boundary_complex(X);
  ParityReport r;
  r.dim = B.dim();
  r.euler = euler_characteristic(B);
  r.items.push_back({"E(boundary) even", !B.empty(), r.euler % 2 == 0});
  return r;
}

SeparationReport separation_check(const SimplicialComplex& K, const SimplicialComplex& A) {
  if (!A.is_subcomplex_of(K)) fail(ErrorKind::BadEmbedding, "embedded complex is not a subcomplex");
  const PseudomanifoldCheck pm = is_closed_pseudomanifold(A, K.dim() - 1);
  if (!pm.ok) {
    fail(ErrorKind::BadEmbedding, "embedded complex is not a closed pseudomanifold of codimension one" +
                                      (pm.diagnostics.empty() ? std::string() : ": " + pm.diagnostics[0]));
  }
  const SimplicialComplex S = iterated_subdivision(K, 2);
  const SimplicialComplex SA = iterated_subdivision(A, 2);
  const SimplicialComplex rest = full_subcomplex_complement(S, SA);
  SeparationReport r;
  r.ambient_vertices = S.vertex_count();
  r.embedded_vertices = SA.vertex_count();
  r.components = rest.component_count();
  return r;
}

SimplicialComplex embedded_sphere(int n, const std::string& embed) {
  if (n < 1) fail(ErrorKind::BadEmbedding, "separation needs n >= 1");
  std::vector<TokenSimplex> maximal;
  auto subsets_missing_one = [](const std::vector<int>& verts) {
    std::vector<TokenSimplex> out;
    for (std::size_t skip = 0; skip < verts.size(); ++skip) {
      TokenSimplex s;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i != skip) s.push_back(std::to_string(verts[i]));
      }
      out.push_back(std::move(s));
    }
    return out;
  };
  if (embed == "equator") {
    if (n == 1) {
      maximal = {{"0"}, {"1"}};
    } else {
      std::vector<int> rim;
      for (int v = 2; v <= n + 1; ++v) rim.push_back(v);
      for (const std::string pole : {"0", "1"}) {
        for (TokenSimplex s : subsets_missing_one(rim)) {
          s.push_back(pole);
          maximal.push_back(std::move(s));
        }
      }
    }
  } else if (embed == "facet") {
    std::vector<int> facet(static_cast<std::size_t>(n + 1));
    std::iota(facet.begin(), facet.end(), 0);
    maximal = subsets_missing_one(facet);
  } else {
    fail(ErrorKind::BadEmbedding, "unknown embedding '" + embed + "' (expected equator or facet)");
  }
  return build_complex(maximal);
}

SeparationReport separation_check(int n, const std::string& embed) {
  return separation_check(builtin("sphere:" + std::to_string(n)), embedded_sphere(n, embed));
}

}  // namespace topo
