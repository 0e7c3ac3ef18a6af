#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace topo {

using VertexId = std::uint32_t;

/// A simplex is a strictly increasing tuple of vertex ids. Vertex ids index
/// the complex's sorted token table, so increasing ids means increasing in
/// the global (lexicographic) vertex order.
using Simplex = std::vector<VertexId>;

using TokenSimplex = std::vector<std::string>;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// Finite abstract simplicial complex over string vertex tokens.
///
/// Values are immutable and cheap to copy (shared storage). The empty complex
/// is legal and has dim() == -1.
class SimplicialComplex {
 public:
  SimplicialComplex();

  /// Face-closure of the given simplices. Tokens are ordered
  /// lexicographically. Throws DuplicateVertexInSimplex / EmptySimplex.
  static SimplicialComplex from_maximal(const std::vector<TokenSimplex>& maximal);

  /// Face-closure over an explicit token table; `simplices` use ids into
  /// `tokens`, which must already be sorted and unique. Vertices that appear
  /// in the table but in no simplex are added as isolated points.
  static SimplicialComplex from_ids(std::vector<std::string> tokens,
                                    const std::vector<Simplex>& simplices);

  int dim() const noexcept;
  std::size_t vertex_count() const noexcept;
  std::size_t count(int q) const noexcept;
  std::vector<std::size_t> f_vector() const;
  bool empty() const noexcept { return vertex_count() == 0; }

  const std::vector<std::string>& tokens() const noexcept;
  const std::string& token(VertexId v) const;
  std::optional<VertexId> vertex_id(std::string_view token) const;

  /// Simplices of dimension q in lexicographic order; empty for q outside
  /// [0, dim].
  const std::vector<Simplex>& simplices(int q) const;
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  /// Simplices that are not a proper face of another simplex.
  std::vector<Simplex> maximal_simplices() const;
  std::vector<TokenSimplex> maximal_token_simplices() const;

  TokenSimplex to_tokens(const Simplex& s) const;
  /// Returns nullopt when some token is not a vertex.
  std::optional<Simplex> to_ids(const TokenSimplex& s) const;

  /// Alternating sum of the f-vector.
  long long euler_characteristic() const;

  /// Number of connected components (0 for the empty complex).
  std::size_t component_count() const;
  /// Component label for each vertex, labels numbered by least vertex.
  std::vector<std::size_t> component_labels() const;

  /// True iff every simplex of this complex (by tokens) is a simplex of `ambient`.
  bool is_subcomplex_of(const SimplicialComplex& ambient) const;

  bool operator==(const SimplicialComplex& other) const;

 private:
  struct Data;
  explicit SimplicialComplex(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;
};

/// (ambient, sub) with sub a subcomplex of ambient. Throws NotASubcomplex.
class SimplicialPair {
 public:
  SimplicialPair(SimplicialComplex ambient, SimplicialComplex sub);

  const SimplicialComplex& ambient() const noexcept { return ambient_; }
  const SimplicialComplex& sub() const noexcept { return sub_; }

 private:
  SimplicialComplex ambient_;
  SimplicialComplex sub_;
};

/// Vertex map between complexes that sends every simplex onto a simplex.
class SimplicialMap {
 public:
  /// `vertex_map[v]` is the image of source vertex v. Throws InvalidMap.
  SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                std::vector<VertexId> vertex_map);

  /// Builds from a token map; every source vertex must be mapped.
  static SimplicialMap from_tokens(SimplicialComplex source, SimplicialComplex target,
                                   const std::map<std::string, std::string>& assignment);

  static SimplicialMap identity(const SimplicialComplex& K);
  static SimplicialMap constant(const SimplicialComplex& source,
                                const SimplicialComplex& target, VertexId value);

  const SimplicialComplex& source() const noexcept { return source_; }
  const SimplicialComplex& target() const noexcept { return target_; }
  const std::vector<VertexId>& vertex_map() const noexcept { return vertex_map_; }
  VertexId operator()(VertexId v) const { return vertex_map_.at(v); }

  /// Sorted, deduplicated image of a simplex (always a simplex of target).
  Simplex image(const Simplex& s) const;

  bool is_self_map() const { return source_ == target_; }

 private:
  SimplicialComplex source_;
  SimplicialComplex target_;
  std::vector<VertexId> vertex_map_;
};

/// g ∘ f. Throws InvalidMap when f.target() != g.source().
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

SimplicialComplex build_complex(const std::vector<TokenSimplex>& maximal_simplices);

/// Cone with a new apex vertex. Throws ApexCollision.
SimplicialComplex cone(const SimplicialComplex& K, const std::string& apex);

/// Vertices are the simplices of K, named "{a,b,...}"; simplices are chains
/// under inclusion.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& K);
SimplicialComplex iterated_subdivision(const SimplicialComplex& K, int times);

/// Token of the subdivision vertex that stands for simplex `s` of K.
std::string barycenter_token(const SimplicialComplex& K, const Simplex& s);

/// Sd(f): Sd(K) -> Sd(L), sending the barycenter of s to that of f(s).
SimplicialMap subdivide_map(const SimplicialMap& f);

/// Staircase triangulation of |K| x |L|; vertices are named "(a,b)".
SimplicialComplex product(const SimplicialComplex& K, const SimplicialComplex& L);
std::string product_token(const std::string& a, const std::string& b);

/// All simplices of K that share no vertex with A. Throws NotASubcomplex.
SimplicialComplex full_subcomplex_complement(const SimplicialComplex& K,
                                             const SimplicialComplex& A);

/// Subcomplex of all simplices of K whose vertices lie in `vertices`.
SimplicialComplex induced_subcomplex(const SimplicialComplex& K,
                                     const std::vector<VertexId>& vertices);

/// Face-closure of some of K's simplices; its vertices are the ones that occur.
SimplicialComplex subcomplex_from(const SimplicialComplex& K, const std::vector<Simplex>& simplices);

SimplicialComplex complex_union(const SimplicialComplex& A, const SimplicialComplex& B);
SimplicialComplex complex_intersection(const SimplicialComplex& A, const SimplicialComplex& B);

/// Relabels vertices through `rename` (must be injective). Useful to permute
/// the global vertex order.
SimplicialComplex relabel(const SimplicialComplex& K,
                          const std::map<std::string, std::string>& rename);

/// The (n-1)-faces lying in exactly one n-simplex, closed under faces.
SimplicialComplex boundary_complex(const SimplicialComplex& K);

using Edge = std::pair<VertexId, VertexId>;

/// Breadth-first spanning tree from the least vertex, neighbours visited in
/// increasing order. Edges are returned as (smaller, larger). Throws
/// Disconnected.
std::vector<Edge> spanning_tree(const SimplicialComplex& K);

/// Spanning tree grown from a random root with randomly shuffled frontier.
std::vector<Edge> random_spanning_tree(const SimplicialComplex& K, std::mt19937_64& rng);

}  // namespace topo
