#include "topo/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "topo/error.hpp"

namespace topo {

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (VertexId v : s) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

struct SimplicialComplex::Data {
  std::vector<std::string> tokens;
  std::vector<std::vector<Simplex>> by_dim;
  std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index;
};

namespace {

const std::vector<Simplex> kNoSimplices;

// Inserts every nonempty subset of `s` into `faces`, bucketed by dimension.
void add_faces(const Simplex& s,
               std::vector<std::unordered_set<Simplex, SimplexHash>>& faces) {
  const std::size_t n = s.size();
  if (faces.size() < n) faces.resize(n);
  if (faces[n - 1].contains(s)) return;
  if (n > 24) fail(ErrorKind::RangeError, "simplex too large for face enumeration");
  const std::uint32_t limit = 1u << n;
  Simplex face;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    face.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) face.push_back(s[i]);
    }
    faces[face.size() - 1].insert(face);
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex() : data_(std::make_shared<Data>()) {}

SimplicialComplex::SimplicialComplex(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

SimplicialComplex SimplicialComplex::from_ids(std::vector<std::string> tokens,
                                              const std::vector<Simplex>& simplices) {
  std::vector<std::unordered_set<Simplex, SimplexHash>> faces;
  for (Simplex s : simplices) {
    if (s.empty()) fail(ErrorKind::EmptySimplex, "empty simplex in input");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      fail(ErrorKind::DuplicateVertexInSimplex, "repeated vertex in simplex");
    }
    if (s.back() >= tokens.size()) fail(ErrorKind::IndexOutOfRange, "vertex id out of range");
    add_faces(s, faces);
  }
  if (faces.empty() && !tokens.empty()) faces.resize(1);
  for (VertexId v = 0; v < tokens.size(); ++v) faces[0].insert(Simplex{v});

  auto data = std::make_shared<Data>();
  data->tokens = std::move(tokens);
  data->by_dim.resize(faces.size());
  data->index.resize(faces.size());
  for (std::size_t q = 0; q < faces.size(); ++q) {
    auto& list = data->by_dim[q];
    list.assign(faces[q].begin(), faces[q].end());
    std::sort(list.begin(), list.end());
    data->index[q].reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) data->index[q].emplace(list[i], i);
  }
  while (!data->by_dim.empty() && data->by_dim.back().empty()) {
    data->by_dim.pop_back();
    data->index.pop_back();
  }
  return SimplicialComplex(std::move(data));
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<TokenSimplex>& maximal) {
  std::vector<std::string> tokens;
  for (const auto& s : maximal) {
    if (s.empty()) fail(ErrorKind::EmptySimplex, "empty simplex in input");
    std::set<std::string_view> seen;
    for (const auto& t : s) {
      if (t.empty()) fail(ErrorKind::ParseError, "empty vertex token");
      if (!seen.insert(t).second) {
        fail(ErrorKind::DuplicateVertexInSimplex, "vertex '" + t + "' repeats in one simplex");
      }
      tokens.push_back(t);
    }
  }
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  std::vector<Simplex> ids;
  ids.reserve(maximal.size());
  for (const auto& s : maximal) {
    Simplex simplex;
    simplex.reserve(s.size());
    for (const auto& t : s) {
      auto it = std::lower_bound(tokens.begin(), tokens.end(), t);
      simplex.push_back(static_cast<VertexId>(it - tokens.begin()));
    }
    ids.push_back(std::move(simplex));
  }
  return from_ids(std::move(tokens), ids);
}

int SimplicialComplex::dim() const noexcept { return static_cast<int>(data_->by_dim.size()) - 1; }

std::size_t SimplicialComplex::vertex_count() const noexcept { return data_->tokens.size(); }

std::size_t SimplicialComplex::count(int q) const noexcept { return simplices(q).size(); }

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& list : data_->by_dim) f.push_back(list.size());
  return f;
}

const std::vector<std::string>& SimplicialComplex::tokens() const noexcept { return data_->tokens; }

const std::string& SimplicialComplex::token(VertexId v) const { return data_->tokens.at(v); }

std::optional<VertexId> SimplicialComplex::vertex_id(std::string_view token) const {
  const auto& t = data_->tokens;
  auto it = std::lower_bound(t.begin(), t.end(), token);
  if (it == t.end() || *it != token) return std::nullopt;
  return static_cast<VertexId>(it - t.begin());
}

const std::vector<Simplex>& SimplicialComplex::simplices(int q) const {
  if (q < 0 || q > dim()) return kNoSimplices;
  return data_->by_dim[static_cast<std::size_t>(q)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty() || static_cast<int>(s.size()) - 1 > dim()) return std::nullopt;
  const auto& idx = data_->index[s.size() - 1];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> result;
  for (int q = dim(); q >= 0; --q) {
    for (const Simplex& s : simplices(q)) {
      bool covered = false;
      if (q < dim()) {
        // s is maximal iff no cofacet s ∪ {v} exists.
        for (VertexId v = 0; v < vertex_count() && !covered; ++v) {
          if (std::binary_search(s.begin(), s.end(), v)) continue;
          Simplex bigger = s;
          bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), v), v);
          covered = contains(bigger);
        }
      }
      if (!covered) result.push_back(s);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<TokenSimplex> SimplicialComplex::maximal_token_simplices() const {
  std::vector<TokenSimplex> out;
  for (const auto& s : maximal_simplices()) out.push_back(to_tokens(s));
  return out;
}

TokenSimplex SimplicialComplex::to_tokens(const Simplex& s) const {
  TokenSimplex out;
  out.reserve(s.size());
  for (VertexId v : s) out.push_back(token(v));
  return out;
}

std::optional<Simplex> SimplicialComplex::to_ids(const TokenSimplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (const auto& t : s) {
    auto id = vertex_id(t);
    if (!id) return std::nullopt;
    out.push_back(*id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long SimplicialComplex::euler_characteristic() const {
  long long e = 0;
  for (int q = 0; q <= dim(); ++q) {
    const auto n = static_cast<long long>(count(q));
    e += (q % 2 == 0) ? n : -n;
  }
  return e;
}

std::vector<std::size_t> SimplicialComplex::component_labels() const {
  std::vector<std::size_t> parent(vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Simplex& e : simplices(1)) {
    auto a = find(e[0]);
    auto b = find(e[1]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> label(vertex_count());
  std::unordered_map<std::size_t, std::size_t> renumber;
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    auto root = find(v);
    auto [it, inserted] = renumber.emplace(root, renumber.size());
    label[v] = it->second;
  }
  return label;
}

std::size_t SimplicialComplex::component_count() const {
  auto labels = component_labels();
  if (labels.empty()) return 0;
  return *std::max_element(labels.begin(), labels.end()) + 1;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& ambient) const {
  for (int q = 0; q <= dim(); ++q) {
    for (const Simplex& s : simplices(q)) {
      auto ids = ambient.to_ids(to_tokens(s));
      if (!ids || !ambient.contains(*ids)) return false;
    }
  }
  return true;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
  if (data_ == other.data_) return true;
  return data_->tokens == other.data_->tokens && data_->by_dim == other.data_->by_dim;
}

// ---------------------------------------------------------------------------

SimplicialPair::SimplicialPair(SimplicialComplex ambient, SimplicialComplex sub)
    : ambient_(std::move(ambient)), sub_(std::move(sub)) {
  if (!sub_.is_subcomplex_of(ambient_)) {
    fail(ErrorKind::NotASubcomplex, "pair sub part is not a subcomplex of the ambient complex");
  }
}

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                             std::vector<VertexId> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), vertex_map_(std::move(vertex_map)) {
  if (vertex_map_.size() != source_.vertex_count()) {
    fail(ErrorKind::InvalidMap, "vertex map is not total on the source");
  }
  for (VertexId w : vertex_map_) {
    if (w >= target_.vertex_count()) fail(ErrorKind::InvalidMap, "image vertex out of range");
  }
  for (const Simplex& s : source_.maximal_simplices()) {
    if (!target_.contains(image(s))) {
      std::string desc;
      for (const auto& t : source_.to_tokens(s)) desc += t + " ";
      fail(ErrorKind::InvalidMap, "image of simplex [ " + desc + "] is not a simplex of the target");
    }
  }
}

SimplicialMap SimplicialMap::from_tokens(SimplicialComplex source, SimplicialComplex target,
                                         const std::map<std::string, std::string>& assignment) {
  std::vector<VertexId> vm(source.vertex_count());
  for (VertexId v = 0; v < source.vertex_count(); ++v) {
    auto it = assignment.find(source.token(v));
    if (it == assignment.end()) {
      fail(ErrorKind::InvalidMap, "source vertex '" + source.token(v) + "' is not mapped");
    }
    auto w = target.vertex_id(it->second);
    if (!w) fail(ErrorKind::InvalidMap, "'" + it->second + "' is not a target vertex");
    vm[v] = *w;
  }
  for (const auto& [from, to] : assignment) {
    if (!source.vertex_id(from)) fail(ErrorKind::InvalidMap, "'" + from + "' is not a source vertex");
  }
  return SimplicialMap(std::move(source), std::move(target), std::move(vm));
}

SimplicialMap SimplicialMap::identity(const SimplicialComplex& K) {
  std::vector<VertexId> vm(K.vertex_count());
  std::iota(vm.begin(), vm.end(), 0);
  return SimplicialMap(K, K, std::move(vm));
}

SimplicialMap SimplicialMap::constant(const SimplicialComplex& source,
                                      const SimplicialComplex& target, VertexId value) {
  return SimplicialMap(source, target, std::vector<VertexId>(source.vertex_count(), value));
}

Simplex SimplicialMap::image(const Simplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (VertexId v : s) out.push_back(vertex_map_[v]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!(f.target() == g.source())) fail(ErrorKind::InvalidMap, "maps are not composable");
  std::vector<VertexId> vm(f.source().vertex_count());
  for (VertexId v = 0; v < vm.size(); ++v) vm[v] = g(f(v));
  return SimplicialMap(f.source(), g.target(), std::move(vm));
}

// ---------------------------------------------------------------------------

SimplicialComplex build_complex(const std::vector<TokenSimplex>& maximal_simplices) {
  return SimplicialComplex::from_maximal(maximal_simplices);
}

SimplicialComplex cone(const SimplicialComplex& K, const std::string& apex) {
  if (K.vertex_id(apex)) fail(ErrorKind::ApexCollision, "apex '" + apex + "' is already a vertex");
  std::vector<TokenSimplex> maximal;
  for (auto s : K.maximal_token_simplices()) {
    s.push_back(apex);
    maximal.push_back(std::move(s));
  }
  if (maximal.empty()) maximal.push_back({apex});
  return SimplicialComplex::from_maximal(maximal);
}

std::string barycenter_token(const SimplicialComplex& K, const Simplex& s) {
  std::string t = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) t += ',';
    t += K.token(s[i]);
  }
  t += '}';
  return t;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& K) {
  std::vector<std::string> tokens;
  for (int q = 0; q <= K.dim(); ++q) {
    for (const Simplex& s : K.simplices(q)) tokens.push_back(barycenter_token(K, s));
  }
  std::sort(tokens.begin(), tokens.end());
  if (std::adjacent_find(tokens.begin(), tokens.end()) != tokens.end()) {
    fail(ErrorKind::InternalMismatch, "barycenter tokens collide");
  }
  auto id_of = [&](const Simplex& s) {
    auto it = std::lower_bound(tokens.begin(), tokens.end(), barycenter_token(K, s));
    return static_cast<VertexId>(it - tokens.begin());
  };
  std::vector<Simplex> chains;
  for (const Simplex& top : K.maximal_simplices()) {
    Simplex perm = top;
    do {
      Simplex chain;
      Simplex prefix;
      for (VertexId v : perm) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        chain.push_back(id_of(prefix));
      }
      chains.push_back(std::move(chain));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return SimplicialComplex::from_ids(std::move(tokens), chains);
}

SimplicialComplex iterated_subdivision(const SimplicialComplex& K, int times) {
  SimplicialComplex result = K;
  for (int i = 0; i < times; ++i) result = barycentric_subdivision(result);
  return result;
}

SimplicialMap subdivide_map(const SimplicialMap& f) {
  const SimplicialComplex& K = f.source();
  const SimplicialComplex& L = f.target();
  SimplicialComplex sdK = barycentric_subdivision(K);
  SimplicialComplex sdL = barycentric_subdivision(L);
  std::vector<VertexId> vm(sdK.vertex_count());
  for (int q = 0; q <= K.dim(); ++q) {
    for (const Simplex& s : K.simplices(q)) {
      auto from = sdK.vertex_id(barycenter_token(K, s));
      auto to = sdL.vertex_id(barycenter_token(L, f.image(s)));
      vm[*from] = *to;
    }
  }
  return SimplicialMap(std::move(sdK), std::move(sdL), std::move(vm));
}

std::string product_token(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

SimplicialComplex product(const SimplicialComplex& K, const SimplicialComplex& L) {
  const std::size_t nK = K.vertex_count();
  const std::size_t nL = L.vertex_count();
  std::vector<std::string> tokens;
  tokens.reserve(nK * nL);
  for (VertexId a = 0; a < nK; ++a) {
    for (VertexId b = 0; b < nL; ++b) tokens.push_back(product_token(K.token(a), L.token(b)));
  }
  std::vector<VertexId> pair_id(nK * nL);
  {
    std::vector<std::size_t> order(tokens.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return tokens[x] < tokens[y]; });
    std::vector<std::string> sorted(tokens.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
      sorted[r] = tokens[order[r]];
      pair_id[order[r]] = static_cast<VertexId>(r);
    }
    tokens = std::move(sorted);
  }

  std::vector<Simplex> staircases;
  const auto maxK = K.maximal_simplices();
  const auto maxL = L.maximal_simplices();
  for (const Simplex& s : maxK) {
    for (const Simplex& t : maxL) {
      const std::size_t p = s.size() - 1;
      const std::size_t q = t.size() - 1;
      // Monotone lattice paths (0,0) -> (p,q), encoded by which of the p+q
      // steps move in the first factor.
      std::vector<bool> moves(p + q, false);
      std::fill(moves.begin(), moves.begin() + static_cast<std::ptrdiff_t>(p), true);
      std::sort(moves.begin(), moves.end());
      do {
        Simplex chain;
        std::size_t i = 0;
        std::size_t j = 0;
        chain.push_back(pair_id[s[i] * nL + t[j]]);
        for (bool step_first : moves) {
          step_first ? ++i : ++j;
          chain.push_back(pair_id[s[i] * nL + t[j]]);
        }
        staircases.push_back(std::move(chain));
      } while (std::next_permutation(moves.begin(), moves.end()));
    }
  }
  return SimplicialComplex::from_ids(std::move(tokens), staircases);
}

SimplicialComplex subcomplex_from(const SimplicialComplex& K, const std::vector<Simplex>& simplices) {
  std::vector<VertexId> used;
  for (const Simplex& s : simplices) used.insert(used.end(), s.begin(), s.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<std::string> tokens;
  tokens.reserve(used.size());
  for (VertexId v : used) tokens.push_back(K.token(v));
  std::vector<Simplex> remapped;
  remapped.reserve(simplices.size());
  for (const Simplex& s : simplices) {
    Simplex r;
    r.reserve(s.size());
    for (VertexId v : s) {
      r.push_back(static_cast<VertexId>(std::lower_bound(used.begin(), used.end(), v) - used.begin()));
    }
    remapped.push_back(std::move(r));
  }
  return SimplicialComplex::from_ids(std::move(tokens), remapped);
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& K,
                                     const std::vector<VertexId>& vertices) {
  std::vector<bool> keep(K.vertex_count(), false);
  for (VertexId v : vertices) keep.at(v) = true;
  std::vector<Simplex> kept;
  for (const Simplex& s : K.maximal_simplices()) {
    Simplex r;
    for (VertexId v : s) {
      if (keep[v]) r.push_back(v);
    }
    if (!r.empty()) kept.push_back(std::move(r));
  }
  return subcomplex_from(K, kept);
}

SimplicialComplex full_subcomplex_complement(const SimplicialComplex& K, const SimplicialComplex& A) {
  if (!A.is_subcomplex_of(K)) fail(ErrorKind::NotASubcomplex, "A is not a subcomplex of K");
  std::vector<bool> in_a(K.vertex_count(), false);
  for (const auto& t : A.tokens()) in_a[*K.vertex_id(t)] = true;
  std::vector<VertexId> rest;
  for (VertexId v = 0; v < K.vertex_count(); ++v) {
    if (!in_a[v]) rest.push_back(v);
  }
  return induced_subcomplex(K, rest);
}

SimplicialComplex complex_union(const SimplicialComplex& A, const SimplicialComplex& B) {
  auto maximal = A.maximal_token_simplices();
  auto more = B.maximal_token_simplices();
  maximal.insert(maximal.end(), more.begin(), more.end());
  return SimplicialComplex::from_maximal(maximal);
}

SimplicialComplex complex_intersection(const SimplicialComplex& A, const SimplicialComplex& B) {
  std::vector<TokenSimplex> common;
  for (int q = 0; q <= A.dim(); ++q) {
    for (const Simplex& s : A.simplices(q)) {
      auto tokens = A.to_tokens(s);
      auto ids = B.to_ids(tokens);
      if (ids && B.contains(*ids)) common.push_back(std::move(tokens));
    }
  }
  return SimplicialComplex::from_maximal(common);
}

SimplicialComplex relabel(const SimplicialComplex& K, const std::map<std::string, std::string>& rename) {
  std::vector<TokenSimplex> maximal;
  std::set<std::string> images;
  for (const auto& t : K.tokens()) {
    auto it = rename.find(t);
    if (it == rename.end()) fail(ErrorKind::InvalidMap, "relabel misses vertex '" + t + "'");
    if (!images.insert(it->second).second) fail(ErrorKind::InvalidMap, "relabel is not injective");
  }
  for (const auto& s : K.maximal_token_simplices()) {
    TokenSimplex r;
    for (const auto& t : s) r.push_back(rename.at(t));
    maximal.push_back(std::move(r));
  }
  return SimplicialComplex::from_maximal(maximal);
}

SimplicialComplex boundary_complex(const SimplicialComplex& K) {
  const int n = K.dim();
  if (n < 1) return SimplicialComplex();
  std::vector<std::size_t> cofaces(K.count(n - 1), 0);
  for (const Simplex& s : K.simplices(n)) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      ++cofaces[*K.index_of(face)];
    }
  }
  std::vector<Simplex> faces;
  for (std::size_t i = 0; i < cofaces.size(); ++i) {
    if (cofaces[i] == 1) faces.push_back(K.simplices(n - 1)[i]);
  }
  return subcomplex_from(K, faces);
}

namespace {

std::vector<std::vector<VertexId>> adjacency(const SimplicialComplex& K) {
  std::vector<std::vector<VertexId>> adj(K.vertex_count());
  for (const Simplex& e : K.simplices(1)) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

Edge ordered_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

std::vector<Edge> spanning_tree(const SimplicialComplex& K) {
  std::vector<Edge> tree;
  if (K.vertex_count() == 0) return tree;
  const auto adj = adjacency(K);
  std::vector<bool> seen(K.vertex_count(), false);
  std::vector<VertexId> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId v = queue[head];
    for (VertexId w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      tree.push_back(ordered_edge(v, w));
      queue.push_back(w);
    }
  }
  if (queue.size() != K.vertex_count()) fail(ErrorKind::Disconnected, "complex is not connected");
  std::sort(tree.begin(), tree.end());
  return tree;
}

std::vector<Edge> random_spanning_tree(const SimplicialComplex& K, std::mt19937_64& rng) {
  std::vector<Edge> tree;
  if (K.vertex_count() == 0) return tree;
  const auto adj = adjacency(K);
  std::vector<bool> seen(K.vertex_count(), false);
  std::uniform_int_distribution<std::size_t> pick_root(0, K.vertex_count() - 1);
  VertexId root = static_cast<VertexId>(pick_root(rng));
  seen[root] = true;
  std::size_t reached = 1;
  std::vector<Edge> frontier;
  for (VertexId w : adj[root]) frontier.emplace_back(root, w);
  while (!frontier.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
    std::size_t i = pick(rng);
    auto [from, to] = frontier[i];
    frontier[i] = frontier.back();
    frontier.pop_back();
    if (seen[to]) continue;
    seen[to] = true;
    ++reached;
    tree.push_back(ordered_edge(from, to));
    for (VertexId w : adj[to]) {
      if (!seen[w]) frontier.emplace_back(to, w);
    }
  }
  if (reached != K.vertex_count()) fail(ErrorKind::Disconnected, "complex is not connected");
  std::sort(tree.begin(), tree.end());
  return tree;
}

}  // namespace topo
