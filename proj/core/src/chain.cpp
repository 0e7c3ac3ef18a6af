#include "topo/chain.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <utility>

#include "topo/error.hpp"

namespace topo {

Coefficients Coefficients::prime(unsigned long p) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  return Coefficients(Kind::PrimeField, p);
}

Coefficients Coefficients::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text[0] == 'F') {
    unsigned long p = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), p);
    if (ec == std::errc() && ptr == text.data() + text.size()) return prime(p);
  }
  fail(ErrorKind::ParseError, "coefficients must be Z, Q or F<p>, got '" + std::string(text) + "'");
}

Field Coefficients::field() const {
  switch (kind_) {
    case Kind::Rationals:
      return Field::rationals();
    case Kind::PrimeField:
      return Field::prime(p_);
    case Kind::Integers:
      break;
  }
  fail(ErrorKind::RangeError, "Z is not a field");
}

std::string Coefficients::name() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::PrimeField:
      return "F" + std::to_string(p_);
  }
  return "?";
}

// ---------------------------------------------------------------------------

ChainComplexRep ChainComplexRep::build(const SimplicialComplex& K,
                                       const std::optional<SimplicialComplex>& rel,
                                       bool augmented) {
  if (rel && !rel->is_subcomplex_of(K)) {
    fail(ErrorKind::NotASubcomplex, "relative subcomplex is not contained in the complex");
  }
  ChainComplexRep C;
  C.K_ = K;
  C.relative_ = rel.has_value() && !rel->empty();
  C.augmented_ = augmented && !C.relative_;
  const int dim = K.dim();

  auto in_rel = [&](const Simplex& s) {
    if (!C.relative_) return false;
    auto ids = rel->to_ids(K.to_tokens(s));
    return ids && rel->contains(*ids);
  };

  C.basis_.resize(static_cast<std::size_t>(std::max(dim + 1, 0)));
  for (int q = 0; q <= dim; ++q) {
    for (const Simplex& s : K.simplices(q)) {
      if (!in_rel(s)) C.basis_[q].push_back(s);
    }
  }

  // ranks_ and boundaries_ are indexed by q + 1 for q in [-1, dim + 1].
  C.ranks_.assign(static_cast<std::size_t>(dim + 3), 0);
  if (C.augmented_) C.ranks_[0] = 1;
  for (int q = 0; q <= dim; ++q) C.ranks_[q + 1] = C.basis_[q].size();

  C.boundaries_.resize(static_cast<std::size_t>(dim + 3));
  C.boundaries_[0] = IntMatrix(0, C.ranks_[0]);
  for (int q = 0; q <= dim + 1; ++q) {
    const std::size_t rows = C.ranks_[q];
    const std::size_t cols = q <= dim ? C.ranks_[q + 1] : 0;
    IntMatrix D(rows, cols);
    if (q == 0) {
      if (C.augmented_) {
        for (std::size_t c = 0; c < cols; ++c) D.set_column(c, {{0, Integer(1)}});
      }
    } else if (q <= dim) {
      for (std::size_t c = 0; c < cols; ++c) {
        const Simplex& s = C.basis_[q][c];
        IntMatrix::Column col;
        for (std::size_t i = 0; i < s.size(); ++i) {
          Simplex face = s;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          auto row = C.basis_index(q - 1, face);
          if (!row) continue;
          col.emplace_back(*row, Integer(i % 2 == 0 ? 1 : -1));
        }
        std::sort(col.begin(), col.end(),
                  [](const IntMatrix::Entry& a, const IntMatrix::Entry& b) { return a.first < b.first; });
        D.set_column(c, std::move(col));
      }
    }
    C.boundaries_[q + 1] = std::move(D);
  }
  return C;
}

std::size_t ChainComplexRep::rank(int q) const {
  if (q < -1 || q + 1 >= static_cast<int>(ranks_.size())) return 0;
  return ranks_[q + 1];
}

const IntMatrix& ChainComplexRep::boundary(int q) const {
  static const IntMatrix empty;
  if (q < -1 || q + 1 >= static_cast<int>(boundaries_.size())) return empty;
  return boundaries_[q + 1];
}

const std::vector<Simplex>& ChainComplexRep::basis(int q) const {
  static const std::vector<Simplex> none;
  if (q < 0 || q >= static_cast<int>(basis_.size())) return none;
  return basis_[q];
}

std::optional<std::size_t> ChainComplexRep::basis_index(int q, const Simplex& s) const {
  const auto& b = basis(q);
  auto it = std::lower_bound(b.begin(), b.end(), s);
  if (it == b.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - b.begin());
}

// ---------------------------------------------------------------------------

int sorting_sign(std::vector<VertexId>& tuple) {
  int sign = 1;
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
      if (tuple[j - 1] == tuple[j]) return 0;
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
    }
  }
  return sign;
}

IntMatrix chain_map_matrix(const SimplicialMap& f, int q) {
  const auto& src = f.source().simplices(q);
  IntMatrix M(f.target().count(q), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    std::vector<VertexId> img;
    img.reserve(src[c].size());
    for (VertexId v : src[c]) img.push_back(f(v));
    const int sign = sorting_sign(img);
    if (sign == 0) continue;
    auto row = f.target().index_of(img);
    if (!row) fail(ErrorKind::InvalidMap, "image of a simplex is not a simplex");
    M.set_column(c, {{*row, Integer(sign)}});
  }
  return M;
}

namespace {

using Term = std::pair<std::vector<VertexId>, int>;

class Subdivider {
 public:
  Subdivider(const SimplicialComplex& K, const SimplicialComplex& sd) : K_(K), sd_(sd) {}

  const std::vector<Term>& terms(const Simplex& s) {
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    const VertexId b = *sd_.vertex_id(barycenter_token(K_, s));
    std::vector<Term> out;
    if (s.size() == 1) {
      out.push_back({{b}, 1});
    } else {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        const int sign = i % 2 == 0 ? 1 : -1;
        for (const auto& [tuple, c] : terms(face)) {
          std::vector<VertexId> t;
          t.reserve(tuple.size() + 1);
          t.push_back(b);
          t.insert(t.end(), tuple.begin(), tuple.end());
          out.emplace_back(std::move(t), c * sign);
        }
      }
    }
    return memo_.emplace(s, std::move(out)).first->second;
  }

  IntMatrix matrix(int q) {
    const auto& src = K_.simplices(q);
    IntMatrix M(sd_.count(q), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      std::map<std::size_t, Integer> acc;
      for (const auto& [tuple, coeff] : terms(src[c])) {
        std::vector<VertexId> t = tuple;
        const int sign = sorting_sign(t);
        if (sign == 0) continue;
        acc[*sd_.index_of(t)] += coeff * sign;
      }
      IntMatrix::Column col;
      for (auto& [r, v] : acc) {
        if (sgn(v) != 0) col.emplace_back(r, std::move(v));
      }
      M.set_column(c, std::move(col));
    }
    return M;
  }

 private:
  const SimplicialComplex& K_;
  const SimplicialComplex& sd_;
  std::map<Simplex, std::vector<Term>> memo_;
};

}  // namespace

IntMatrix subdivision_chain_matrix(const SimplicialComplex& K, int q) {
  const SimplicialComplex sd = barycentric_subdivision(K);
  return Subdivider(K, sd).matrix(q);
}

IntMatrix inclusion_matrix(const SimplicialComplex& sub, const SimplicialComplex& ambient, int q) {
  const auto& src = sub.simplices(q);
  IntMatrix M(ambient.count(q), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    auto ids = ambient.to_ids(sub.to_tokens(src[c]));
    auto row = ids ? ambient.index_of(*ids) : std::nullopt;
    if (!row) fail(ErrorKind::NotASubcomplex, "simplex missing from the ambient complex");
    M.set_column(c, {{*row, Integer(1)}});
  }
  return M;
}

// ---------------------------------------------------------------------------

ChainMap::ChainMap(SimplicialComplex source, SimplicialComplex target, std::vector<IntMatrix> matrices)
    : source_(std::move(source)), target_(std::move(target)), matrices_(std::move(matrices)) {
  const int dim = source_.dim();
  if (static_cast<int>(matrices_.size()) != dim + 1) {
    fail(ErrorKind::DimensionMismatch, "chain map needs one matrix per source degree");
  }
  for (int q = 0; q <= dim; ++q) {
    const IntMatrix& M = matrices_[q];
    if (M.rows() != target_.count(q) || M.cols() != source_.count(q)) {
      fail(ErrorKind::DimensionMismatch, "chain map matrix has the wrong shape in degree " + std::to_string(q));
    }
  }
}

ChainMap ChainMap::from_simplicial(const SimplicialMap& f) {
  std::vector<IntMatrix> m;
  for (int q = 0; q <= f.source().dim(); ++q) m.push_back(chain_map_matrix(f, q));
  return ChainMap(f.source(), f.target(), std::move(m));
}

ChainMap ChainMap::subdivision(const SimplicialComplex& K, int times) {
  if (times < 0) fail(ErrorKind::RangeError, "negative subdivision count");
  ChainMap acc = identity(K);
  SimplicialComplex current = K;
  for (int t = 0; t < times; ++t) {
    SimplicialComplex next = barycentric_subdivision(current);
    Subdivider sd(current, next);
    std::vector<IntMatrix> m;
    for (int q = 0; q <= current.dim(); ++q) m.push_back(sd.matrix(q));
    acc = compose(ChainMap(current, next, std::move(m)), acc);
    current = std::move(next);
  }
  return acc;
}

ChainMap ChainMap::identity(const SimplicialComplex& K) {
  std::vector<IntMatrix> m;
  for (int q = 0; q <= K.dim(); ++q) m.push_back(IntMatrix::identity(K.count(q)));
  return ChainMap(K, K, std::move(m));
}

IntMatrix ChainMap::matrix(int q) const {
  if (q < 0 || q >= static_cast<int>(matrices_.size())) {
    return IntMatrix(target_.count(q), source_.count(q));
  }
  return matrices_[q];
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!(f.target() == g.source())) fail(ErrorKind::InvalidMap, "chain maps do not compose");
  std::vector<IntMatrix> m;
  for (int q = 0; q <= f.source().dim(); ++q) m.push_back(g.matrix(q) * f.matrix(q));
  return ChainMap(f.source(), g.target(), std::move(m));
}

}  // namespace topo
