#include "topo/cohomology.hpp"

#include <algorithm>

#include "topo/error.hpp"

namespace topo {

IntMatrix coboundary(const ChainComplexRep& C, int q) {
  const IntMatrix& d = C.boundary(q + 1);
  if (d.rows() == 0 && d.cols() == 0) return IntMatrix(C.rank(q + 1), C.rank(q));
  return d.transpose();
}

std::vector<HomologyGroup> cohomology_groups(const SimplicialComplex& K, const Coefficients& coeff,
                                             const std::optional<SimplicialComplex>& rel) {
  const ChainComplexRep C = ChainComplexRep::build(K, rel);
  const int top = C.top_degree();
  std::vector<HomologyGroup> out;
  // index q + 1 holds δ^q for q in [-1, top]
  std::vector<std::size_t> ranks(static_cast<std::size_t>(std::max(top + 2, 0)));
  std::vector<std::vector<Integer>> factors(ranks.size());
  for (int q = -1; q <= top; ++q) {
    const IntMatrix delta = coboundary(C, q);
    if (coeff.is_field()) {
      ranks[q + 1] = rank_over_field(delta, coeff.characteristic());
    } else {
      factors[q + 1] = invariant_factors(delta);
      ranks[q + 1] = factors[q + 1].size();
    }
  }
  for (int q = 0; q <= top; ++q) {
    HomologyGroup h{q, C.rank(q) - ranks[q + 1] - ranks[q], {}};
    for (const auto& d : factors[q]) {
      if (d > 1) h.torsion.push_back(d);
    }
    out.push_back(std::move(h));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const ClassSpace> ClassSpace::create(const SimplicialComplex& K, const Field& F) {
  return std::shared_ptr<const ClassSpace>(new ClassSpace(K, F));
}

HomologyClass ClassSpace::homology_class(int q, std::vector<Scalar> coords) const {
  const HomologyBasis& b = H_.basis(q);
  if (coords.size() != b.dimension()) fail(ErrorKind::DimensionMismatch, "homology coordinates have the wrong length");
  HomologyClass z;
  z.space_ = shared_from_this();
  z.q_ = q;
  z.rep_ = b.cycle_of(coords);
  z.coords_ = std::move(coords);
  return z;
}

CohomologyClass ClassSpace::cohomology_class(int q, std::vector<Scalar> coords) const {
  const HomologyBasis& b = H_.basis(q);
  if (coords.size() != b.dimension()) fail(ErrorKind::DimensionMismatch, "cohomology coordinates have the wrong length");
  CohomologyClass c;
  c.space_ = shared_from_this();
  c.q_ = q;
  c.rep_ = b.cocycle_of(coords);
  c.coords_ = std::move(coords);
  return c;
}

HomologyClass ClassSpace::class_of_cycle(int q, const SparseVector& chain) const {
  HomologyClass z;
  z.space_ = shared_from_this();
  z.q_ = q;
  z.coords_ = H_.basis(q).coordinates(chain);
  z.rep_ = chain;
  return z;
}

CohomologyClass ClassSpace::class_of_cocycle(int q, const SparseVector& cochain) const {
  const IntMatrix delta = coboundary(H_.chains(), q);
  if (!sparse::apply(field(), delta, cochain).empty()) {
    fail(ErrorKind::InternalMismatch, "cochain in degree " + std::to_string(q) + " is not a cocycle");
  }
  CohomologyClass c;
  c.space_ = shared_from_this();
  c.q_ = q;
  c.coords_ = H_.basis(q).cocycle_coordinates(cochain);
  c.rep_ = cochain;
  return c;
}

HomologyClass ClassSpace::basis_homology(int q, std::size_t i) const {
  std::vector<Scalar> e(H_.dimension(q), Scalar(0));
  e.at(i) = 1;
  return homology_class(q, std::move(e));
}

CohomologyClass ClassSpace::basis_cohomology(int q, std::size_t i) const {
  std::vector<Scalar> e(H_.dimension(q), Scalar(0));
  e.at(i) = 1;
  return cohomology_class(q, std::move(e));
}

CohomologyClass ClassSpace::unit() const {
  SparseVector ones;
  for (std::size_t v = 0; v < complex().vertex_count(); ++v) ones.emplace_back(v, Scalar(1));
  return class_of_cocycle(0, ones);
}

bool HomologyClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

bool CohomologyClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

namespace {

void same_space(const std::shared_ptr<const ClassSpace>& a, const std::shared_ptr<const ClassSpace>& b) {
  if (a != b) fail(ErrorKind::DimensionMismatch, "classes live on different complexes");
}

}  // namespace

Scalar kronecker(const CohomologyClass& phi, const HomologyClass& z) {
  if (phi.degree() != z.degree()) {
    fail(ErrorKind::DegreeMismatch, "Kronecker product of degrees " + std::to_string(phi.degree()) + " and " +
                                        std::to_string(z.degree()));
  }
  same_space(phi.space(), z.space());
  return sparse::dot(phi.space()->field(), phi.representative(), z.representative());
}

SparseVector cup_cochain(const SimplicialComplex& K, const Field& F, int p, const SparseVector& phi, int q,
                         const SparseVector& theta) {
  SparseVector out;
  if (phi.empty() || theta.empty()) return out;
  const auto a = sparse::to_dense(phi, K.count(p));
  const auto b = sparse::to_dense(theta, K.count(q));
  const auto& top = K.simplices(p + q);
  for (std::size_t s = 0; s < top.size(); ++s) {
    const Simplex& sigma = top[s];
    const Simplex front(sigma.begin(), sigma.begin() + p + 1);
    const Simplex back(sigma.begin() + p, sigma.end());
    const Scalar& x = a[*K.index_of(front)];
    if (sgn(x) == 0) continue;
    const Scalar& y = b[*K.index_of(back)];
    if (sgn(y) == 0) continue;
    out.emplace_back(s, F.mul(x, y));
  }
  return out;
}

CohomologyClass cup(const CohomologyClass& phi, const CohomologyClass& theta) {
  same_space(phi.space(), theta.space());
  const auto& space = phi.space();
  const int n = phi.degree() + theta.degree();
  if (n > space->dim()) {
    CohomologyClass zero = space->cohomology_class(n, {});
    zero.overflow_ = true;
    return zero;
  }
  const SparseVector c = cup_cochain(space->complex(), space->field(), phi.degree(), phi.representative(),
                                     theta.degree(), theta.representative());
  return space->class_of_cocycle(n, c);
}

HomologyClass cap(const HomologyClass& z, const CohomologyClass& phi) {
  same_space(z.space(), phi.space());
  const int p = phi.degree();
  const int q = z.degree() - p;
  if (q < 0) {
    fail(ErrorKind::DegreeMismatch, "cap of a degree " + std::to_string(z.degree()) + " class with a degree " +
                                        std::to_string(p) + " class");
  }
  const auto& space = z.space();
  const SimplicialComplex& K = space->complex();
  const Field& F = space->field();
  const auto a = sparse::to_dense(phi.representative(), K.count(p));
  const auto& simplices = K.simplices(z.degree());
  SparseVector out;
  for (const auto& [s, c] : z.representative()) {
    const Simplex& sigma = simplices[s];
    const Simplex front(sigma.begin(), sigma.begin() + p + 1);
    const Scalar& x = a[*K.index_of(front)];
    if (sgn(x) == 0) continue;
    const Simplex back(sigma.begin() + p, sigma.end());
    out = sparse::axpy(F, out, F.mul(c, x), {{*K.index_of(back), Scalar(1)}});
  }
  return space->class_of_cycle(q, out);
}

// ---------------------------------------------------------------------------

CohomologyRing::CohomologyRing(std::shared_ptr<const ClassSpace> space) : space_(std::move(space)) {
  const int n = space_->dim();
  std::vector<std::vector<CohomologyClass>> basis(static_cast<std::size_t>(std::max(n + 1, 0)));
  for (int q = 0; q <= n; ++q) {
    for (std::size_t i = 0; i < dimension(q); ++i) basis[q].push_back(space_->basis_cohomology(q, i));
  }
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; p + q <= n; ++q) {
      for (std::size_t i = 0; i < basis[p].size(); ++i) {
        for (std::size_t j = 0; j < basis[q].size(); ++j) {
          table_[{p, i, q, j}] = cup(basis[p][i], basis[q][j]).coordinates();
        }
      }
    }
  }
  if (n >= 0) unit_ = space_->unit().coordinates();
}

std::size_t CohomologyRing::dimension(int q) const { return space_->homology().dimension(q); }

std::vector<std::size_t> CohomologyRing::dimensions() const {
  std::vector<std::size_t> d;
  for (int q = 0; q <= dim(); ++q) d.push_back(dimension(q));
  return d;
}

const std::vector<Scalar>& CohomologyRing::product(int p, std::size_t i, int q, std::size_t j) const {
  auto it = table_.find({p, i, q, j});
  if (it == table_.end()) {
    if (p + q > dim() && i < dimension(p) && j < dimension(q)) return none_;
    fail(ErrorKind::IndexOutOfRange, "no such basis product");
  }
  return it->second;
}

std::vector<Scalar> CohomologyRing::multiply(int p, const std::vector<Scalar>& a, int q,
                                             const std::vector<Scalar>& b) const {
  if (a.size() != dimension(p) || b.size() != dimension(q)) {
    fail(ErrorKind::DimensionMismatch, "coordinate length mismatch in ring product");
  }
  if (p + q > dim()) return {};
  const Field& F = field();
  std::vector<Scalar> out(dimension(p + q), Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      const Scalar c = F.mul(a[i], b[j]);
      const auto& e = product(p, i, q, j);
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (sgn(e[k]) != 0) out[k] = F.add(out[k], F.mul(c, e[k]));
      }
    }
  }
  return out;
}

CohomologyRing ring_structure(const SimplicialComplex& K, const Coefficients& coeff) {
  return CohomologyRing(ClassSpace::create(K, coeff.field()));
}

// ---------------------------------------------------------------------------

namespace {

struct Element {
  int degree;
  std::vector<Scalar> coords;
};

}  // namespace

std::variant<ExteriorRank, NotFreeExterior> exterior_rank_degrees(const CohomologyRing& ring) {
  const Field& F = ring.field();
  if (!F.is_rational()) return NotFreeExterior{"exterior detection needs characteristic 0"};
  const int n = ring.dim();
  if (n < 0 || ring.dimension(0) != 1) return NotFreeExterior{"H^0 is not one-dimensional"};

  auto is_zero = [](const std::vector<Scalar>& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) == 0; });
  };
  // Ordered monomials on the generators; 2^r of them.
  auto monomials = [&](const std::vector<Element>& gens) {
    std::vector<Element> out{{0, ring.unit()}};
    for (const Element& g : gens) {
      const std::size_t count = out.size();
      for (std::size_t m = 0; m < count; ++m) {
        const int d = out[m].degree + g.degree;
        if (d > n) {
          out.push_back({d, {}});
        } else {
          out.push_back({d, ring.multiply(out[m].degree, out[m].coords, g.degree, g.coords)});
        }
      }
    }
    return out;
  };

  std::vector<Element> gens;
  for (int d = 1; d <= n; ++d) {
    Reducer span(F);
    for (const Element& m : monomials(gens)) {
      if (m.degree == d && !m.coords.empty()) span.insert(sparse::from_dense(F, m.coords));
    }
    for (std::size_t i = 0; i < ring.dimension(d); ++i) {
      std::vector<Scalar> e(ring.dimension(d), Scalar(0));
      e[i] = 1;
      if (!span.insert(sparse::from_dense(F, e))) continue;
      if (d % 2 == 0) return NotFreeExterior{"indecomposable class in even degree " + std::to_string(d)};
      gens.push_back({d, e});
    }
  }

  const auto monos = monomials(gens);
  std::vector<std::size_t> expected(static_cast<std::size_t>(n + 1), 0);
  for (const Element& m : monos) {
    if (m.degree > n) return NotFreeExterior{"monomial above the top degree"};
    if (m.coords.empty() || is_zero(m.coords)) {
      return NotFreeExterior{"a generator monomial vanishes in degree " + std::to_string(m.degree)};
    }
    ++expected[m.degree];
  }
  for (int d = 0; d <= n; ++d) {
    if (expected[d] != ring.dimension(d)) {
      return NotFreeExterior{"Poincare polynomial differs from the exterior one in degree " + std::to_string(d)};
    }
    Reducer span(F);
    for (const Element& m : monos) {
      if (m.degree == d) span.insert(sparse::from_dense(F, m.coords));
    }
    if (span.rank() != ring.dimension(d)) {
      return NotFreeExterior{"monomials are dependent in degree " + std::to_string(d)};
    }
  }
  ExteriorRank out;
  out.r = gens.size();
  for (const Element& g : gens) out.degrees.push_back(g.degree);
  return out;
}

}  // namespace topo
