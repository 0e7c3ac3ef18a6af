#include "topo/homology.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "topo/error.hpp"

namespace topo {

std::string HomologyGroup::describe(const std::string& ring) const {
  std::vector<std::string> parts;
  if (betti == 1) parts.push_back(ring);
  if (betti > 1) parts.push_back(ring + "^" + std::to_string(betti));
  for (const auto& t : torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

std::vector<HomologyGroup> homology(const ChainComplexRep& C, const Coefficients& coeff) {
  const int top = C.top_degree();
  std::vector<HomologyGroup> out;
  if (coeff.is_field()) {
    std::vector<std::size_t> ranks(static_cast<std::size_t>(std::max(top + 2, 0)));
    for (int q = 0; q <= top + 1; ++q) ranks[q] = rank_over_field(C.boundary(q), coeff.characteristic());
    for (int q = 0; q <= top; ++q) out.push_back({q, C.rank(q) - ranks[q] - ranks[q + 1], {}});
    return out;
  }
  std::vector<std::vector<Integer>> factors(static_cast<std::size_t>(std::max(top + 2, 0)));
  for (int q = 0; q <= top + 1; ++q) factors[q] = invariant_factors(C.boundary(q));
  for (int q = 0; q <= top; ++q) {
    HomologyGroup h{q, C.rank(q) - factors[q].size() - factors[q + 1].size(), {}};
    for (const auto& d : factors[q + 1]) {
      if (d > 1) h.torsion.push_back(d);
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<HomologyGroup> homology(const SimplicialComplex& K, const Coefficients& coeff,
                                    const std::optional<SimplicialComplex>& rel, bool reduced) {
  return homology(ChainComplexRep::build(K, rel, reduced), coeff);
}

std::vector<std::size_t> betti_numbers(const SimplicialComplex& K, const Field& F) {
  const Coefficients c = F.is_rational() ? Coefficients::rationals() : Coefficients::prime(F.characteristic());
  std::vector<std::size_t> b;
  for (const auto& h : homology(K, c)) b.push_back(h.betti);
  return b;
}

std::vector<std::size_t> betti_numbers(const SimplicialComplex& K) {
  return betti_numbers(K, Field::rationals());
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Over Q, rescale to a primitive integer vector with positive leading entry
// so representatives stay readable and deterministic.
SparseVector normalize(const Field& F, SparseVector v) {
  if (!F.is_rational() || v.empty()) return v;
  Integer den = 1;
  for (const auto& [i, s] : v) den = lcm(den, Integer(s.get_den()));
  Integer g = 0;
  for (const auto& [i, s] : v) g = gcd(g, Integer(s.get_num() * (den / s.get_den())));
  Scalar factor(den, g);
  factor.canonicalize();
  if (sgn(v.back().second) < 0) factor = -factor;
  for (auto& [i, s] : v) s *= factor;
  return v;
}

}  // namespace

HomologyBasis::HomologyBasis(const ChainComplexRep& C, int q, Field F)
    : q_(q), F_(F), span_(F), boundary_(C.boundary(q)) {
  const std::size_t n = C.rank(q);
  if (n == 0) return;

  Reducer kernel(F_);
  for (std::size_t c = 0; c < boundary_.cols(); ++c) kernel.insert(sparse::from_column(F_, boundary_.column(c)));

  const IntMatrix& up = C.boundary(q + 1);
  for (std::size_t c = 0; c < up.cols(); ++c) {
    span_.insert(sparse::from_column(F_, up.column(c)));
    generator_slot_.push_back(npos);
  }
  boundary_generators_ = up.cols();
  for (const auto& rel : kernel.relations()) {
    SparseVector z = normalize(F_, rel);
    if (span_.insert(z)) {
      generator_slot_.push_back(cycles_.size());
      cycles_.push_back(std::move(z));
    } else {
      generator_slot_.push_back(npos);
    }
  }
  const std::size_t h = cycles_.size();
  if (h == 0) return;

  // Cocycles are the kernel of ∂_{q+1}^T; choose h of them pairing
  // invertibly with the cycles and rotate them into the dual basis.
  Reducer cokernel(F_);
  const IntMatrix upT = up.transpose();
  for (std::size_t c = 0; c < upT.cols(); ++c) cokernel.insert(sparse::from_column(F_, upT.column(c)));
  Reducer pairing(F_);
  std::vector<SparseVector> chosen;
  ScalarMatrix M;
  for (const auto& rel : cokernel.relations()) {
    SparseVector psi = normalize(F_, rel);
    std::vector<Scalar> row(h);
    for (std::size_t j = 0; j < h; ++j) row[j] = sparse::dot(F_, psi, cycles_[j]);
    if (!pairing.insert(sparse::from_dense(F_, row))) continue;
    chosen.push_back(std::move(psi));
    M.push_back(std::move(row));
    if (chosen.size() == h) break;
  }
  if (chosen.size() != h) fail(ErrorKind::InternalMismatch, "cohomology does not pair with homology");
  const ScalarMatrix Minv = inverse(F_, M);
  for (std::size_t i = 0; i < h; ++i) {
    SparseVector phi;
    for (std::size_t k = 0; k < h; ++k) {
      if (sgn(Minv[i][k]) != 0) phi = sparse::axpy(F_, phi, Minv[i][k], chosen[k]);
    }
    cocycles_.push_back(std::move(phi));
  }
}

std::vector<Scalar> HomologyBasis::coordinates(const SparseVector& chain) const {
  std::vector<Scalar> coords(cycles_.size(), Scalar(0));
  if (chain.empty()) return coords;
  if (!sparse::apply(F_, boundary_, chain).empty()) {
    fail(ErrorKind::InternalMismatch, "chain in degree " + std::to_string(q_) + " is not a cycle");
  }
  const Reducer::Reduction red = span_.reduce(chain);
  if (!red.remainder.empty()) {
    fail(ErrorKind::InternalMismatch, "cycle escapes the homology basis in degree " + std::to_string(q_));
  }
  for (const auto& [g, c] : red.combination) {
    if (g < generator_slot_.size() && generator_slot_[g] != npos) coords[generator_slot_[g]] = c;
  }
  return coords;
}

std::vector<Scalar> HomologyBasis::cocycle_coordinates(const SparseVector& cochain) const {
  std::vector<Scalar> coords(cycles_.size(), Scalar(0));
  for (std::size_t j = 0; j < cycles_.size(); ++j) coords[j] = sparse::dot(F_, cochain, cycles_[j]);
  return coords;
}

SparseVector HomologyBasis::cycle_of(const std::vector<Scalar>& coords) const {
  if (coords.size() != cycles_.size()) fail(ErrorKind::DimensionMismatch, "coordinate length mismatch");
  SparseVector v;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (sgn(coords[j]) != 0) v = sparse::axpy(F_, v, coords[j], cycles_[j]);
  }
  return v;
}

SparseVector HomologyBasis::cocycle_of(const std::vector<Scalar>& coords) const {
  if (coords.size() != cocycles_.size()) fail(ErrorKind::DimensionMismatch, "coordinate length mismatch");
  SparseVector v;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (sgn(coords[j]) != 0) v = sparse::axpy(F_, v, coords[j], cocycles_[j]);
  }
  return v;
}

FieldHomology::FieldHomology(SimplicialComplex K, Field F)
    : F_(F), chains_(ChainComplexRep::build(K)) {
  for (int q = 0; q <= chains_.top_degree(); ++q) bases_.emplace_back(chains_, q, F_);
  empty_.emplace(chains_, chains_.top_degree() + 1, F_);
}

const HomologyBasis& FieldHomology::basis(int q) const {
  if (q < 0 || q >= static_cast<int>(bases_.size())) return *empty_;
  return bases_[q];
}

// ---------------------------------------------------------------------------

IntegralHomology::IntegralHomology(const ChainComplexRep& C, int q) : n_(C.rank(q)), boundary_(C.boundary(q)) {
  const SmithDecomposition snf = smith_normal_form(boundary_);
  boundary_rank_ = snf.rank();
  V_inv_ = snf.V_inv;
  const std::size_t r = boundary_rank_;
  const std::size_t kdim = n_ - r;

  const IntMatrix& up = C.boundary(q + 1);
  const auto W = (snf.V_inv * up).dense();
  std::vector<IntVector> rows(W.begin() + static_cast<std::ptrdiff_t>(r), W.end());
  const IntMatrix A = IntMatrix::from_dense(rows, up.cols());
  const SmithDecomposition sa = smith_normal_form(A);
  image_rank_ = sa.rank();
  U_A_ = sa.U;

  // Generators in chain coordinates: V[:, r:] · U_A^{-1}.
  IntMatrix Vker(n_, kdim);
  for (std::size_t j = 0; j < kdim; ++j) Vker.set_column(j, snf.V.column(r + j));
  const IntMatrix G = Vker * sa.U_inv;
  for (std::size_t k = 0; k < kdim; ++k) {
    IntVector g(n_, Integer(0));
    for (const auto& [row, v] : G.column(k)) g[row] = v;
    if (k < image_rank_) {
      if (sa.diagonal[k] > 1) {
        torsion_gens_.push_back(std::move(g));
        torsion_orders_.push_back(sa.diagonal[k]);
      }
    } else {
      free_.push_back(std::move(g));
    }
  }
}

IntVector IntegralHomology::coordinates(const IntVector& cycle) const {
  if (cycle.size() != n_) fail(ErrorKind::DimensionMismatch, "cycle length mismatch");
  for (const auto& v : boundary_.apply(cycle)) {
    if (sgn(v) != 0) fail(ErrorKind::InternalMismatch, "integral chain is not a cycle");
  }
  const IntVector x = V_inv_.apply(cycle);
  IntVector y(x.begin() + static_cast<std::ptrdiff_t>(boundary_rank_), x.end());
  const IntVector yp = U_A_.apply(y);
  return IntVector(yp.begin() + static_cast<std::ptrdiff_t>(image_rank_), yp.end());
}

// ---------------------------------------------------------------------------

ScalarMatrix induced_map(const ChainMap& f, int q, const FieldHomology& source, const FieldHomology& target) {
  const Field& F = source.field();
  const HomologyBasis& src = source.basis(q);
  const HomologyBasis& dst = target.basis(q);
  ScalarMatrix M(dst.dimension(), std::vector<Scalar>(src.dimension(), Scalar(0)));
  const IntMatrix chain = f.matrix(q);
  for (std::size_t j = 0; j < src.dimension(); ++j) {
    const auto coords = dst.coordinates(sparse::apply(F, chain, src.cycles()[j]));
    for (std::size_t i = 0; i < coords.size(); ++i) M[i][j] = coords[i];
  }
  return M;
}

ScalarMatrix induced_map(const ChainMap& f, int q, const Coefficients& coeff) {
  if (coeff.is_field()) {
    const Field F = coeff.field();
    return induced_map(f, q, FieldHomology(f.source(), F), FieldHomology(f.target(), F));
  }
  const IntegralHomology src(ChainComplexRep::build(f.source()), q);
  const IntegralHomology dst(ChainComplexRep::build(f.target()), q);
  ScalarMatrix M(dst.rank(), std::vector<Scalar>(src.rank(), Scalar(0)));
  const IntMatrix chain = f.matrix(q);
  for (std::size_t j = 0; j < src.rank(); ++j) {
    const IntVector coords = dst.coordinates(chain.apply(src.free_generators()[j]));
    for (std::size_t i = 0; i < coords.size(); ++i) M[i][j] = Scalar(coords[i]);
  }
  return M;
}

ScalarMatrix induced_map(const SimplicialMap& f, int q, const Coefficients& coeff) {
  return induced_map(ChainMap::from_simplicial(f), q, coeff);
}

EulerReport euler_report(const SimplicialComplex& K) {
  EulerReport r;
  r.by_counts = K.euler_characteristic();
  const auto b = betti_numbers(K);
  for (std::size_t q = 0; q < b.size(); ++q) {
    r.by_betti += (q % 2 == 0 ? 1 : -1) * static_cast<long long>(b[q]);
  }
  const Field Q = Field::rationals();
  const FieldHomology H(K, Q);
  const ChainMap id = ChainMap::identity(K);
  Scalar lambda = 0;
  for (int q = 0; q <= K.dim(); ++q) {
    const Scalar t = trace(Q, induced_map(id, q, H, H));
    lambda += q % 2 == 0 ? t : Scalar(-t);
  }
  if (lambda.get_den() != 1) fail(ErrorKind::InternalMismatch, "Lefschetz number of the identity is not an integer");
  r.by_lefschetz = lambda.get_num().get_si();
  return r;
}

long long euler_characteristic(const SimplicialComplex& K) {
  const EulerReport r = euler_report(K);
  if (!r.agree()) {
    std::ostringstream os;
    os << "Euler characteristic mismatch: counts " << r.by_counts << ", betti " << r.by_betti
       << ", lefschetz " << r.by_lefschetz;
    fail(ErrorKind::InternalMismatch, os.str());
  }
  return r.by_counts;
}

}  // namespace topo
