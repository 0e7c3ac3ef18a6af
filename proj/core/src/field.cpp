#include "topo/field.hpp"

#include <algorithm>

#include "topo/error.hpp"

namespace topo {

Field Field::prime(unsigned long p) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::of_characteristic(unsigned long c) { return c == 0 ? rationals() : prime(c); }

Scalar Field::from_integer(const Integer& v) const {
  if (p_ == 0) return Scalar(v);
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return Scalar(r);
}

Scalar Field::reduce(const Scalar& v) const {
  if (p_ == 0) return v;
  Integer den = v.get_den();
  Integer m(static_cast<unsigned long>(p_));
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0) {
    fail(ErrorKind::RangeError, "denominator vanishes in " + name());
  }
  return from_integer(Integer(v.get_num() * inv));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  return from_integer(Integer(a.get_num() + b.get_num()));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  return from_integer(Integer(a.get_num() - b.get_num()));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  return from_integer(Integer(a.get_num() * b.get_num()));
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  return from_integer(Integer(-a.get_num()));
}

Scalar Field::inv(const Scalar& a) const {
  if (sgn(a) == 0) fail(ErrorKind::RangeError, "division by zero");
  if (p_ == 0) return 1 / a;
  Integer m(static_cast<unsigned long>(p_));
  Integer r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), m.get_mpz_t());
  return Scalar(r);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

namespace sparse {

SparseVector axpy(const Field& F, const SparseVector& y, const Scalar& a, const SparseVector& x) {
  if (sgn(a) == 0) return y;
  SparseVector out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(*iy++);
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, F.mul(a, ix->second));
      ++ix;
    } else {
      Scalar v = F.add(iy->second, F.mul(a, ix->second));
      if (sgn(v) != 0) out.emplace_back(iy->first, std::move(v));
      ++iy;
      ++ix;
    }
  }
  return out;
}

SparseVector scale(const Field& F, const SparseVector& x, const Scalar& a) {
  SparseVector out;
  if (sgn(a) == 0) return out;
  out.reserve(x.size());
  for (const auto& [i, v] : x) out.emplace_back(i, F.mul(a, v));
  return out;
}

Scalar dot(const Field& F, const SparseVector& a, const SparseVector& b) {
  Scalar acc = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      acc = F.add(acc, F.mul(ia->second, ib->second));
      ++ia;
      ++ib;
    }
  }
  return acc;
}

Scalar dot_dense(const Field& F, const std::vector<Scalar>& dense, const SparseVector& b) {
  Scalar acc = 0;
  for (const auto& [i, v] : b) acc = F.add(acc, F.mul(dense.at(i), v));
  return acc;
}

SparseVector from_column(const Field& F, const IntMatrix::Column& column) {
  SparseVector out;
  out.reserve(column.size());
  for (const auto& [r, v] : column) {
    Scalar s = F.from_integer(v);
    if (sgn(s) != 0) out.emplace_back(r, std::move(s));
  }
  return out;
}

SparseVector from_dense(const Field& F, const std::vector<Scalar>& dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    Scalar s = F.reduce(dense[i]);
    if (sgn(s) != 0) out.emplace_back(i, std::move(s));
  }
  return out;
}

SparseVector from_integers(const Field& F, const IntVector& dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    Scalar s = F.from_integer(dense[i]);
    if (sgn(s) != 0) out.emplace_back(i, std::move(s));
  }
  return out;
}

std::vector<Scalar> to_dense(const SparseVector& x, std::size_t size) {
  std::vector<Scalar> out(size, Scalar(0));
  for (const auto& [i, v] : x) out.at(i) = v;
  return out;
}

SparseVector unit(std::size_t index) { return SparseVector{{index, Scalar(1)}}; }

SparseVector apply(const Field& F, const IntMatrix& M, const SparseVector& x) {
  std::vector<std::pair<std::size_t, Scalar>> acc;
  for (const auto& [c, xv] : x) {
    for (const auto& [r, mv] : M.column(c)) acc.emplace_back(r, F.mul(F.from_integer(mv), xv));
  }
  std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  for (auto& [r, v] : acc) {
    if (!out.empty() && out.back().first == r) {
      out.back().second = F.add(out.back().second, v);
    } else {
      out.emplace_back(r, std::move(v));
    }
  }
  std::erase_if(out, [](const auto& e) { return sgn(e.second) == 0; });
  return out;
}

SparseVector apply_transpose(const Field& F, const IntMatrix& M, const SparseVector& x) {
  SparseVector out;
  for (std::size_t c = 0; c < M.cols(); ++c) {
    Scalar acc = 0;
    auto ix = x.begin();
    for (const auto& [r, mv] : M.column(c)) {
      while (ix != x.end() && ix->first < r) ++ix;
      if (ix == x.end()) break;
      if (ix->first == r) acc = F.add(acc, F.mul(F.from_integer(mv), ix->second));
    }
    if (sgn(acc) != 0) out.emplace_back(c, std::move(acc));
  }
  return out;
}

}  // namespace sparse

const Reducer::Stored* Reducer::find_pivot(std::size_t pivot) const {
  auto it = pivot_slot_.find(pivot);
  return it == pivot_slot_.end() ? nullptr : &stored_[it->second];
}

Reducer::Reduction Reducer::reduce(const SparseVector& v) const {
  Reduction red{v, {}};
  while (!red.remainder.empty()) {
    const auto& [pivot, value] = red.remainder.back();
    const Stored* s = find_pivot(pivot);
    if (!s) break;
    Scalar c = field_.div(value, s->vector.back().second);
    red.remainder = sparse::axpy(field_, red.remainder, field_.neg(c), s->vector);
    red.combination = sparse::axpy(field_, red.combination, c, s->combination);
  }
  return red;
}

bool Reducer::insert(const SparseVector& v) {
  const std::size_t label = generators_++;
  Reduction red = reduce(v);
  SparseVector combo = sparse::axpy(field_, sparse::unit(label), field_.from_long(-1), red.combination);
  if (red.remainder.empty()) {
    relations_.push_back(std::move(combo));
    return false;
  }
  pivot_slot_.emplace(red.remainder.back().first, stored_.size());
  stored_.push_back(Stored{std::move(red.remainder), std::move(combo)});
  return true;
}

ScalarMatrix identity_matrix(std::size_t n) {
  ScalarMatrix m(n, std::vector<Scalar>(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

ScalarMatrix multiply(const Field& F, const ScalarMatrix& a, const ScalarMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k == 0 ? 0 : b[0].size();
  if (n > 0 && a[0].size() != k) fail(ErrorKind::DimensionMismatch, "matrix shapes do not compose");
  ScalarMatrix out(n, std::vector<Scalar>(m, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      if (sgn(a[i][l]) == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (sgn(b[l][j]) != 0) out[i][j] = F.add(out[i][j], F.mul(a[i][l], b[l][j]));
      }
    }
  }
  return out;
}

ScalarMatrix transpose(const ScalarMatrix& a) {
  if (a.empty()) return {};
  ScalarMatrix t(a[0].size(), std::vector<Scalar>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

namespace {

// Row-reduces in place; returns rank and accumulates the determinant sign
// and pivot product into `det`.
std::size_t eliminate(const Field& F, ScalarMatrix& a, Scalar* det) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  if (det) *det = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) {
      if (det) *det = 0;
      continue;
    }
    if (p != r) {
      std::swap(a[p], a[r]);
      if (det) *det = F.neg(*det);
    }
    if (det) *det = F.mul(*det, a[r][c]);
    Scalar inv = F.inv(a[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      Scalar f = F.mul(a[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) a[i][j] = F.sub(a[i][j], F.mul(f, a[r][j]));
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const Field& F, ScalarMatrix a) { return eliminate(F, a, nullptr); }

Scalar trace(const Field& F, const ScalarMatrix& a) {
  Scalar t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t = F.add(t, a[i][i]);
  return t;
}

Scalar determinant(const Field& F, ScalarMatrix a) {
  if (a.empty()) return 1;
  if (a.size() != a[0].size()) fail(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  Scalar det;
  std::size_t r = eliminate(F, a, &det);
  return r == a.size() ? det : Scalar(0);
}

ScalarMatrix inverse(const Field& F, const ScalarMatrix& a) {
  const std::size_t n = a.size();
  ScalarMatrix aug(n, std::vector<Scalar>(2 * n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) fail(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(aug[p][c]) == 0) ++p;
    if (p == n) fail(ErrorKind::InternalMismatch, "matrix is singular");
    std::swap(aug[p], aug[c]);
    Scalar inv = F.inv(aug[c][c]);
    for (auto& v : aug[c]) v = F.mul(v, inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(aug[i][c]) == 0) continue;
      Scalar f = aug[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] = F.sub(aug[i][j], F.mul(f, aug[c][j]));
    }
  }
  ScalarMatrix out(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  }
  return out;
}

std::string format_scalar(const Scalar& v) { return v.get_str(); }

}  // namespace topo
