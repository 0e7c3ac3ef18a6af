#include "topo/exactlinalg.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "topo/error.hpp"
#include "topo/field.hpp"

namespace topo {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].emplace_back(i, Integer(1));
  return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorKind::DimensionMismatch, "ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] != 0) m.columns_[c].emplace_back(r, Integer(rows[r][c]));
    }
  }
  return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorKind::DimensionMismatch, "ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (sgn(rows[r][c]) != 0) m.columns_[c].emplace_back(r, rows[r][c]);
    }
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) fail(ErrorKind::DimensionMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) {
      if (sgn(columns[c][r]) != 0) m.columns_[c].emplace_back(r, columns[c][r]);
    }
  }
  return m;
}

std::size_t IntMatrix::nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

Integer IntMatrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols()) fail(ErrorKind::IndexOutOfRange, "matrix index out of range");
  const auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, std::size_t row) { return e.first < row; });
  if (it == col.end() || it->first != r) return Integer(0);
  return it->second;
}

void IntMatrix::set(std::size_t r, std::size_t c, const Integer& value) {
  if (r >= rows_ || c >= cols()) fail(ErrorKind::IndexOutOfRange, "matrix index out of range");
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, std::size_t row) { return e.first < row; });
  const bool present = it != col.end() && it->first == r;
  if (sgn(value) == 0) {
    if (present) col.erase(it);
  } else if (present) {
    it->second = value;
  } else {
    col.insert(it, Entry{r, value});
  }
}

void IntMatrix::add_to(std::size_t r, std::size_t c, const Integer& value) {
  set(r, c, get(r, c) + value);
}

void IntMatrix::set_column(std::size_t c, Column entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first >= rows_ || sgn(entries[i].second) == 0 ||
        (i > 0 && entries[i - 1].first >= entries[i].first)) {
      fail(ErrorKind::RangeError, "malformed sparse column");
    }
  }
  columns_.at(c) = std::move(entries);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols(), rows_);
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& [r, v] : columns_[c]) t.columns_[r].emplace_back(c, v);
  }
  return t;
}

std::vector<IntVector> IntMatrix::dense() const {
  std::vector<IntVector> d(rows_, IntVector(cols(), Integer(0)));
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& [r, v] : columns_[c]) d[r][c] = v;
  }
  return d;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (x.size() != cols()) fail(ErrorKind::DimensionMismatch, "vector length mismatch");
  IntVector y(rows_, Integer(0));
  for (std::size_t c = 0; c < cols(); ++c) {
    if (sgn(x[c]) == 0) continue;
    for (const auto& [r, v] : columns_[c]) y[r] += v * x[c];
  }
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::DimensionMismatch, "matrix shapes do not compose");
  IntMatrix out(a.rows(), b.cols());
  std::map<std::size_t, Integer> acc;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    acc.clear();
    for (const auto& [k, bv] : b.columns_[c]) {
      for (const auto& [r, av] : a.columns_[k]) acc[r] += av * bv;
    }
    for (auto& [r, v] : acc) {
      if (sgn(v) != 0) out.columns_[c].emplace_back(r, std::move(v));
    }
  }
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.columns_ == b.columns_;
}

// ---------------------------------------------------------------------------

std::size_t SmithDecomposition::rank() const {
  return static_cast<std::size_t>(
      std::count_if(diagonal.begin(), diagonal.end(), [](const Integer& d) { return sgn(d) != 0; }));
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  for (const auto& d : diagonal) {
    if (sgn(d) != 0) out.push_back(d);
  }
  return out;
}

IntMatrix SmithDecomposition::diagonal_matrix(std::size_t rows, std::size_t cols) const {
  IntMatrix D(rows, cols);
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    if (sgn(diagonal[i]) != 0) D.set(i, i, diagonal[i]);
  }
  return D;
}

namespace {

using Dense = std::vector<IntVector>;

Dense dense_identity(std::size_t n) {
  Dense d(n, IntVector(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

// Dense Smith reduction. When `track` is set, U, U_inv, V, V_inv follow every
// elementary operation so that U·M·V = D and U·U_inv = V·V_inv = I.
class DenseSmith {
 public:
  DenseSmith(Dense a, std::size_t rows, std::size_t cols, bool track)
      : a_(std::move(a)), m_(rows), n_(cols), track_(track) {
    if (track_) {
      u_ = dense_identity(m_);
      u_inv_ = dense_identity(m_);
      v_ = dense_identity(n_);
      v_inv_ = dense_identity(n_);
    }
  }

  void run() {
    const std::size_t steps = std::min(m_, n_);
    for (std::size_t t = 0; t < steps; ++t) {
      if (!settle_pivot(t)) break;
      if (sgn(a_[t][t]) < 0) negate_row(t);
    }
  }

  std::vector<Integer> diagonal() const {
    std::vector<Integer> d(std::min(m_, n_), Integer(0));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = a_[i][i];
    return d;
  }

  Dense take_u() { return std::move(u_); }
  Dense take_u_inv() { return std::move(u_inv_); }
  Dense take_v() { return std::move(v_); }
  Dense take_v_inv() { return std::move(v_inv_); }

 private:
  Dense a_;
  std::size_t m_;
  std::size_t n_;
  bool track_;
  Dense u_, u_inv_, v_, v_inv_;

  // Least |entry| in the block [t.., t..], row-major first on ties.
  bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    for (std::size_t i = t; i < m_; ++i) {
      for (std::size_t j = t; j < n_; ++j) {
        if (sgn(a_[i][j]) == 0) continue;
        if (!found || mpz_cmpabs(a_[i][j].get_mpz_t(), a_[pr][pc].get_mpz_t()) < 0) {
          pr = i;
          pc = j;
          found = true;
        }
      }
    }
    return found;
  }

  bool settle_pivot(std::size_t t) {
    for (;;) {
      std::size_t pr = 0;
      std::size_t pc = 0;
      if (!find_pivot(t, pr, pc)) return false;
      swap_rows(t, pr);
      swap_cols(t, pc);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m_; ++i) {
        if (sgn(a_[i][t]) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a_[i][t].get_mpz_t(), a_[t][t].get_mpz_t());
        if (sgn(q) != 0) add_row_multiple(i, t, -q);
        if (sgn(a_[i][t]) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n_; ++j) {
        if (sgn(a_[t][j]) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a_[t][j].get_mpz_t(), a_[t][t].get_mpz_t());
        if (sgn(q) != 0) add_col_multiple(j, t, -q);
        if (sgn(a_[t][j]) != 0) dirty = true;
      }
      if (dirty) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < m_ && divides; ++i) {
        for (std::size_t j = t + 1; j < n_; ++j) {
          if (sgn(a_[i][j]) != 0 && !mpz_divisible_p(a_[i][j].get_mpz_t(), a_[t][t].get_mpz_t())) {
            add_row_multiple(t, i, Integer(1));
            divides = false;
            break;
          }
        }
      }
      if (divides) return true;
    }
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    std::swap(a_[i], a_[k]);
    if (track_) {
      std::swap(u_[i], u_[k]);
      for (auto& row : u_inv_) std::swap(row[i], row[k]);
    }
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (auto& row : a_) std::swap(row[j], row[k]);
    if (track_) {
      for (auto& row : v_) std::swap(row[j], row[k]);
      std::swap(v_inv_[j], v_inv_[k]);
    }
  }

  // row_i += c * row_k
  void add_row_multiple(std::size_t i, std::size_t k, const Integer& c) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (sgn(a_[k][j]) != 0) a_[i][j] += c * a_[k][j];
    }
    if (track_) {
      for (std::size_t j = 0; j < m_; ++j) {
        if (sgn(u_[k][j]) != 0) u_[i][j] += c * u_[k][j];
      }
      // U_inv ← U_inv · E⁻¹: col_k -= c * col_i
      for (auto& row : u_inv_) {
        if (sgn(row[i]) != 0) row[k] -= c * row[i];
      }
    }
  }

  // col_j += c * col_k
  void add_col_multiple(std::size_t j, std::size_t k, const Integer& c) {
    for (auto& row : a_) {
      if (sgn(row[k]) != 0) row[j] += c * row[k];
    }
    if (track_) {
      for (auto& row : v_) {
        if (sgn(row[k]) != 0) row[j] += c * row[k];
      }
      // V_inv ← E⁻¹ · V_inv: row_k -= c * row_j
      for (std::size_t l = 0; l < n_; ++l) {
        if (sgn(v_inv_[j][l]) != 0) v_inv_[k][l] -= c * v_inv_[j][l];
      }
    }
  }

  void negate_row(std::size_t t) {
    for (auto& v : a_[t]) v = -v;
    if (track_) {
      for (auto& v : u_[t]) v = -v;
      for (auto& row : u_inv_) row[t] = -row[t];
    }
  }
};

IntMatrix to_matrix(const Dense& d, std::size_t rows, std::size_t cols) {
  if (rows == 0) return IntMatrix(0, cols);
  return IntMatrix::from_dense(d, cols);
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& M) {
  DenseSmith s(M.dense(), M.rows(), M.cols(), true);
  s.run();
  SmithDecomposition out;
  out.diagonal = s.diagonal();
  out.U = to_matrix(s.take_u(), M.rows(), M.rows());
  out.U_inv = to_matrix(s.take_u_inv(), M.rows(), M.rows());
  out.V = to_matrix(s.take_v(), M.cols(), M.cols());
  out.V_inv = to_matrix(s.take_v_inv(), M.cols(), M.cols());
  return out;
}

std::vector<Integer> invariant_factors(const IntMatrix& M) {
  const std::size_t m = M.rows();
  const std::size_t n = M.cols();
  std::vector<Integer> factors;
  if (m < 64 && n < 64) {
    DenseSmith s(M.dense(), m, n, false);
    s.run();
    for (auto& d : s.diagonal()) {
      if (sgn(d) != 0) factors.push_back(d);
    }
    return factors;
  }

  std::vector<std::map<std::size_t, Integer>> rows(m);
  std::vector<std::set<std::size_t>> col_rows(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& [r, v] : M.column(c)) {
      rows[r].emplace(c, v);
      col_rows[c].insert(r);
    }
  }
  std::vector<bool> row_alive(m, true);
  std::vector<bool> col_alive(n, true);
  std::size_t units = 0;

  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = m;
    for (std::size_t r : col_rows[c]) {
      const Integer& v = rows[r].at(c);
      if (mpz_cmpabs_ui(v.get_mpz_t(), 1) != 0) continue;
      if (best == m || rows[r].size() < rows[best].size()) best = r;
    }
    if (best == m) continue;
    const Integer pivot = rows[best].at(c);
    const std::vector<std::size_t> others(col_rows[c].begin(), col_rows[c].end());
    for (std::size_t k : others) {
      if (k == best) continue;
      const Integer factor = rows[k].at(c) * pivot;  // pivot is ±1, its own inverse
      for (const auto& [cc, v] : rows[best]) {
        auto [it, inserted] = rows[k].emplace(cc, Integer(0));
        it->second -= factor * v;
        if (sgn(it->second) == 0) {
          rows[k].erase(it);
          col_rows[cc].erase(k);
        } else if (inserted) {
          col_rows[cc].insert(k);
        }
      }
    }
    for (const auto& [cc, v] : rows[best]) col_rows[cc].erase(best);
    rows[best].clear();
    row_alive[best] = false;
    col_alive[c] = false;
    ++units;
  }

  std::vector<std::size_t> core_rows;
  std::vector<std::size_t> core_cols;
  for (std::size_t r = 0; r < m; ++r) {
    if (row_alive[r] && !rows[r].empty()) core_rows.push_back(r);
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (col_alive[c] && !col_rows[c].empty()) core_cols.push_back(c);
  }
  for (std::size_t i = 0; i < units; ++i) factors.emplace_back(1);
  if (!core_rows.empty() && !core_cols.empty()) {
    Dense core(core_rows.size(), IntVector(core_cols.size(), Integer(0)));
    for (std::size_t i = 0; i < core_rows.size(); ++i) {
      for (const auto& [c, v] : rows[core_rows[i]]) {
        auto it = std::lower_bound(core_cols.begin(), core_cols.end(), c);
        core[i][static_cast<std::size_t>(it - core_cols.begin())] = v;
      }
    }
    DenseSmith s(std::move(core), core_rows.size(), core_cols.size(), false);
    s.run();
    for (auto& d : s.diagonal()) {
      if (sgn(d) != 0) factors.push_back(d);
    }
  }
  return factors;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::size_t rank_over_field(const IntMatrix& M, unsigned long characteristic) {
  Field F = Field::of_characteristic(characteristic);
  Reducer red(F);
  for (std::size_t c = 0; c < M.cols(); ++c) red.insert(sparse::from_column(F, M.column(c)));
  return red.rank();
}

std::vector<IntVector> kernel_basis(const IntMatrix& M, unsigned long characteristic) {
  std::vector<IntVector> basis;
  if (characteristic == 0) {
    SmithDecomposition snf = smith_normal_form(M);
    const std::size_t r = snf.rank();
    for (std::size_t j = r; j < M.cols(); ++j) {
      IntVector v(M.cols(), Integer(0));
      for (const auto& [row, value] : snf.V.column(j)) v[row] = value;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  Field F = Field::prime(characteristic);
  Reducer red(F);
  for (std::size_t c = 0; c < M.cols(); ++c) red.insert(sparse::from_column(F, M.column(c)));
  for (const auto& rel : red.relations()) {
    IntVector v(M.cols(), Integer(0));
    for (const auto& [i, s] : rel) v[i] = s.get_num();
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<IntVector> image_basis(const IntMatrix& M, unsigned long characteristic) {
  Field F = Field::of_characteristic(characteristic);
  Reducer red(F);
  std::vector<IntVector> basis;
  for (std::size_t c = 0; c < M.cols(); ++c) {
    if (!red.insert(sparse::from_column(F, M.column(c)))) continue;
    IntVector v(M.rows(), Integer(0));
    for (const auto& [r, value] : M.column(c)) {
      v[r] = value;
      if (characteristic != 0) {
        mpz_fdiv_r_ui(v[r].get_mpz_t(), value.get_mpz_t(), characteristic);
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Integer determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) fail(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = M.rows();
  if (n == 0) return Integer(1);
  Dense a = M.dense();
  Integer sign = 1;
  Integer prev = 1;
  // Bareiss fraction-free elimination.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a[p][k]) == 0) ++p;
      if (p == n) return Integer(0);
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace topo
