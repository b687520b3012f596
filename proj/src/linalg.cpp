#include "fimod/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fimod {

SparseVector axpy(const SparseVector& x, const Rational& scale, const SparseVector& y) {
  SparseVector out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, scale * y[j].second);
      ++j;
    } else {
      Rational v = x[i].second + scale * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseMatrix::SparseMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), columns_(static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.columns_[static_cast<std::size_t>(i)].emplace_back(i, Rational(1));
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows, int cols) {
  int r = static_cast<int>(rows.size());
  int c = cols >= 0 ? cols : (rows.empty() ? 0 : static_cast<int>(rows.front().size()));
  SparseMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) {
      throw std::invalid_argument("ragged dense matrix: row " + std::to_string(i));
    }
    for (int j = 0; j < c; ++j) {
      const Rational& v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v != 0) m.columns_[static_cast<std::size_t>(j)].emplace_back(i, v);
    }
  }
  return m;
}

void SparseMatrix::set_column(int j, SparseVector v) {
  if (j < 0 || j >= cols_) throw std::invalid_argument("column index out of range");
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t].first < 0 || v[t].first >= rows_) throw std::invalid_argument("row index out of range");
    if (v[t].second == 0) throw std::invalid_argument("explicit zero in sparse column");
    if (t > 0 && v[t - 1].first >= v[t].first) throw std::invalid_argument("unsorted sparse column");
  }
  columns_[static_cast<std::size_t>(j)] = std::move(v);
}

void SparseMatrix::add_entry(int r, int c, const Rational& value) {
  if (value == 0) return;
  auto& col = columns_.at(static_cast<std::size_t>(c));
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& e, int row) { return e.first < row; });
  if (it != col.end() && it->first == r) {
    it->second += value;
    if (it->second == 0) col.erase(it);
  } else {
    col.insert(it, {r, value});
  }
}

Rational SparseMatrix::at(int r, int c) const {
  const auto& col = columns_.at(static_cast<std::size_t>(c));
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& e, int row) { return e.first < row; });
  if (it != col.end() && it->first == r) return it->second;
  return Rational(0);
}

std::vector<std::vector<Rational>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(rows_),
                                         std::vector<Rational>(static_cast<std::size_t>(cols_)));
  for (int j = 0; j < cols_; ++j) {
    for (const auto& [i, v] : columns_[static_cast<std::size_t>(j)]) {
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    }
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (int j = 0; j < cols_; ++j) {
    for (const auto& [i, v] : columns_[static_cast<std::size_t>(j)]) {
      t.columns_[static_cast<std::size_t>(i)].emplace_back(j, v);
    }
  }
  return t;
}

Rational SparseMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
  Rational t = 0;
  for (int j = 0; j < cols_; ++j) t += at(j, j);
  return t;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

SparseVector apply(const SparseMatrix& a, const SparseVector& v) {
  SparseVector out;
  for (const auto& [j, x] : v) out = axpy(out, x, a.column(j));
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  SparseMatrix c(a.rows(), b.cols());
  std::vector<Rational> acc(static_cast<std::size_t>(a.rows()));
  std::vector<char> touched(static_cast<std::size_t>(a.rows()), 0);
  std::vector<int> rowsHit;
  for (int j = 0; j < b.cols(); ++j) {
    rowsHit.clear();
    for (const auto& [k, bv] : b.column(j)) {
      for (const auto& [i, av] : a.column(k)) {
        auto ui = static_cast<std::size_t>(i);
        if (!touched[ui]) {
          touched[ui] = 1;
          rowsHit.push_back(i);
          acc[ui] = av * bv;
        } else {
          acc[ui] += av * bv;
        }
      }
    }
    std::sort(rowsHit.begin(), rowsHit.end());
    SparseVector col;
    for (int i : rowsHit) {
      auto ui = static_cast<std::size_t>(i);
      if (acc[ui] != 0) col.emplace_back(i, acc[ui]);
      touched[ui] = 0;
    }
    c.set_column(j, std::move(col));
  }
  return c;
}

namespace {

SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, const Rational& sb) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum shape mismatch");
  SparseMatrix c(a.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) c.set_column(j, axpy(a.column(j), sb, b.column(j)));
  return c;
}

}  // namespace

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, Rational(1)); }
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, Rational(-1)); }

SparseMatrix scaled(const SparseMatrix& a, const Rational& factor) {
  SparseMatrix c(a.rows(), a.cols());
  if (factor == 0) return c;
  for (int j = 0; j < a.cols(); ++j) {
    SparseVector col = a.column(j);
    for (auto& e : col) e.second *= factor;
    c.set_column(j, std::move(col));
  }
  return c;
}

SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  SparseMatrix c(a.rows(), a.cols() + b.cols());
  for (int j = 0; j < a.cols(); ++j) c.set_column(j, a.column(j));
  for (int j = 0; j < b.cols(); ++j) c.set_column(a.cols() + j, b.column(j));
  return c;
}

// ---------------------------------------------------------------------------
// Fraction-free sparse rank

namespace {

using IntVector = std::vector<std::pair<int, Integer>>;

IntVector clear_denominators(const SparseVector& v) {
  Integer l = 1;
  for (const auto& e : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& [i, q] : v) out.emplace_back(i, Integer(q.get_num() * (l / q.get_den())));
  return out;
}

void remove_content(IntVector& v) {
  if (v.empty()) return;
  Integer g = 0;
  for (const auto& e : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) break;
  }
  if (v.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& e : v) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
  }
}

// a*x - b*y
IntVector integer_combination(const Integer& a, const IntVector& x, const Integer& b, const IntVector& y) {
  IntVector out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Integer tmp;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      tmp = a * x[i].second - b * y[j].second;
      if (tmp != 0) out.emplace_back(x[i].first, tmp);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

int rank(const SparseMatrix& m) {
  std::vector<int> order(static_cast<std::size_t>(m.cols()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return m.column(a).size() < m.column(b).size(); });

  std::vector<IntVector> pivots;
  std::vector<int> pivotAt(static_cast<std::size_t>(m.rows()), -1);
  for (int j : order) {
    IntVector v = clear_denominators(m.column(j));
    remove_content(v);
    while (!v.empty()) {
      int lead = v.front().first;
      int p = pivotAt[static_cast<std::size_t>(lead)];
      if (p < 0) break;
      const IntVector& pv = pivots[static_cast<std::size_t>(p)];
      Integer g = gcd(pv.front().second, v.front().second);
      Integer a = pv.front().second / g;
      Integer b = v.front().second / g;
      v = integer_combination(a, v, b, pv);
      remove_content(v);
    }
    if (!v.empty()) {
      pivotAt[static_cast<std::size_t>(v.front().first)] = static_cast<int>(pivots.size());
      pivots.push_back(std::move(v));
    }
  }
  return static_cast<int>(pivots.size());
}

int bareiss_rank(const std::vector<std::vector<Rational>>& rows) {
  std::vector<std::vector<Integer>> a;
  a.reserve(rows.size());
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix in bareiss_rank");
    Integer l = 1;
    for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> r;
    r.reserve(cols);
    for (const auto& q : row) r.emplace_back(q.get_num() * (l / q.get_den()));
    a.push_back(std::move(r));
  }
  const std::size_t n = a.size();
  Integer prev = 1;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < n; ++c) {
    std::size_t piv = rk;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[rk]);
    for (std::size_t i = rk + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[rk][c] * a[i][j] - a[i][c] * a[rk][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return static_cast<int>(rk);
}

bool same_column_span(const SparseMatrix& a, const SparseMatrix& b) {
  int ra = rank(a);
  return ra == rank(b) && ra == rank(hstack(a, b));
}

// ---------------------------------------------------------------------------
// Subspaces and quotients

Subspace::Subspace(int ambientDim)
    : ambient_(ambientDim), pivotOf_(static_cast<std::size_t>(ambientDim), -1) {}

SparseVector Subspace::reduce(SparseVector v) const {
  std::size_t i = 0;
  while (i < v.size()) {
    int p = pivotOf_[static_cast<std::size_t>(v[i].first)];
    if (p < 0) {
      ++i;
      continue;
    }
    // Pivot vectors only touch indices >= their lead, so entries before i are final.
    Rational c = v[i].second;
    v = axpy(v, -c, basis_[static_cast<std::size_t>(p)]);
  }
  return v;
}

bool Subspace::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Rational lead = v.front().second;
  for (auto& e : v) e.second /= lead;
  pivotOf_[static_cast<std::size_t>(v.front().first)] = static_cast<int>(basis_.size());
  basis_.push_back(std::move(v));
  return true;
}

QuotientSpace::QuotientSpace(const SparseMatrix& spanning)
    : subspace_(spanning.rows()), quotientIndex_(static_cast<std::size_t>(spanning.rows()), -1) {
  for (int j = 0; j < spanning.cols(); ++j) subspace_.insert(spanning.column(j));
  for (int i = 0; i < spanning.rows(); ++i) {
    if (!subspace_.is_pivot(i)) {
      quotientIndex_[static_cast<std::size_t>(i)] = static_cast<int>(representatives_.size());
      representatives_.push_back(i);
    }
  }
}

SparseVector QuotientSpace::project(const SparseVector& v) const {
  SparseVector r = subspace_.reduce(v);
  for (auto& e : r) e.first = quotientIndex_[static_cast<std::size_t>(e.first)];
  return r;
}

SparseMatrix QuotientSpace::induced_map(const SparseMatrix& map, const QuotientSpace& target) const {
  if (map.cols() != ambient_dim() || map.rows() != target.ambient_dim()) {
    throw std::invalid_argument("induced_map shape mismatch");
  }
  SparseMatrix out(target.dimension(), dimension());
  for (int q = 0; q < dimension(); ++q) out.set_column(q, target.project(map.column(representative(q))));
  return out;
}

SparseMatrix QuotientSpace::projected(const SparseMatrix& map) const {
  if (map.rows() != ambient_dim()) throw std::invalid_argument("projected shape mismatch");
  SparseMatrix out(dimension(), map.cols());
  for (int j = 0; j < map.cols(); ++j) out.set_column(j, project(map.column(j)));
  return out;
}

LinearSolution solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw std::invalid_argument("solve_exact: rhs length mismatch");
  const std::size_t n = m == 0 ? 0 : a.front().size();
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("solve_exact: ragged matrix");
    a[i].push_back(b[i]);
  }
  std::vector<std::size_t> pivotCols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && a[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j <= n; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[r][j];
    }
    pivotCols.push_back(c);
    ++r;
  }
  LinearSolution s;
  s.rank = static_cast<int>(r);
  s.consistent = true;
  for (std::size_t i = r; i < m; ++i) {
    if (a[i][n] != 0) s.consistent = false;
  }
  s.unique = s.consistent && r == n;
  if (s.consistent) {
    s.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < r; ++i) s.x[pivotCols[i]] = a[i][n];
  }
  return s;
}

}  // namespace fimod
