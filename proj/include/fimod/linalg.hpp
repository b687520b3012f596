#pragma once

// Exact linear algebra over the rationals.
//
// Matrices are stored sparsely by column and act on column vectors: an
// (r x c) matrix maps Q^c to Q^r. Stored entries are never zero, so two
// matrices are equal exactly when their storage is equal.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fimod/rational.hpp"

namespace fimod {

/// Sorted by index, no explicit zeros.
using SparseVector = std::vector<std::pair<int, Rational>>;

/// x + scale * y, keeping the canonical sorted/no-zero form.
SparseVector axpy(const SparseVector& x, const Rational& scale, const SparseVector& y);

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols);

  static SparseMatrix identity(int n);
  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows, int cols = -1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const SparseVector& column(int j) const { return columns_[static_cast<std::size_t>(j)]; }
  /// Entries must be sorted, nonzero and within range; throws std::invalid_argument otherwise.
  void set_column(int j, SparseVector v);
  /// Accumulates value into (r, c); a resulting zero is removed.
  void add_entry(int r, int c, const Rational& value);

  Rational at(int r, int c) const;
  std::vector<std::vector<Rational>> to_dense() const;
  SparseMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseVector> columns_;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix scaled(const SparseMatrix& a, const Rational& factor);
SparseVector apply(const SparseMatrix& a, const SparseVector& v);
/// [a | b]
SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b);

/// Rank over Q by fraction-free sparse elimination: columns are cleared of
/// denominators and reduced with integer combinations, dividing out the
/// content after each step.
int rank(const SparseMatrix& m);

/// Dense Bareiss elimination over Z after row-wise denominator clearing.
/// Independent of rank(); used for small matrices and as a cross-check.
int bareiss_rank(const std::vector<std::vector<Rational>>& rows);

/// rank(a) == rank(b) == rank([a | b]), i.e. the column spans coincide.
bool same_column_span(const SparseMatrix& a, const SparseMatrix& b);

/// Echelon basis of a subspace of Q^ambient. Each stored vector has leading
/// coefficient 1 and a distinct leading index.
class Subspace {
 public:
  explicit Subspace(int ambientDim);

  int ambient_dim() const { return ambient_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  bool is_pivot(int index) const { return pivotOf_[static_cast<std::size_t>(index)] >= 0; }

  /// Remainder of v after eliminating every pivot coordinate.
  SparseVector reduce(SparseVector v) const;
  /// Adds v to the span; returns false if v was already in it.
  bool insert(SparseVector v);

 private:
  int ambient_;
  std::vector<SparseVector> basis_;
  std::vector<int> pivotOf_;
};

/// Q^ambient / span(columns of a spanning matrix), with the quotient basis
/// given by the images of the non-pivot standard basis vectors.
class QuotientSpace {
 public:
  explicit QuotientSpace(const SparseMatrix& spanning);

  int ambient_dim() const { return subspace_.ambient_dim(); }
  int dimension() const { return static_cast<int>(representatives_.size()); }
  int subspace_dimension() const { return subspace_.dimension(); }

  /// Coordinates of the class of v.
  SparseVector project(const SparseVector& v) const;
  /// Ambient standard basis index representing quotient basis vector q.
  int representative(int q) const { return representatives_[static_cast<std::size_t>(q)]; }

  /// Matrix of the map induced on quotients by `map` (ambient -> target ambient),
  /// which must send the subspace into the target's subspace.
  SparseMatrix induced_map(const SparseMatrix& map, const QuotientSpace& target) const;
  /// Matrix of the composite ambient-source -> ambient -> quotient.
  SparseMatrix projected(const SparseMatrix& map) const;

 private:
  Subspace subspace_;
  std::vector<int> representatives_;
  std::vector<int> quotientIndex_;
};

struct LinearSolution {
  bool consistent = false;
  int rank = 0;
  bool unique = false;
  /// One solution (free variables set to zero) when consistent.
  std::vector<Rational> x;
};

/// Solves A x = b exactly by Gauss-Jordan elimination over Q.
LinearSolution solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace fimod
