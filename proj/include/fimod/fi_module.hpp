#pragma once

// Truncated FI-modules over Q: levels 0..N, each an S_n-representation given
// by the matrices of the adjacent transpositions, plus the one-step maps
// V_{n-1} -> V_n induced by the standard inclusion [n-1] -> [n]. The image
// of any other injection is composed from these on demand.

#include <optional>
#include <string>
#include <vector>

#include "fimod/linalg.hpp"
#include "fimod/symmetric.hpp"

namespace fimod {

/// An S_n-representation given by the matrices of s_1, ..., s_{n-1}.
class Representation {
 public:
  Representation() = default;
  Representation(int n, int dim, std::vector<SparseMatrix> generators);

  int degree() const { return n_; }
  int dim() const { return dim_; }
  /// Matrix of s_i, 1 <= i < n.
  const SparseMatrix& generator(int i) const { return generators_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<SparseMatrix>& generators() const { return generators_; }

  /// Matrix of sigma, composed along a reduced word.
  SparseMatrix action(const Permutation& sigma) const;
  /// Matrix of s_{i_1} s_{i_2} ... for the given 1-based indices.
  SparseMatrix word(const std::vector<int>& indices) const;
  /// Traces at one representative per cycle type.
  ClassFunction character() const;
  /// First violated Coxeter relation, if any.
  std::optional<std::string> coxeter_violation() const;

 private:
  int n_ = 0;
  int dim_ = 0;
  std::vector<SparseMatrix> generators_;
};

struct FILevel {
  Representation rep;
  /// dim V_n x dim V_{n-1}; absent at n = 0.
  std::optional<SparseMatrix> inclusion;
};

class TruncatedFIModule {
 public:
  TruncatedFIModule() = default;
  /// Stores the data without checking it; call validate() for untrusted input.
  explicit TruncatedFIModule(std::vector<FILevel> levels);

  int max_level() const { return static_cast<int>(levels_.size()) - 1; }
  int dim(int n) const;
  std::vector<int> dims() const;
  const Representation& level(int n) const { return levels_.at(static_cast<std::size_t>(n)).rep; }
  const SparseMatrix& generator(int n, int i) const { return level(n).generator(i); }
  /// phi_n : V_{n-1} -> V_n, n >= 1.
  const SparseMatrix& inclusion(int n) const;

  /// Map V_{n-1} -> V_n of the increasing injection whose image misses the
  /// 0-based point `missing`.
  SparseMatrix increasing_injection(int n, int missing) const;
  /// Map V_m -> V_n of the injection i -> images[i] (0-based, m = images.size()).
  SparseMatrix injection_map(int n, const std::vector<int>& images) const;

  /// Checks, level by level: shapes, Coxeter relations, equivariance of the
  /// inclusions, and that s_{n-1} fixes the image of V_{n-2} in V_n (which
  /// makes the maps of all injections well defined). Returns a description
  /// of the first violated identity.
  std::optional<std::string> validate() const;

  /// Levels 0..maxLevel of this module.
  TruncatedFIModule truncated(int maxLevel) const;

 private:
  std::vector<FILevel> levels_;
};

ClassFunction level_character(const TruncatedFIModule& v, int n);

TruncatedFIModule zero_module(int maxLevel);
/// M(m): basis the injections [m] -> [n], S_n acting by post-composition.
TruncatedFIModule free_module(int m, int maxLevel);
/// Q[m-subsets of [n]], the module induced from the trivial S_m-representation.
TruncatedFIModule subset_module(int m, int maxLevel);
/// One-dimensional trivial representation at level `at`, zero elsewhere (torsion).
TruncatedFIModule point_module(int at, int maxLevel);
TruncatedFIModule direct_sum(const TruncatedFIModule& a, const TruncatedFIModule& b);

}  // namespace fimod

namespace fimod {

/// All injections [p] -> [n] as 0-based image tuples, in lexicographic order.
std::vector<std::vector<int>> enumerate_injections(int p, int n);

/// Block diagonal matrix diag(a, b).
SparseMatrix block_diagonal(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace fimod
