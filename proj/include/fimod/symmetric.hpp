#pragma once

// Combinatorics and character theory of the symmetric groups S_n for small n.
// Everything here is indexed by conjugacy classes; no group element tables
// are ever materialized.

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fimod/rational.hpp"

namespace fimod {

inline constexpr int kDefaultTruncationCap = 9;

/// Raised when a requested level exceeds the configured truncation cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_cap(int n, int cap);

/// A weakly decreasing list of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and non-increasing.
  explicit Partition(std::vector<int> parts);

  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  /// Number of parts equal to ell.
  int multiplicity(int ell) const;
  /// (lambda_2, lambda_3, ...): the shape with its first row removed.
  Partition tail() const;
  /// (n - |tail|, tail...) if that is a partition of n.
  static std::optional<Partition> pad(const Partition& tail, int n);

  /// "(2,1,1)"; the empty partition renders as "()".
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);

/// Position of lambda in enumerate_partitions(lambda.size()).
int partition_index(const Partition& lambda);

/// n! / prod_l (l^{m_l} m_l!), the number of permutations with this cycle type.
Integer class_size(const Partition& cycleType);

Integer factorial(int n);

struct CycleType {
  Partition partition;
  Integer classSize;
};

std::vector<CycleType> cycle_types(int n);

/// A rational-valued function on the conjugacy classes of S_n. Values are
/// stored in the canonical partition order.
class ClassFunction {
 public:
  ClassFunction() = default;
  explicit ClassFunction(int n);
  ClassFunction(int n, std::vector<Rational> values);

  static ClassFunction constant(int n, const Rational& c);

  int level() const { return n_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](const Partition& cycleType) const;
  Rational& operator[](const Partition& cycleType);
  const Rational& at_index(int i) const { return values_[static_cast<std::size_t>(i)]; }
  /// Value at the identity, i.e. the degree of a character.
  const Rational& degree() const { return values_.back(); }

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  ClassFunction& operator*=(const Rational& c);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const Rational& c) { return a *= c; }
  /// Pointwise product (character of the tensor product).
  friend ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b);

  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

 private:
  int n_ = 0;
  std::vector<Rational> values_;
};

/// (1/n!) sum over classes of |class| f g. Throws std::invalid_argument on level mismatch.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

/// Ind from S_{n-1} to S_n: (Ind f)(mu) = m_1(mu) * f(mu with one fixed point removed).
ClassFunction induce_class_function(const ClassFunction& f);

/// Res from S_n to S_{n-1}, with S_{n-1} fixing the point n. Requires n >= 1.
ClassFunction restrict_class_function(const ClassFunction& f);

/// Number of standard Young tableaux via the hook-length formula.
Integer hook_length_dimension(const Partition& lambda);

/// Character of the irreducible S_n-representation indexed by lambda, by the
/// Murnaghan-Nakayama rule. Throws CapExceeded if lambda.size() > cap.
ClassFunction irreducible_character(const Partition& lambda, int cap = kDefaultTruncationCap);

/// Rows indexed like enumerate_partitions(n).
struct CharacterTable {
  int n = 0;
  std::vector<Partition> shapes;
  std::vector<ClassFunction> characters;
};

CharacterTable character_table(int n, int cap = kDefaultTruncationCap);

/// A permutation of {0, ..., n-1} in one-line notation: images[i] = sigma(i).
/// Composition follows functions: (a * b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// The adjacent transposition s_i swapping i-1 and i (1-based i, 1 <= i < n).
  static Permutation adjacent(int n, int i);
  /// Product of consecutive cycles (1 2 ... l_1)(l_1+1 ...)... in 1-based terms.
  static Permutation cycle_representative(const Partition& cycleType);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;
  Partition cycle_type() const;
  /// Indices i (1-based) with sigma = s_{i_1} s_{i_2} ... s_{i_m}, m minimal.
  std::vector<int> reduced_word() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace fimod
