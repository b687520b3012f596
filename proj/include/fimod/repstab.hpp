#pragma once

// Representation-stability diagnostics: irreducible decompositions keyed by
// padded shape, character polynomials in the binomial basis, and stable
// inner products.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fimod/fi_engine.hpp"
#include "fimod/symmetric.hpp"

namespace fimod {

/// A character whose inner product with some irreducible is not a
/// nonnegative integer.
class InvalidCharacter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct LevelMultiplicities {
  int n = 0;
  int dim = 0;
  /// Keyed by tail (lambda_2, lambda_3, ...). Zero multiplicities omitted.
  std::map<Partition, Integer> byTail;
};

using MultiplicityTable = std::vector<LevelMultiplicities>;

MultiplicityTable decompose(const std::vector<ClassFunction>& characters, int cap = kDefaultTruncationCap);

struct Onset {
  int level = 0;
  Certainty flag = Certainty::Certified;
};

/// Smallest n0 with the tail-multiplicity map constant on [n0, N]. Requires
/// at least two levels.
Onset stabilization_onset(const MultiplicityTable& table);

/// ell -> m_ell, all m_ell > 0; stands for prod_ell C(Z_ell, m_ell).
using BinomialMonomial = std::map<int, int>;

class CharacterPolynomial {
 public:
  CharacterPolynomial() = default;
  explicit CharacterPolynomial(std::map<BinomialMonomial, Rational> coefficients);

  static CharacterPolynomial constant(const Rational& c);

  const std::map<BinomialMonomial, Rational>& coefficients() const { return coefficients_; }
  Rational operator()(const Partition& cycleType) const;
  ClassFunction at_level(int n) const;
  /// max sum ell * m_ell over the support; -1 for zero.
  int degree() const;
  /// Largest ell with Z_ell in the support; 0 for constants.
  int variables() const;
  /// "C(Z1,2) + Z2", "1", "0", "-1/2*C(Z1,3)*Z3".
  std::string to_string() const;

  friend bool operator==(const CharacterPolynomial&, const CharacterPolynomial&) = default;

 private:
  std::map<BinomialMonomial, Rational> coefficients_;
};

/// All monomials of degree <= d using only Z_1..Z_r.
std::vector<BinomialMonomial> binomial_monomials(int d, int r);

struct LevelResidual {
  int n = 0;
  bool inWindow = false;
  /// Number of cycle types where Q disagrees with the data.
  int mismatches = 0;
};

struct CharacterFit {
  bool found = false;
  CharacterPolynomial polynomial;
  int degree = -1;
  int variables = 0;
  /// The least-degree fit is the only one of that degree on the window.
  bool unique = false;
  int windowStart = 0;
  int windowEnd = 0;
  /// One entry per supplied level; entries outside the window test extrapolation.
  std::vector<LevelResidual> residuals;
};

/// Least-degree exact interpolant on the levels in [windowStart, windowEnd],
/// using the fewest variables Z_1..Z_r among fits of that degree.
CharacterFit fit_character_polynomial(const std::vector<ClassFunction>& characters, int maxDegree,
                                      int windowStart, int windowEnd);

struct InnerProductSeries {
  std::vector<int> levels;
  std::vector<Rational> values;
  Onset onset;
};

InnerProductSeries stable_inner_product(const std::vector<ClassFunction>& characters,
                                        const CharacterPolynomial& q);

}  // namespace fimod
