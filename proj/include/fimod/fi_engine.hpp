#pragma once

// Detectors for the central-stability structure of a truncated FI-module:
// induced levels, the natural map out of them, the two forgetful maps,
// generation/relation degree, FI-homology in degree zero, shift, derivative
// and the observed stable/local degree.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fimod/fi_module.hpp"

namespace fimod {

/// Ind_{S_{n-p}}^{S_n} V_{n-p} realized as the direct sum over injections
/// f : [p] -> [n] of V_{[n] \ im f}. Each summand is identified with V_{n-p}
/// through the order-preserving bijection [n-p] -> [n] \ im f.
struct InducedLevel {
  int sourceLevel = 0;
  int targetLevel = 0;
  std::vector<std::vector<int>> summands;  // lexicographic, 0-based images
  int blockDim = 0;
  Representation rep;

  int dim() const { return rep.dim(); }
  int summand_index(const std::vector<int>& f) const;
};

InducedLevel induced_module(const TruncatedFIModule& v, int p, int n);

/// Ind_{S_{n-1}}^{S_n} V_{n-1} -> V_n: on the summand of f : [1] -> [n] it is
/// the map of the complementary inclusion [n] \ {f(1)} -> [n].
SparseMatrix natural_map(const TruncatedFIModule& v, int n);

/// d_1, d_2 : Ind from S_{n-2} -> Ind from S_{n-1}, forgetting the first or
/// second element of the domain of f : [2] -> [n].
std::pair<SparseMatrix, SparseMatrix> two_natural_maps(const TruncatedFIModule& v, int n);

enum class Certainty { Certified, InsufficientLevels };

std::string to_string(Certainty c);

struct ObservedDegree {
  int value = -1;
  Certainty flag = Certainty::Certified;
};

/// Rank data of the central-stability maps at one level.
struct LevelPresentation {
  int n = 0;
  int dim = 0;
  int inducedDim = 0;
  int naturalRank = 0;
  int differenceRank = 0;
  bool surjective = false;
  /// ker(natural map) == im(d_1 - d_2).
  bool kernelIsImage = false;
};

/// Levels 0..N. Throws std::logic_error if natural o (d_1 - d_2) != 0.
std::vector<LevelPresentation> presentation_profile(const TruncatedFIModule& v);

ObservedDegree generation_degree(const TruncatedFIModule& v);
ObservedDegree relation_degree(const TruncatedFIModule& v);
ObservedDegree generation_degree(const std::vector<LevelPresentation>& profile);
ObservedDegree relation_degree(const std::vector<LevelPresentation>& profile);

struct FIHomologyLevel {
  int dim = 0;
  ClassFunction character;
};

/// V_n / im(natural map).
FIHomologyLevel fi_homology_zero(const TruncatedFIModule& v, int n);

struct ShiftResult {
  TruncatedFIModule module;
  /// iota[n] : V_n -> (SV)_n = V_{n+1}, for n = 0..N-1.
  std::vector<SparseMatrix> iota;
};

/// (SV)_n = V_{n+1}, with S_n fixing the new point n+1.
ShiftResult shift(const TruncatedFIModule& v);

/// Level-wise cokernel of iota : V -> SV. Throws std::logic_error if the
/// structure maps do not descend to the cokernel.
TruncatedFIModule derivative(const TruncatedFIModule& v);

struct DegreeReport {
  ObservedDegree generation;
  ObservedDegree relation;
  ObservedDegree stable;
  ObservedDegree local;
  /// Levels [windowStart, windowEnd] on which dim V_n is a polynomial of degree stable.value.
  int windowStart = 0;
  int windowEnd = 0;
  /// p(n) = sum_i coeffs[i] * C(n, i).
  std::vector<Rational> dimensionPolynomial;
  /// Delta^{delta+1} V vanishes on the window and Delta^{delta} V does not.
  bool derivativeCheck = false;
  std::vector<LevelPresentation> profile;
};

/// Fits the longest tail of dimension values with a polynomial of least
/// degree e that is overdetermined (window length >= e + 2).
struct DimensionFit {
  int degree = -1;
  int windowStart = 0;
  bool overdetermined = false;
  std::vector<Rational> binomialCoefficients;
};

DimensionFit fit_dimension_polynomial(const std::vector<int>& dims);

Rational evaluate_binomial_polynomial(const std::vector<Rational>& coeffs, int n);

DegreeReport observed_degrees(const TruncatedFIModule& v);

/// t0 <= delta + h + 1 and t1 <= delta + 2h + 2; vacuously true unless all four are certified.
bool satisfies_presentation_bounds(const DegreeReport& r);

}  // namespace fimod
