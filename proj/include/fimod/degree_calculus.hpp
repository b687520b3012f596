#pragma once

// Symbolic propagation of stable degree, local degree, generation degree and
// presentation degree bounds. A bound is a max of affine forms in one
// nonnegative integer index (q or k). Degree bounds are floored at -1, the
// degree of zero; intermediate expressions such as 2h - 2 may go lower.

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fimod {

struct AffineTerm {
  long slope = 0;
  long offset = 0;
  long operator()(long k) const { return slope * k + offset; }
  auto operator<=>(const AffineTerm&) const = default;
};

class BoundExpr {
 public:
  /// The bound -1.
  BoundExpr() = default;
  BoundExpr(long floor, std::vector<AffineTerm> terms);

  static BoundExpr constant(long c) { return BoundExpr(c, {}); }
  /// max(floor, a*k + b)
  static BoundExpr affine(long a, long b, long floor = -1) { return BoundExpr(floor, {{a, b}}); }

  long floor() const { return floor_; }
  const std::vector<AffineTerm>& terms() const { return terms_; }

  long operator()(long k) const;

  /// Drops terms that another term or the floor dominates on every k >= 0,
  /// and folds constants into the floor. Never changes a value.
  BoundExpr simplified() const;
  /// k -> scale * k + offset.
  BoundExpr compose(long scale, long offset = 0) const;
  /// K -> max_{0 <= q <= K} of this bound (for K >= 0).
  BoundExpr prefix_max() const;

  /// Renders as "max(c, a*k+b, ...)" or, with compact, "max(c, ak+b, ...)".
  std::string to_string(const std::string& var = "k", bool compact = false) const;

  friend BoundExpr max(const BoundExpr& a, const BoundExpr& b);
  friend BoundExpr operator+(const BoundExpr& a, const BoundExpr& b);
  friend BoundExpr operator+(const BoundExpr& a, long c);
  /// Nonnegative integer multiple.
  friend BoundExpr operator*(long m, const BoundExpr& a);

  friend bool operator==(const BoundExpr&, const BoundExpr&) = default;

 private:
  long floor_ = -1;
  std::vector<AffineTerm> terms_;
};

/// Points k in [0, kMax] where the two bounds differ.
std::vector<long> pointwise_differences(const BoundExpr& a, const BoundExpr& b, long kMax);

struct DegreeProfile {
  BoundExpr delta;
  BoundExpr hmax;
  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

struct DegreeValues {
  long delta = -1;
  long hmax = -1;
  friend bool operator==(const DegreeValues&, const DegreeValues&) = default;
};

/// Cohomology of a CW complex with coefficients in V: (D, eta) -> (D, max(2D - 2, eta)).
DegreeProfile coefficients_rule(const DegreeProfile& profile);

struct KernelCokernel {
  DegreeProfile kernel;
  DegreeProfile cokernel;
};

/// For f : V -> W: delta(ker) <= delta(V), delta(coker) <= delta(W), and both
/// local degrees <= max(2 delta(V) - 2, h(V), h(W)).
KernelCokernel kernel_cokernel_rule(const DegreeProfile& source, const DegreeProfile& target);

/// Finite filtration with subquotients N_i: (max delta_i, max h_i). Throws
/// std::invalid_argument on an empty list.
DegreeProfile filtration_rule(const std::vector<DegreeProfile>& pieces);

/// A first-quadrant spectral sequence of FI-modules with bounds on page `page`:
/// D_k = max_{p+q=k} delta(E^{p,q}), eta_k = max_{p+q=k} h(E^{p,q}).
struct SpectralInput {
  int page = 2;
  BoundExpr D;
  BoundExpr eta;
};

/// Exact evaluation at k of delta(M^k) <= D_k and
/// h(M^k) <= max(max_{l <= k+s-page} eta_l, max_{l <= 2k-page+1} (2 D_l - 2)),
/// s = max(k + 2, page). Empty maxima contribute -1.
DegreeValues spectral_rule(const SpectralInput& input, long k);

/// The same bound as an expression in k. Exact whenever the index ranges
/// above are nonempty; spectral_discrepancies() reports where it is not.
DegreeProfile spectral_rule_symbolic(const SpectralInput& input);

/// k in [0, kMax] where spectral_rule_symbolic disagrees with spectral_rule.
std::vector<long> spectral_discrepancies(const SpectralInput& input, long kMax);

/// Bounds of an E-page from bounds of its columns: D_k = max_{q <= k} delta_q.
SpectralInput spectral_input_from_columns(const DegreeProfile& columns, int page = 2);

struct PresentationBounds {
  BoundExpr t0;
  BoundExpr t1;
};

/// t0 <= delta + h + 1, t1 <= delta + 2h + 2.
PresentationBounds presentation_rule(const DegreeProfile& profile);

/// 2 delta + h + 1, or 2 delta for FI#-modules.
BoundExpr stable_range_rule(const DegreeProfile& profile, bool fiSharp);

struct ConfigSpaceBounds {
  DegreeProfile profile;  // in q
  PresentationBounds presentation;
};

/// Bounds for H^q(PConf(M)) with M connected of dimension d >= 2:
/// mu = 2 if d = 2 else 1, lambda = 1 iff orientable. Throws
/// std::invalid_argument if d < 2.
ConfigSpaceBounds config_space_rule(int manifoldDim, bool orientable);

struct ConfigSpaceValues {
  long delta, hmax, t0, t1;
  friend bool operator==(const ConfigSpaceValues&, const ConfigSpaceValues&) = default;
};

ConfigSpaceValues config_space_rule(int manifoldDim, bool orientable, long q);

enum class Preset { Mcg, McgBoundary, Diffeo, Hyperelliptic };

/// Throws UnknownPreset for anything else.
Preset parse_preset(const std::string& name);
std::string to_string(Preset p);

class UnknownPreset : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TraceStep {
  std::string rule;
  std::string index;  // grading variable of the expressions: "q" or "k"
  std::string delta;
  std::string hmax;
  std::string note;
};

struct BoundLine {
  BoundExpr derived;
  long value = -1;
  /// Published closed form where one exists.
  std::optional<BoundExpr> published;
  /// derived == published on k = 0..kVerify.
  bool matchesPublished = true;
};

struct BoundTable {
  Preset preset = Preset::Mcg;
  long k = 0;
  int lambda = 1;
  BoundLine delta, hmax, t0, t1, stableRange;
  /// Hyperelliptic only: the rational stable range 6k.
  std::optional<BoundLine> rationalStableRange;
  std::vector<TraceStep> trace;
};

inline constexpr long kVerifyRange = 50;

/// Composes config_space_rule -> coefficients_rule -> spectral_rule(page 2)
/// -> presentation_rule -> stable_range_rule and evaluates at k.
/// Requires k >= 0 and lambda in {0, 1}.
BoundTable preset_pipeline(Preset preset, long k, int lambda);

}  // namespace fimod
