#include "fimod/degree_calculus.hpp"

#include <algorithm>
#include <stdexcept>

namespace fimod {

// ---------------------------------------------------------------------------
// BoundExpr

BoundExpr::BoundExpr(long floor, std::vector<AffineTerm> terms)
    : floor_(floor), terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(), std::greater<>());
  terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
}

long BoundExpr::operator()(long k) const {
  long v = floor_;
  for (const auto& t : terms_) v = std::max(v, t(k));
  return v;
}

BoundExpr BoundExpr::simplified() const {
  long floor = floor_;
  std::vector<AffineTerm> kept;
  for (const auto& t : terms_) {
    if (t.slope == 0) floor = std::max(floor, t.offset);
  }
  for (const auto& t : terms_) {
    if (t.slope <= 0 && t.offset <= floor) continue;
    bool dominated = std::any_of(terms_.begin(), terms_.end(), [&](const AffineTerm& u) {
      return u != t && u.slope >= t.slope && u.offset >= t.offset;
    });
    if (!dominated) kept.push_back(t);
  }
  return BoundExpr(floor, std::move(kept));
}

BoundExpr BoundExpr::compose(long scale, long offset) const {
  std::vector<AffineTerm> out;
  for (const auto& t : terms_) out.push_back({t.slope * scale, t.slope * offset + t.offset});
  return BoundExpr(floor_, std::move(out));
}

BoundExpr BoundExpr::prefix_max() const {
  std::vector<AffineTerm> out;
  long floor = floor_;
  for (const auto& t : terms_) {
    if (t.slope >= 0) {
      out.push_back(t);
    } else {
      floor = std::max(floor, t.offset);  // attained at q = 0
    }
  }
  return BoundExpr(floor, std::move(out));
}

namespace {

std::string render_term(const AffineTerm& t, const std::string& var, bool compact) {
  std::string s;
  if (t.slope == 0) return std::to_string(t.offset);
  if (t.slope == 1) {
    s = var;
  } else if (t.slope == -1) {
    s = "-" + var;
  } else {
    s = std::to_string(t.slope) + (compact ? "" : "*") + var;
  }
  if (t.offset > 0) s += "+" + std::to_string(t.offset);
  if (t.offset < 0) s += std::to_string(t.offset);
  return s;
}

}  // namespace

std::string BoundExpr::to_string(const std::string& var, bool compact) const {
  if (terms_.empty()) return std::to_string(floor_);
  std::string s = "max(" + std::to_string(floor_);
  for (const auto& t : terms_) s += ", " + render_term(t, var, compact);
  return s + ")";
}

BoundExpr max(const BoundExpr& a, const BoundExpr& b) {
  std::vector<AffineTerm> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return BoundExpr(std::max(a.floor_, b.floor_), std::move(terms));
}

BoundExpr operator+(const BoundExpr& a, const BoundExpr& b) {
  // max(fa, A_i) + max(fb, B_j) = max over all pairs, floors included.
  std::vector<AffineTerm> terms;
  for (const auto& t : a.terms_) terms.push_back({t.slope, t.offset + b.floor_});
  for (const auto& u : b.terms_) terms.push_back({u.slope, u.offset + a.floor_});
  for (const auto& t : a.terms_) {
    for (const auto& u : b.terms_) terms.push_back({t.slope + u.slope, t.offset + u.offset});
  }
  return BoundExpr(a.floor_ + b.floor_, std::move(terms));
}

BoundExpr operator+(const BoundExpr& a, long c) {
  std::vector<AffineTerm> terms;
  for (const auto& t : a.terms_) terms.push_back({t.slope, t.offset + c});
  return BoundExpr(a.floor_ + c, std::move(terms));
}

BoundExpr operator*(long m, const BoundExpr& a) {
  if (m < 0) throw std::invalid_argument("bounds scale by nonnegative integers only");
  std::vector<AffineTerm> terms;
  for (const auto& t : a.terms_) terms.push_back({m * t.slope, m * t.offset});
  return BoundExpr(m * a.floor_, std::move(terms));
}

std::vector<long> pointwise_differences(const BoundExpr& a, const BoundExpr& b, long kMax) {
  std::vector<long> out;
  for (long k = 0; k <= kMax; ++k) {
    if (a(k) != b(k)) out.push_back(k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rules

namespace {

// Degrees never drop below -1; intermediate sums may.
BoundExpr degree(const BoundExpr& e) { return max(e, BoundExpr::constant(-1)).simplified(); }

}  // namespace

DegreeProfile coefficients_rule(const DegreeProfile& p) {
  return {p.delta, degree(max(2 * p.delta + (-2), p.hmax))};
}

KernelCokernel kernel_cokernel_rule(const DegreeProfile& source, const DegreeProfile& target) {
  BoundExpr h = degree(max(max(2 * source.delta + (-2), source.hmax), target.hmax));
  return {{source.delta, h}, {target.delta, h}};
}

DegreeProfile filtration_rule(const std::vector<DegreeProfile>& pieces) {
  if (pieces.empty()) throw std::invalid_argument("filtration_rule needs at least one subquotient");
  DegreeProfile out = pieces.front();
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    out.delta = max(out.delta, pieces[i].delta);
    out.hmax = max(out.hmax, pieces[i].hmax);
  }
  return out;
}

DegreeValues spectral_rule(const SpectralInput& input, long k) {
  if (k < 0) throw std::invalid_argument("spectral_rule: k must be nonnegative");
  if (input.page < 2) throw std::invalid_argument("spectral_rule: page must be >= 2");
  const long d = input.page;
  const long s = std::max(k + 2, d);
  DegreeValues v;
  v.delta = input.D(k);
  long h = -1;
  for (long l = 0; l <= k + s - d; ++l) h = std::max(h, input.eta(l));
  for (long l = 0; l <= 2 * k - d + 1; ++l) h = std::max(h, 2 * input.D(l) - 2);
  v.hmax = h;
  return v;
}

DegreeProfile spectral_rule_symbolic(const SpectralInput& input) {
  if (input.page < 2) throw std::invalid_argument("spectral_rule: page must be >= 2");
  const long d = input.page;
  const BoundExpr eta = input.eta.prefix_max();
  const BoundExpr twoD = (2 * input.D + (-2)).prefix_max();
  // k + s - d = max(2k + 2 - d, k); a nondecreasing bound commutes with that max.
  BoundExpr h = max(max(eta.compose(2, 2 - d), eta.compose(1, 0)), twoD.compose(2, 1 - d));
  return {input.D, degree(h)};
}

std::vector<long> spectral_discrepancies(const SpectralInput& input, long kMax) {
  DegreeProfile sym = spectral_rule_symbolic(input);
  std::vector<long> out;
  for (long k = 0; k <= kMax; ++k) {
    DegreeValues exact = spectral_rule(input, k);
    if (exact.delta != sym.delta(k) || exact.hmax != sym.hmax(k)) out.push_back(k);
  }
  return out;
}

SpectralInput spectral_input_from_columns(const DegreeProfile& columns, int page) {
  return {page, columns.delta.prefix_max().simplified(), columns.hmax.prefix_max().simplified()};
}

PresentationBounds presentation_rule(const DegreeProfile& p) {
  return {degree(p.delta + p.hmax + 1), degree(p.delta + 2 * p.hmax + 2)};
}

BoundExpr stable_range_rule(const DegreeProfile& p, bool fiSharp) {
  if (fiSharp) return degree(2 * p.delta);
  return degree(2 * p.delta + p.hmax + 1);
}

ConfigSpaceBounds config_space_rule(int manifoldDim, bool orientable) {
  if (manifoldDim < 2) throw std::invalid_argument("config_space_rule: manifold dimension must be >= 2");
  const long mu = manifoldDim == 2 ? 2 : 1;
  const long lambda = orientable ? 1 : 0;
  ConfigSpaceBounds b;
  b.profile.delta = BoundExpr::affine(mu, 0);
  b.profile.hmax = BoundExpr::affine(4 * mu, -2 * mu * lambda - 2);
  b.presentation.t0 = BoundExpr(-1, {{mu, 0}, {5 * mu, -2 * mu * lambda - 1}});
  b.presentation.t1 = BoundExpr(-1, {{mu, 0}, {9 * mu, -4 * mu * lambda - 2}});
  return b;
}

ConfigSpaceValues config_space_rule(int manifoldDim, bool orientable, long q) {
  if (q < 0) throw std::invalid_argument("config_space_rule: q must be nonnegative");
  auto b = config_space_rule(manifoldDim, orientable);
  return {b.profile.delta(q), b.profile.hmax(q), b.presentation.t0(q), b.presentation.t1(q)};
}

// ---------------------------------------------------------------------------
// Presets

Preset parse_preset(const std::string& name) {
  if (name == "mcg") return Preset::Mcg;
  if (name == "mcg-boundary") return Preset::McgBoundary;
  if (name == "diffeo") return Preset::Diffeo;
  if (name == "hyperelliptic") return Preset::Hyperelliptic;
  throw UnknownPreset("unknown preset '" + name + "' (expected mcg, mcg-boundary, diffeo or hyperelliptic)");
}

std::string to_string(Preset p) {
  switch (p) {
    case Preset::Mcg: return "mcg";
    case Preset::McgBoundary: return "mcg-boundary";
    case Preset::Diffeo: return "diffeo";
    case Preset::Hyperelliptic: return "hyperelliptic";
  }
  return "?";
}

namespace {

TraceStep step(std::string rule, std::string index, const DegreeProfile& p, std::string note = {}) {
  return {std::move(rule), index, p.delta.to_string(index), p.hmax.to_string(index), std::move(note)};
}

BoundLine line(const BoundExpr& derived, long k, std::optional<BoundExpr> published) {
  BoundLine l;
  l.derived = derived;
  l.value = derived(k);
  l.published = std::move(published);
  if (l.published) l.matchesPublished = pointwise_differences(derived, *l.published, kVerifyRange).empty();
  return l;
}

std::string join(const std::vector<long>& ks) {
  std::string s;
  for (long k : ks) s += (s.empty() ? "" : ",") + std::to_string(k);
  return s;
}

}  // namespace

BoundTable preset_pipeline(Preset preset, long k, int lambda) {
  if (k < 0) throw std::invalid_argument("preset_pipeline: k must be nonnegative");
  if (lambda != 0 && lambda != 1) throw std::invalid_argument("preset_pipeline: lambda must be 0 or 1");
  BoundTable t;
  t.preset = preset;
  t.k = k;
  t.lambda = preset == Preset::Hyperelliptic ? 1 : lambda;
  const long lam = t.lambda;

  // Fibre: configuration spaces of a surface (mu = 2) or of a manifold of dimension >= 3 (mu = 1).
  const int fibreDim = preset == Preset::Diffeo ? 3 : 2;
  ConfigSpaceBounds conf = config_space_rule(fibreDim, lam == 1);
  t.trace.push_back(step("config_space_rule", "q", conf.profile,
                         "H^q(PConf(M)), dim M = " + std::to_string(fibreDim) + ", lambda = " + std::to_string(lam)));
  if (preset == Preset::Hyperelliptic && lambda != 1) {
    t.trace.back().note += "; hyperelliptic groups use lambda = 1";
  }

  DegreeProfile columns = coefficients_rule(conf.profile);
  t.trace.push_back(step("coefficients_rule", "q", columns, "E_2^{p,q} = H^p(base; H^q(fibre)) for every p"));

  SpectralInput input = spectral_input_from_columns(columns, 2);
  t.trace.push_back(step("spectral_input", "k", {input.D, input.eta}, "D_k, eta_k as maxima over p + q = k"));

  DegreeProfile total = spectral_rule_symbolic(input);
  auto bad = spectral_discrepancies(input, kVerifyRange);
  t.trace.push_back(step("spectral_rule", "k", total,
                         bad.empty() ? "page 2; symbolic form equals the finite maxima for k = 0.." +
                                           std::to_string(kVerifyRange)
                                     : "page 2; symbolic form differs from the finite maxima at k = " + join(bad)));

  if (preset == Preset::McgBoundary) {
    // FI#-modules are semi-induced: h = -1, t0 = delta and t1 <= delta.
    DegreeProfile sharp{total.delta, BoundExpr::constant(-1)};
    t.trace.push_back(step("fi_sharp_rule", "k", sharp, "h = -1, t0 = delta, t1 <= delta"));
    BoundExpr range = stable_range_rule(sharp, true);
    t.trace.push_back({"stable_range_rule", "k", range.to_string(), "", "FI#: n >= 2 delta"});
    const BoundExpr twoK = BoundExpr::affine(2, 0);
    t.delta = line(sharp.delta, k, twoK);
    t.hmax = line(sharp.hmax, k, BoundExpr::constant(-1));
    t.t0 = line(sharp.delta, k, twoK);
    t.t1 = line(sharp.delta, k, twoK);
    t.stableRange = line(range, k, BoundExpr::affine(4, 0));
    return t;
  }

  PresentationBounds pres = presentation_rule(total);
  t.trace.push_back({"presentation_rule", "k", pres.t0.to_string(), pres.t1.to_string(),
                     "t0 = delta + h + 1, t1 = delta + 2h + 2 (delta/hmax columns hold t0/t1)"});
  BoundExpr range = stable_range_rule(total, false);
  t.trace.push_back({"stable_range_rule", "k", range.to_string(), "", "n >= 2 delta + h + 1"});

  if (preset == Preset::Diffeo) {
    t.delta = line(total.delta, k, BoundExpr::affine(1, 0));
    t.hmax = line(total.hmax, k, BoundExpr::affine(8, -2 * lam - 2));
    t.t0 = line(pres.t0, k, BoundExpr::affine(9, -2 * lam - 1, 0));
    t.t1 = line(pres.t1, k, BoundExpr::affine(17, -4 * lam - 2, 0));
    t.stableRange = line(range, k, std::nullopt);
    return t;
  }

  t.delta = line(total.delta, k, BoundExpr::affine(2, 0));
  t.hmax = line(total.hmax, k, BoundExpr::affine(16, -4 * lam - 2));
  t.t0 = line(pres.t0, k, BoundExpr::affine(18, -4 * lam - 1, 0));
  t.t1 = line(pres.t1, k, BoundExpr::affine(34, -8 * lam - 2, 0));
  t.stableRange = line(range, k, BoundExpr::affine(20, -4 * lam - 1, 0));
  if (preset == Preset::Hyperelliptic) {
    // Weight <= 2k plus stability degree <= 4k.
    BoundExpr rational = BoundExpr::affine(2, 0) + BoundExpr::affine(4, 0);
    t.rationalStableRange = line(rational.simplified(), k, BoundExpr::affine(6, 0));
    t.trace.push_back({"rational_stable_range", "k", t.rationalStableRange->derived.to_string(), "",
                       "weight <= 2k plus stability degree <= 4k"});
  }
  return t;
}

}  // namespace fimod
