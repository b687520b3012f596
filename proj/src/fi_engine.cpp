#include "fimod/fi_engine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fimod {

namespace {

void require_level(const TruncatedFIModule& v, int n, const char* what) {
  if (n < 0 || n > v.max_level()) {
    throw std::out_of_range(std::string(what) + ": level " + std::to_string(n) + " outside 0.." +
                            std::to_string(v.max_level()));
  }
}

void place_block(SparseMatrix& target, int rowOffset, int colOffset, const SparseMatrix& block) {
  for (int j = 0; j < block.cols(); ++j) {
    SparseVector col = target.column(colOffset + j);
    SparseVector shifted = block.column(j);
    for (auto& e : shifted) e.first += rowOffset;
    target.set_column(colOffset + j, axpy(col, Rational(1), shifted));
  }
}

// Increasing injections V_{n-1} -> V_n, cached per missing point.
class InjectionCache {
 public:
  InjectionCache(const TruncatedFIModule& v, int n) : v_(v), n_(n) {}
  const SparseMatrix& missing(int point) {
    auto it = cache_.find(point);
    if (it == cache_.end()) it = cache_.emplace(point, v_.increasing_injection(n_, point)).first;
    return it->second;
  }

 private:
  const TruncatedFIModule& v_;
  int n_;
  std::map<int, SparseMatrix> cache_;
};

}  // namespace

int InducedLevel::summand_index(const std::vector<int>& f) const {
  auto it = std::lower_bound(summands.begin(), summands.end(), f);
  if (it == summands.end() || *it != f) throw std::invalid_argument("not a summand index");
  return static_cast<int>(it - summands.begin());
}

InducedLevel induced_module(const TruncatedFIModule& v, int p, int n) {
  if (p < 1 || p > n) throw std::out_of_range("induced_module: need 1 <= p <= n");
  require_level(v, n, "induced_module");
  InducedLevel ind;
  ind.sourceLevel = n - p;
  ind.targetLevel = n;
  ind.summands = enumerate_injections(p, n);
  ind.blockDim = v.dim(n - p);
  const int d = ind.blockDim;
  const int total = d * static_cast<int>(ind.summands.size());
  const SparseMatrix identity = SparseMatrix::identity(d);

  std::vector<SparseMatrix> gens;
  for (int i = 1; i < n; ++i) {
    SparseMatrix g(total, total);
    for (std::size_t a = 0; a < ind.summands.size(); ++a) {
      const auto& f = ind.summands[a];
      std::vector<int> moved = f;
      for (int& x : moved) x = x == i - 1 ? i : (x == i ? i - 1 : x);
      const int b = ind.summand_index(moved);
      // Complement of im f in increasing order; s_i twists the summand only
      // when both swapped points lie in it, and then they are adjacent there.
      std::vector<int> complement;
      for (int x = 0; x < n; ++x) {
        if (std::find(f.begin(), f.end(), x) == f.end()) complement.push_back(x);
      }
      auto pos = std::find(complement.begin(), complement.end(), i - 1);
      bool twisted = pos != complement.end() && pos + 1 != complement.end() && *(pos + 1) == i;
      const SparseMatrix& block =
          twisted ? v.generator(n - p, static_cast<int>(pos - complement.begin()) + 1) : identity;
      place_block(g, b * d, static_cast<int>(a) * d, block);
    }
    gens.push_back(std::move(g));
  }
  ind.rep = Representation(n, total, std::move(gens));
  return ind;
}

SparseMatrix natural_map(const TruncatedFIModule& v, int n) {
  if (n < 1) throw std::out_of_range("natural_map: need n >= 1");
  require_level(v, n, "natural_map");
  const int d = v.dim(n - 1);
  SparseMatrix m(v.dim(n), n * d);
  for (int j = 0; j < n; ++j) place_block(m, 0, j * d, v.increasing_injection(n, j));
  return m;
}

std::pair<SparseMatrix, SparseMatrix> two_natural_maps(const TruncatedFIModule& v, int n) {
  if (n < 2) throw std::out_of_range("two_natural_maps: need n >= 2");
  require_level(v, n, "two_natural_maps");
  const int d1 = v.dim(n - 1);
  const int d2 = v.dim(n - 2);
  auto pairs = enumerate_injections(2, n);
  SparseMatrix first(n * d1, static_cast<int>(pairs.size()) * d2);
  SparseMatrix second(n * d1, static_cast<int>(pairs.size()) * d2);
  InjectionCache inject(v, n - 1);
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    const int a = pairs[idx][0];
    const int b = pairs[idx][1];
    const int col = static_cast<int>(idx) * d2;
    // Forgetting a keeps f(2) = b: include [n] \ {a, b} into [n] \ {b}.
    place_block(first, b * d1, col, inject.missing(a - (a > b ? 1 : 0)));
    place_block(second, a * d1, col, inject.missing(b - (b > a ? 1 : 0)));
  }
  return {std::move(first), std::move(second)};
}

std::string to_string(Certainty c) {
  return c == Certainty::Certified ? "certified-at-truncation" : "insufficient-levels";
}

std::vector<LevelPresentation> presentation_profile(const TruncatedFIModule& v) {
  std::vector<LevelPresentation> out;
  for (int n = 0; n <= v.max_level(); ++n) {
    LevelPresentation lp;
    lp.n = n;
    lp.dim = v.dim(n);
    if (n == 0) {
      lp.surjective = lp.dim == 0;
      lp.kernelIsImage = true;
      out.push_back(lp);
      continue;
    }
    SparseMatrix nat = natural_map(v, n);
    lp.inducedDim = nat.cols();
    lp.naturalRank = rank(nat);
    lp.surjective = lp.naturalRank == lp.dim;
    const int kernelDim = lp.inducedDim - lp.naturalRank;
    if (n == 1) {
      lp.kernelIsImage = kernelDim == 0;
    } else {
      auto [first, second] = two_natural_maps(v, n);
      SparseMatrix diff = first - second;
      if (!(nat * diff).is_zero()) {
        throw std::logic_error("level " + std::to_string(n) + ": natural map does not kill d_1 - d_2");
      }
      // im(d_1 - d_2) is inside the kernel, so equality is a dimension count.
      lp.differenceRank = rank(diff.rows() < diff.cols() ? diff.transpose() : diff);
      lp.kernelIsImage = lp.differenceRank == kernelDim;
    }
    out.push_back(lp);
  }
  return out;
}

ObservedDegree generation_degree(const std::vector<LevelPresentation>& profile) {
  ObservedDegree d;
  for (const auto& lp : profile) {
    if (!lp.surjective) d.value = lp.n;
  }
  if (!profile.empty() && !profile.back().surjective) d.flag = Certainty::InsufficientLevels;
  return d;
}

ObservedDegree relation_degree(const std::vector<LevelPresentation>& profile) {
  ObservedDegree d;
  for (const auto& lp : profile) {
    if (!lp.kernelIsImage) d.value = lp.n;
  }
  if (!profile.empty() && !profile.back().kernelIsImage) d.flag = Certainty::InsufficientLevels;
  return d;
}

ObservedDegree generation_degree(const TruncatedFIModule& v) { return generation_degree(presentation_profile(v)); }
ObservedDegree relation_degree(const TruncatedFIModule& v) { return relation_degree(presentation_profile(v)); }

FIHomologyLevel fi_homology_zero(const TruncatedFIModule& v, int n) {
  require_level(v, n, "fi_homology_zero");
  SparseMatrix image = n == 0 ? SparseMatrix(v.dim(0), 0) : natural_map(v, n);
  QuotientSpace q(image);
  std::vector<SparseMatrix> gens;
  for (int i = 1; i < n; ++i) gens.push_back(q.induced_map(v.generator(n, i), q));
  Representation rep(n, q.dimension(), std::move(gens));
  return {q.dimension(), rep.character()};
}

ShiftResult shift(const TruncatedFIModule& v) {
  if (v.max_level() < 1) throw std::out_of_range("shift: need maxLevel >= 1");
  ShiftResult r;
  std::vector<FILevel> levels;
  for (int n = 0; n + 1 <= v.max_level(); ++n) {
    const auto& big = v.level(n + 1);
    std::vector<SparseMatrix> gens(big.generators().begin(), big.generators().begin() + std::max(n - 1, 0));
    FILevel level{Representation(n, big.dim(), std::move(gens)), std::nullopt};
    // [n-1] + {*} -> [n] + {*} sends * = n to * = n+1: the increasing injection missing n.
    if (n > 0) level.inclusion = v.increasing_injection(n + 1, n - 1);
    levels.push_back(std::move(level));
    r.iota.push_back(v.inclusion(n + 1));
  }
  r.module = TruncatedFIModule(std::move(levels));
  return r;
}

TruncatedFIModule derivative(const TruncatedFIModule& v) {
  ShiftResult s = shift(v);
  std::vector<QuotientSpace> quotients;
  for (const auto& iota : s.iota) quotients.emplace_back(iota);
  std::vector<FILevel> levels;
  for (int n = 0; n <= s.module.max_level(); ++n) {
    const auto& q = quotients[static_cast<std::size_t>(n)];
    std::vector<SparseMatrix> gens;
    for (int i = 1; i < n; ++i) gens.push_back(q.induced_map(s.module.generator(n, i), q));
    FILevel level{Representation(n, q.dimension(), std::move(gens)), std::nullopt};
    if (n > 0) {
      const auto& prev = quotients[static_cast<std::size_t>(n - 1)];
      const SparseMatrix& incl = s.module.inclusion(n);
      if (!q.projected(incl * s.iota[static_cast<std::size_t>(n - 1)]).is_zero()) {
        throw std::logic_error("derivative: shifted inclusion does not preserve im(iota) at level " +
                               std::to_string(n));
      }
      level.inclusion = prev.induced_map(incl, q);
    }
    levels.push_back(std::move(level));
  }
  return TruncatedFIModule(std::move(levels));
}

// ---------------------------------------------------------------------------
// Dimension polynomial

namespace {

std::vector<Rational> differences(std::vector<Rational> seq, int order) {
  for (int o = 0; o < order && !seq.empty(); ++o) {
    for (std::size_t t = 0; t + 1 < seq.size(); ++t) seq[t] = seq[t + 1] - seq[t];
    seq.pop_back();
  }
  return seq;
}

// C(x, i) for rational x.
Rational binomial(const Rational& x, int i) {
  Rational r = 1;
  for (int t = 0; t < i; ++t) r = r * (x - t) / (t + 1);
  return r;
}

}  // namespace

Rational evaluate_binomial_polynomial(const std::vector<Rational>& coeffs, int n) {
  Rational sum = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) sum += coeffs[i] * binomial(Rational(n), static_cast<int>(i));
  return sum;
}

DimensionFit fit_dimension_polynomial(const std::vector<int>& dims) {
  const int top = static_cast<int>(dims.size()) - 1;
  std::vector<Rational> seq(dims.begin(), dims.end());
  DimensionFit fit;
  bool found = false;
  for (int e = -1; e <= top - 1 && !found; ++e) {
    // (e+1)-th differences vanish on [s, top-e-1] exactly when the window
    // [s, top] carries a polynomial of degree <= e.
    auto diff = differences(seq, e + 1);
    int s = static_cast<int>(diff.size());
    while (s > 0 && diff[static_cast<std::size_t>(s - 1)] == 0) --s;
    if (s <= top - e - 1) {
      fit.degree = e;
      fit.windowStart = s;
      fit.overdetermined = true;
      found = true;
    }
  }
  if (!found) {
    // Interpolate everything; nothing is overdetermined.
    int deg = -1;
    for (int i = 0; i <= top; ++i) {
      if (differences(seq, i).front() != 0) deg = i;
    }
    fit.degree = deg;
    fit.windowStart = 0;
    fit.overdetermined = false;
  }
  // Newton form at the window start, re-expanded in the basis C(n, i).
  const int s = fit.windowStart;
  std::vector<Rational> newton;
  for (int i = 0; i <= fit.degree; ++i) {
    newton.push_back(differences(std::vector<Rational>(seq.begin() + s, seq.end()), i).front());
  }
  std::vector<Rational> values;
  for (int n = 0; n <= fit.degree; ++n) {
    Rational p = 0;
    for (int i = 0; i <= fit.degree; ++i) p += newton[static_cast<std::size_t>(i)] * binomial(Rational(n - s), i);
    values.push_back(p);
  }
  for (int i = 0; i <= fit.degree; ++i) fit.binomialCoefficients.push_back(differences(values, i).front());
  return fit;
}

DegreeReport observed_degrees(const TruncatedFIModule& v) {
  DegreeReport r;
  r.profile = presentation_profile(v);
  r.generation = generation_degree(r.profile);
  r.relation = relation_degree(r.profile);

  const int top = v.max_level();
  DimensionFit fit = fit_dimension_polynomial(v.dims());
  r.windowStart = fit.windowStart;
  r.windowEnd = top;
  r.dimensionPolynomial = fit.binomialCoefficients;
  r.stable.value = fit.degree;
  r.local.value = fit.windowStart - 1;

  // Delta^{delta+1} V must vanish on the window, Delta^{delta} V must not.
  bool vanishes = true;
  bool previousNonzero = fit.degree < 0;
  TruncatedFIModule current = v;
  for (int j = 0; j <= fit.degree + 1; ++j) {
    if (j > 0) {
      if (current.max_level() < 1) break;
      current = derivative(current);
    }
    const int last = current.max_level();
    if (j == fit.degree) {
      for (int n = fit.windowStart; n <= last; ++n) {
        if (current.dim(n) != 0) previousNonzero = true;
      }
    }
    if (j == fit.degree + 1) {
      for (int n = fit.windowStart; n <= last; ++n) {
        if (current.dim(n) != 0) vanishes = false;
      }
    }
  }
  r.derivativeCheck = vanishes && previousNonzero;
  const Certainty c = fit.overdetermined && r.derivativeCheck ? Certainty::Certified : Certainty::InsufficientLevels;
  r.stable.flag = c;
  r.local.flag = c;
  return r;
}

bool satisfies_presentation_bounds(const DegreeReport& r) {
  auto ok = [](const ObservedDegree& d) { return d.flag == Certainty::Certified; };
  if (!ok(r.generation) || !ok(r.relation) || !ok(r.stable) || !ok(r.local)) return true;
  return r.generation.value <= r.stable.value + r.local.value + 1 &&
         r.relation.value <= r.stable.value + 2 * r.local.value + 2;
}

}  // namespace fimod
