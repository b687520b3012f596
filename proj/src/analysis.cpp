#include "fimod/analysis.hpp"

#include <algorithm>

namespace fimod {

Analysis analyze(const TruncatedFIModule& v, const AnalysisOptions& options) {
  const int top = v.max_level();
  check_cap(top, options.cap);
  Analysis a;
  a.dims = v.dims();
  a.degrees = observed_degrees(v);
  a.boundsHold = satisfies_presentation_bounds(a.degrees);

  for (int n = 0; n <= top; ++n) a.characters.push_back(level_character(v, n));
  a.multiplicities = decompose(a.characters, options.cap);
  if (top >= 1) a.onset = stabilization_onset(a.multiplicities);

  auto [lo, hi] = options.window.value_or(std::pair{a.onset ? a.onset->level : 0, top});
  lo = std::max(lo, 0);
  hi = std::min(hi, top);
  if (lo > hi) throw std::invalid_argument("empty fit window");
  a.fit = fit_character_polynomial(a.characters, options.maxDegree, lo, hi);
  if (a.fit.found && top >= 1) a.innerProducts = stable_inner_product(a.characters, a.fit.polynomial);
  return a;
}

}  // namespace fimod
