#pragma once

// One-shot analysis of a truncated FI-module: observed degrees, irreducible
// multiplicities, a character polynomial and its inner products.

#include <optional>

#include "fimod/fi_engine.hpp"
#include "fimod/repstab.hpp"

namespace fimod {

struct AnalysisOptions {
  int maxDegree = 4;
  /// Fit window; defaults to [stabilization onset, N].
  std::optional<std::pair<int, int>> window;
  int cap = kDefaultTruncationCap;
};

struct Analysis {
  std::vector<int> dims;
  DegreeReport degrees;
  bool boundsHold = true;
  std::vector<ClassFunction> characters;
  MultiplicityTable multiplicities;
  std::optional<Onset> onset;  // needs two levels
  CharacterFit fit;
  std::optional<InnerProductSeries> innerProducts;  // against the fitted polynomial
};

/// Throws CapExceeded if the module has levels above the cap.
Analysis analyze(const TruncatedFIModule& v, const AnalysisOptions& options = {});

}  // namespace fimod
