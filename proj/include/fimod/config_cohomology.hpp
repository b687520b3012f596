#pragma once

// The cohomology of ordered configuration spaces of the plane (equivalently
// of the pure braid groups) as FI-modules over Q. H^* is generated by
// degree-one classes w_ij = w_ji subject to w_ij^2 = 0 and the three-term
// relation w_ik w_jk = w_ij (w_jk - w_ik) for i < j < k.

#include <map>
#include <utility>
#include <vector>

#include "fimod/fi_module.hpp"

namespace fimod {

/// Pairs (a_t, b_t), 0-based, with a_t < b_t and b_1 < ... < b_k.
using ArnoldMonomial = std::vector<std::pair<int, int>>;

/// Basis of H^k(PConf_n(R^2)) in lexicographic order.
std::vector<ArnoldMonomial> arnold_basis(int k, int n);

/// Rewrites the product w_{x_1 y_1} ... w_{x_k y_k} (in that order, with
/// unordered pairs) into the basis. Coefficients are integers.
std::map<ArnoldMonomial, long> straighten(const std::vector<std::pair<int, int>>& factors);

struct ConfModuleSpec {
  int k = 0;
  int maxLevel = 0;
};

/// H^k(PConf(disk); Q) at levels 0..maxLevel. Throws CapExceeded when
/// maxLevel > cap and std::invalid_argument for negative input.
TruncatedFIModule build_conf_module(const ConfModuleSpec& spec, int cap = kDefaultTruncationCap);

/// Coefficient of t^k in prod_{i=1}^{n-1} (1 + i t).
Integer conf_dimension_oracle(int k, int n);

/// Trace of the cycle-type representative acting on the straightened basis,
/// computed by relabelling every basis monomial directly.
Rational conf_character_oracle(int k, int n, const Partition& cycleType, int cap = kDefaultTruncationCap);

}  // namespace fimod
