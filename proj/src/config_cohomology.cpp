#include "fimod/config_cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace fimod {

std::vector<ArnoldMonomial> arnold_basis(int k, int n) {
  std::vector<ArnoldMonomial> out;
  if (k < 0 || n < 0) return out;
  ArnoldMonomial cur;
  auto rec = [&](auto&& self, int nextB) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int b = nextB; b < n; ++b) {
      for (int a = 0; a < b; ++a) {
        cur.emplace_back(a, b);
        self(self, b + 1);
        cur.pop_back();
      }
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Term = std::pair<std::vector<std::pair<int, int>>, long>;

// Sign of the permutation sorting `order` (a list of distinct ints).
int sort_sign(std::vector<int> order) {
  int sign = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    while (order[i] != static_cast<int>(i)) {
      std::swap(order[i], order[static_cast<std::size_t>(order[i])]);
      sign = -sign;
    }
  }
  return sign;
}

void straighten_into(std::vector<std::pair<int, int>> factors, long coeff, std::map<ArnoldMonomial, long>& out) {
  if (coeff == 0) return;
  for (auto& f : factors) {
    if (f.first > f.second) std::swap(f.first, f.second);
    if (f.first == f.second) throw std::invalid_argument("w_ii is not a generator");
  }
  if (factors.empty()) {
    out[{}] += coeff;
    return;
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (factors[i] == factors[j]) return;  // w^2 = 0
    }
  }
  int top = -1;
  for (const auto& f : factors) top = std::max(top, f.second);
  std::vector<std::size_t> withTop;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].second == top) withTop.push_back(i);
  }
  if (withTop.size() == 1) {
    // Move the unique factor with the largest second index to the end, then
    // straighten the rest; its terms only involve smaller second indices.
    std::vector<int> order;
    std::vector<std::pair<int, int>> rest;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i != withTop[0]) {
        order.push_back(static_cast<int>(i));
        rest.push_back(factors[i]);
      }
    }
    order.push_back(static_cast<int>(withTop[0]));
    const int sign = sort_sign(order);
    std::map<ArnoldMonomial, long> partial;
    straighten_into(rest, 1, partial);
    for (auto& [m, c] : partial) {
      if (c == 0) continue;
      ArnoldMonomial full = m;
      full.push_back(factors[withTop[0]]);
      out[full] += sign * coeff * c;
    }
    return;
  }
  // Two factors w_{ik}, w_{jk} (i < j < k) sharing the largest index: bring
  // them to the front and apply w_ik w_jk = w_ij w_jk - w_ij w_ik.
  std::size_t p = withTop[0];
  std::size_t q = withTop[1];
  if (factors[p].first > factors[q].first) std::swap(p, q);
  const int i = factors[p].first;
  const int j = factors[q].first;
  const int k = top;
  std::vector<int> order{static_cast<int>(p), static_cast<int>(q)};
  std::vector<std::pair<int, int>> rest;
  for (std::size_t t = 0; t < factors.size(); ++t) {
    if (t != p && t != q) {
      order.push_back(static_cast<int>(t));
      rest.push_back(factors[t]);
    }
  }
  const long sign = sort_sign(order);
  auto with = [&](std::pair<int, int> x, std::pair<int, int> y) {
    std::vector<std::pair<int, int>> r{x, y};
    r.insert(r.end(), rest.begin(), rest.end());
    return r;
  };
  straighten_into(with({i, j}, {j, k}), sign * coeff, out);
  straighten_into(with({i, j}, {i, k}), -sign * coeff, out);
}

}  // namespace

std::map<ArnoldMonomial, long> straighten(const std::vector<std::pair<int, int>>& factors) {
  std::map<ArnoldMonomial, long> raw;
  straighten_into(factors, 1, raw);
  std::map<ArnoldMonomial, long> out;
  for (auto& [m, c] : raw) {
    if (c != 0) out.emplace(m, c);
  }
  return out;
}

namespace {

std::map<ArnoldMonomial, long> relabel(const ArnoldMonomial& m, const std::vector<int>& images) {
  std::vector<std::pair<int, int>> factors;
  factors.reserve(m.size());
  for (const auto& [a, b] : m) factors.emplace_back(images[static_cast<std::size_t>(a)], images[static_cast<std::size_t>(b)]);
  return straighten(factors);
}

}  // namespace

TruncatedFIModule build_conf_module(const ConfModuleSpec& spec, int cap) {
  if (spec.k < 0 || spec.maxLevel < 0) throw std::invalid_argument("conf module needs k >= 0 and maxLevel >= 0");
  check_cap(spec.maxLevel, cap);
  std::vector<FILevel> levels;
  std::vector<ArnoldMonomial> previous;
  for (int n = 0; n <= spec.maxLevel; ++n) {
    auto basis = arnold_basis(spec.k, n);
    std::map<ArnoldMonomial, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
    const int d = static_cast<int>(basis.size());
    std::vector<SparseMatrix> gens;
    for (int i = 1; i < n; ++i) {
      const auto images = Permutation::adjacent(n, i).images();
      SparseMatrix g(d, d);
      for (int col = 0; col < d; ++col) {
        SparseVector v;
        for (const auto& [m, c] : relabel(basis[static_cast<std::size_t>(col)], images)) v.emplace_back(index.at(m), Rational(c));
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        g.set_column(col, std::move(v));
      }
      gens.push_back(std::move(g));
    }
    FILevel level{Representation(n, d, std::move(gens)), std::nullopt};
    if (n > 0) {
      SparseMatrix phi(d, static_cast<int>(previous.size()));
      for (std::size_t j = 0; j < previous.size(); ++j) phi.set_column(static_cast<int>(j), {{index.at(previous[j]), Rational(1)}});
      level.inclusion = std::move(phi);
    }
    levels.push_back(std::move(level));
    previous = std::move(basis);
  }
  return TruncatedFIModule(std::move(levels));
}

Integer conf_dimension_oracle(int k, int n) {
  if (k < 0) return 0;
  // coefficients of prod (1 + i t), i = 1..n-1
  std::vector<Integer> poly{1};
  for (int i = 1; i <= n - 1; ++i) {
    poly.push_back(0);
    for (std::size_t d = poly.size() - 1; d >= 1; --d) poly[d] += i * poly[d - 1];
  }
  return static_cast<std::size_t>(k) < poly.size() ? poly[static_cast<std::size_t>(k)] : Integer(0);
}

Rational conf_character_oracle(int k, int n, const Partition& cycleType, int cap) {
  check_cap(n, cap);
  if (cycleType.size() != n) throw std::invalid_argument("cycle type does not match n");
  const auto images = Permutation::cycle_representative(cycleType).images();
  Rational trace = 0;
  for (const auto& m : arnold_basis(k, n)) {
    auto image = relabel(m, images);
    if (auto it = image.find(m); it != image.end()) trace += it->second;
  }
  return trace;
}

}  // namespace fimod
