#include "fimod/fi_module.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fimod {

// ---------------------------------------------------------------------------
// Representation

Representation::Representation(int n, int dim, std::vector<SparseMatrix> generators)
    : n_(n), dim_(dim), generators_(std::move(generators)) {
  if (static_cast<int>(generators_.size()) != std::max(n - 1, 0)) {
    throw std::invalid_argument("S_" + std::to_string(n) + " needs " + std::to_string(std::max(n - 1, 0)) +
                                " generator matrices, got " + std::to_string(generators_.size()));
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].rows() != dim || generators_[i].cols() != dim) {
      throw std::invalid_argument("level " + std::to_string(n) + ": generator s_" + std::to_string(i + 1) +
                                  " is not " + std::to_string(dim) + "x" + std::to_string(dim));
    }
  }
}

SparseMatrix Representation::word(const std::vector<int>& indices) const {
  SparseMatrix m = SparseMatrix::identity(dim_);
  // Apply right to left so each step multiplies by a sparse generator.
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) m = generator(*it) * m;
  return m;
}

SparseMatrix Representation::action(const Permutation& sigma) const {
  if (sigma.size() != n_) throw std::invalid_argument("permutation of the wrong degree");
  return word(sigma.reduced_word());
}

ClassFunction Representation::character() const {
  auto shapes = enumerate_partitions(n_);
  std::vector<Rational> values;
  values.reserve(shapes.size());
  for (const auto& mu : shapes) values.push_back(action(Permutation::cycle_representative(mu)).trace());
  return ClassFunction(n_, std::move(values));
}

std::optional<std::string> Representation::coxeter_violation() const {
  const std::string where = "level " + std::to_string(n_) + ": ";
  const SparseMatrix id = SparseMatrix::identity(dim_);
  for (int i = 1; i < n_; ++i) {
    const auto& s = generator(i);
    if (s * s != id) return where + "s_" + std::to_string(i) + "^2 != id";
  }
  for (int i = 1; i + 1 < n_; ++i) {
    const auto& a = generator(i);
    const auto& b = generator(i + 1);
    if (a * b * a != b * a * b) {
      return where + "s_" + std::to_string(i) + " s_" + std::to_string(i + 1) + " s_" + std::to_string(i) +
             " != s_" + std::to_string(i + 1) + " s_" + std::to_string(i) + " s_" + std::to_string(i + 1);
    }
  }
  for (int i = 1; i < n_; ++i) {
    for (int j = i + 2; j < n_; ++j) {
      if (generator(i) * generator(j) != generator(j) * generator(i)) {
        return where + "s_" + std::to_string(i) + " s_" + std::to_string(j) + " != s_" + std::to_string(j) + " s_" +
               std::to_string(i);
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// TruncatedFIModule

TruncatedFIModule::TruncatedFIModule(std::vector<FILevel> levels) : levels_(std::move(levels)) {
  for (std::size_t n = 0; n < levels_.size(); ++n) {
    if (levels_[n].rep.degree() != static_cast<int>(n)) throw std::invalid_argument("level degrees out of order");
    if ((n == 0) != !levels_[n].inclusion.has_value()) {
      throw std::invalid_argument("level " + std::to_string(n) + ": inclusion must be present exactly for n >= 1");
    }
  }
}

int TruncatedFIModule::dim(int n) const { return level(n).dim(); }

std::vector<int> TruncatedFIModule::dims() const {
  std::vector<int> d;
  for (const auto& l : levels_) d.push_back(l.rep.dim());
  return d;
}

const SparseMatrix& TruncatedFIModule::inclusion(int n) const {
  if (n < 1) throw std::invalid_argument("no inclusion into level 0");
  return *levels_.at(static_cast<std::size_t>(n)).inclusion;
}

SparseMatrix TruncatedFIModule::increasing_injection(int n, int missing) const {
  if (missing < 0 || missing >= n) throw std::invalid_argument("missing point out of range");
  // pi = s_{missing+1} ... s_{n-1} sends n-1 to `missing` and shifts the points above it up.
  std::vector<int> w;
  for (int t = missing + 1; t <= n - 1; ++t) w.push_back(t);
  return level(n).word(w) * inclusion(n);
}

SparseMatrix TruncatedFIModule::injection_map(int n, const std::vector<int>& images) const {
  const int m = static_cast<int>(images.size());
  if (m > n) throw std::invalid_argument("injection into a smaller set");
  std::vector<int> full = images;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int x : images) {
    if (x < 0 || x >= n || used[static_cast<std::size_t>(x)]) throw std::invalid_argument("not an injection");
    used[static_cast<std::size_t>(x)] = 1;
  }
  for (int x = 0; x < n; ++x) {
    if (!used[static_cast<std::size_t>(x)]) full.push_back(x);
  }
  SparseMatrix m_to_n = SparseMatrix::identity(dim(m));
  for (int t = m + 1; t <= n; ++t) m_to_n = inclusion(t) * m_to_n;
  return level(n).action(Permutation(full)) * m_to_n;
}

std::optional<std::string> TruncatedFIModule::validate() const {
  for (int n = 0; n <= max_level(); ++n) {
    const auto& rep = level(n);
    if (auto v = rep.coxeter_violation()) return v;
    if (n == 0) continue;
    const auto& phi = inclusion(n);
    const std::string where = "level " + std::to_string(n) + ": ";
    if (phi.rows() != dim(n) || phi.cols() != dim(n - 1)) {
      return where + "inclusion is " + std::to_string(phi.rows()) + "x" + std::to_string(phi.cols()) +
             ", expected " + std::to_string(dim(n)) + "x" + std::to_string(dim(n - 1));
    }
    for (int i = 1; i + 1 < n; ++i) {
      if (phi * generator(n - 1, i) != generator(n, i) * phi) {
        return where + "equivariance phi_" + std::to_string(n) + " s_" + std::to_string(i) + " != s_" +
               std::to_string(i) + " phi_" + std::to_string(n);
      }
    }
    if (n >= 2) {
      SparseMatrix twice = phi * inclusion(n - 1);
      if (generator(n, n - 1) * twice != twice) {
        return where + "s_" + std::to_string(n - 1) + " phi_" + std::to_string(n) + " phi_" + std::to_string(n - 1) +
               " != phi_" + std::to_string(n) + " phi_" + std::to_string(n - 1);
      }
    }
  }
  return std::nullopt;
}

TruncatedFIModule TruncatedFIModule::truncated(int maxLevel) const {
  if (maxLevel > max_level()) throw std::invalid_argument("cannot extend a truncation");
  return TruncatedFIModule(std::vector<FILevel>(levels_.begin(), levels_.begin() + maxLevel + 1));
}

ClassFunction level_character(const TruncatedFIModule& v, int n) { return v.level(n).character(); }

// ---------------------------------------------------------------------------
// Builders

std::vector<std::vector<int>> enumerate_injections(int p, int n) {
  std::vector<std::vector<int>> out;
  if (p < 0 || p > n) return out;
  std::vector<int> cur;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int x = 0; x < n; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      used[static_cast<std::size_t>(x)] = 1;
      cur.push_back(x);
      self(self);
      cur.pop_back();
      used[static_cast<std::size_t>(x)] = 0;
    }
  };
  rec(rec);
  return out;
}

SparseMatrix block_diagonal(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int j = 0; j < a.cols(); ++j) m.set_column(j, a.column(j));
  for (int j = 0; j < b.cols(); ++j) {
    SparseVector col = b.column(j);
    for (auto& e : col) e.first += a.rows();
    m.set_column(a.cols() + j, std::move(col));
  }
  return m;
}

namespace {

// A module whose level n has a basis of "labels" (sorted vectors of points)
// permuted by S_n, with the inclusion sending each label to itself.
template <typename Basis, typename Act>
TruncatedFIModule permutation_module(int maxLevel, Basis basis, Act act) {
  std::vector<FILevel> levels;
  std::vector<std::vector<int>> previous;
  for (int n = 0; n <= maxLevel; ++n) {
    auto labels = basis(n);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<int>(i));
    const int d = static_cast<int>(labels.size());
    std::vector<SparseMatrix> gens;
    for (int i = 1; i < n; ++i) {
      SparseMatrix g(d, d);
      for (int j = 0; j < d; ++j) g.set_column(j, {{index.at(act(labels[static_cast<std::size_t>(j)], i)), Rational(1)}});
      gens.push_back(std::move(g));
    }
    FILevel level{Representation(n, d, std::move(gens)), std::nullopt};
    if (n > 0) {
      SparseMatrix phi(d, static_cast<int>(previous.size()));
      for (std::size_t j = 0; j < previous.size(); ++j) phi.set_column(static_cast<int>(j), {{index.at(previous[j]), Rational(1)}});
      level.inclusion = std::move(phi);
    }
    levels.push_back(std::move(level));
    previous = std::move(labels);
  }
  return TruncatedFIModule(std::move(levels));
}

int swap_point(int x, int i) {
  if (x == i - 1) return i;
  if (x == i) return i - 1;
  return x;
}

}  // namespace

TruncatedFIModule zero_module(int maxLevel) {
  return permutation_module(
      maxLevel, [](int) { return std::vector<std::vector<int>>{}; },
      [](const std::vector<int>& l, int) { return l; });
}

TruncatedFIModule free_module(int m, int maxLevel) {
  return permutation_module(
      maxLevel, [m](int n) { return enumerate_injections(m, n); },
      [](std::vector<int> f, int i) {
        for (int& x : f) x = swap_point(x, i);
        return f;
      });
}

TruncatedFIModule subset_module(int m, int maxLevel) {
  auto subsets = [m](int n) {
    std::vector<std::vector<int>> out;
    for (auto f : enumerate_injections(m, n)) {
      if (std::is_sorted(f.begin(), f.end())) out.push_back(std::move(f));
    }
    return out;
  };
  return permutation_module(maxLevel, subsets, [](std::vector<int> s, int i) {
    for (int& x : s) x = swap_point(x, i);
    std::sort(s.begin(), s.end());
    return s;
  });
}

TruncatedFIModule point_module(int at, int maxLevel) {
  std::vector<FILevel> levels;
  for (int n = 0; n <= maxLevel; ++n) {
    const int d = n == at ? 1 : 0;
    std::vector<SparseMatrix> gens;
    for (int i = 1; i < n; ++i) gens.push_back(SparseMatrix::identity(d));
    FILevel level{Representation(n, d, std::move(gens)), std::nullopt};
    if (n > 0) level.inclusion = SparseMatrix(d, n - 1 == at ? 1 : 0);
    levels.push_back(std::move(level));
  }
  return TruncatedFIModule(std::move(levels));
}

TruncatedFIModule direct_sum(const TruncatedFIModule& a, const TruncatedFIModule& b) {
  const int top = std::min(a.max_level(), b.max_level());
  std::vector<FILevel> levels;
  for (int n = 0; n <= top; ++n) {
    std::vector<SparseMatrix> gens;
    for (int i = 1; i < n; ++i) gens.push_back(block_diagonal(a.generator(n, i), b.generator(n, i)));
    FILevel level{Representation(n, a.dim(n) + b.dim(n), std::move(gens)), std::nullopt};
    if (n > 0) level.inclusion = block_diagonal(a.inclusion(n), b.inclusion(n));
    levels.push_back(std::move(level));
  }
  return TruncatedFIModule(std::move(levels));
}

}  // namespace fimod
