#include "fimod/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace fimod {

void check_cap(int n, int cap) {
  if (n > cap) {
    throw CapExceeded("level " + std::to_string(n) + " exceeds truncation cap " + std::to_string(cap));
  }
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int ell) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), ell));
}

Partition Partition::tail() const {
  if (parts_.empty()) return {};
  return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

std::optional<Partition> Partition::pad(const Partition& tail, int n) {
  int first = n - tail.size();
  if (first <= 0 && n > 0) return std::nullopt;
  if (!tail.parts_.empty() && first < tail.parts_.front()) return std::nullopt;
  if (n == 0) {
    if (tail.size() == 0) return Partition{};
    return std::nullopt;
  }
  std::vector<int> parts{first};
  parts.insert(parts.end(), tail.parts_.begin(), tail.parts_.end());
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
  std::vector<Partition> out;
  std::vector<int> current;
  // Largest part first, each part bounded by the previous one: this visits
  // partitions in reverse lexicographic order.
  std::function<void(int, int)> rec = [&](int remaining, int maxPart) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, maxPart); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

int partition_index(const Partition& lambda) {
  auto all = enumerate_partitions(lambda.size());
  auto it = std::lower_bound(all.begin(), all.end(), lambda, std::greater<>());
  if (it == all.end() || *it != lambda) throw std::logic_error("partition not found");
  return static_cast<int>(it - all.begin());
}

Integer factorial(int n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Integer class_size(const Partition& cycleType) {
  Integer denom = 1;
  for (int ell = 1; ell <= cycleType.size(); ++ell) {
    int m = cycleType.multiplicity(ell);
    if (m == 0) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(ell), static_cast<unsigned long>(m));
    denom *= p * factorial(m);
  }
  return factorial(cycleType.size()) / denom;
}

std::vector<CycleType> cycle_types(int n) {
  std::vector<CycleType> out;
  for (auto& p : enumerate_partitions(n)) {
    Integer size = class_size(p);
    out.push_back({std::move(p), std::move(size)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// ClassFunction

ClassFunction::ClassFunction(int n)
    : n_(n), values_(enumerate_partitions(n).size(), Rational(0)) {}

ClassFunction::ClassFunction(int n, std::vector<Rational> values) : n_(n), values_(std::move(values)) {
  if (values_.size() != enumerate_partitions(n).size()) {
    throw std::invalid_argument("class function needs one value per cycle type of S_" + std::to_string(n));
  }
}

ClassFunction ClassFunction::constant(int n, const Rational& c) {
  ClassFunction f(n);
  std::fill(f.values_.begin(), f.values_.end(), c);
  return f;
}

const Rational& ClassFunction::operator[](const Partition& cycleType) const {
  if (cycleType.size() != n_) throw std::invalid_argument("cycle type of the wrong size");
  return values_[static_cast<std::size_t>(partition_index(cycleType))];
}

Rational& ClassFunction::operator[](const Partition& cycleType) {
  if (cycleType.size() != n_) throw std::invalid_argument("cycle type of the wrong size");
  return values_[static_cast<std::size_t>(partition_index(cycleType))];
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  if (other.n_ != n_) throw std::invalid_argument("class function level mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  if (other.n_ != n_) throw std::invalid_argument("class function level mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("class function level mismatch");
  ClassFunction c = a;
  for (std::size_t i = 0; i < c.values_.size(); ++i) c.values_[i] *= b.values_[i];
  return c;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.level() != g.level()) {
    throw std::invalid_argument("inner_product: levels " + std::to_string(f.level()) + " and " +
                                std::to_string(g.level()) + " differ");
  }
  auto types = cycle_types(f.level());
  Rational sum = 0;
  for (std::size_t i = 0; i < types.size(); ++i) {
    sum += Rational(types[i].classSize) * f.at_index(static_cast<int>(i)) * g.at_index(static_cast<int>(i));
  }
  return sum / Rational(factorial(f.level()));
}

namespace {

Partition remove_one_fixed_point(const Partition& mu) {
  std::vector<int> parts = mu.parts();
  auto it = std::find(parts.begin(), parts.end(), 1);
  parts.erase(it);
  return Partition(std::move(parts));
}

Partition add_fixed_point(const Partition& mu) {
  std::vector<int> parts = mu.parts();
  parts.push_back(1);
  return Partition(std::move(parts));
}

}  // namespace

ClassFunction induce_class_function(const ClassFunction& f) {
  const int n = f.level() + 1;
  auto shapes = enumerate_partitions(n);
  ClassFunction out(n);
  std::vector<Rational> values(shapes.size());
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    int fixed = shapes[i].multiplicity(1);
    values[i] = fixed == 0 ? Rational(0) : Rational(fixed) * f[remove_one_fixed_point(shapes[i])];
  }
  return ClassFunction(n, std::move(values));
}

ClassFunction restrict_class_function(const ClassFunction& f) {
  if (f.level() < 1) throw std::invalid_argument("cannot restrict from S_0");
  const int n = f.level() - 1;
  auto shapes = enumerate_partitions(n);
  std::vector<Rational> values;
  values.reserve(shapes.size());
  for (const auto& mu : shapes) values.push_back(f[add_fixed_point(mu)]);
  return ClassFunction(n, std::move(values));
}

Integer hook_length_dimension(const Partition& lambda) {
  Integer hooks = 1;
  const auto& parts = lambda.parts();
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < parts[static_cast<std::size_t>(i)]; ++j) {
      int arm = parts[static_cast<std::size_t>(i)] - j - 1;
      int leg = 0;
      for (int r = i + 1; r < lambda.length() && parts[static_cast<std::size_t>(r)] > j; ++r) ++leg;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(lambda.size()) / hooks;
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves one
// bead from position b to b - r; the sign counts beads jumped over.

namespace {

class MurnaghanNakayama {
 public:
  Integer value(const Partition& lambda, const std::vector<int>& mu, std::size_t from) {
    if (from == mu.size()) return lambda.size() == 0 ? Integer(1) : Integer(0);
    auto key = std::make_pair(lambda, std::vector<int>(mu.begin() + static_cast<long>(from), mu.end()));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int r = mu[from];
    const int len = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[i] + (len - 1 - i);

    Integer total = 0;
    for (int i = 0; i < len; ++i) {
      int b = beta[static_cast<std::size_t>(i)];
      int target = b - r;
      if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int jumped = 0;
      for (int g : beta) {
        if (g > target && g < b) ++jumped;
      }
      std::vector<int> moved = beta;
      moved[static_cast<std::size_t>(i)] = target;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> parts;
      for (int t = 0; t < len; ++t) {
        int part = moved[static_cast<std::size_t>(t)] - (len - 1 - t);
        if (part > 0) parts.push_back(part);
      }
      Integer sub = value(Partition(std::move(parts)), mu, from + 1);
      if (jumped % 2 == 0) total += sub; else total -= sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::map<std::pair<Partition, std::vector<int>>, Integer> memo_;
};

}  // namespace

CharacterTable character_table(int n, int cap) {
  if (n < 0) throw std::invalid_argument("character_table: negative n");
  check_cap(n, cap);
  CharacterTable table;
  table.n = n;
  table.shapes = enumerate_partitions(n);
  MurnaghanNakayama mn;
  for (const auto& lambda : table.shapes) {
    std::vector<Rational> values;
    values.reserve(table.shapes.size());
    for (const auto& mu : table.shapes) values.emplace_back(mn.value(lambda, mu.parts(), 0));
    table.characters.emplace_back(n, std::move(values));
  }
  return table;
}

ClassFunction irreducible_character(const Partition& lambda, int cap) {
  check_cap(lambda.size(), cap);
  MurnaghanNakayama mn;
  auto shapes = enumerate_partitions(lambda.size());
  std::vector<Rational> values;
  values.reserve(shapes.size());
  for (const auto& mu : shapes) values.emplace_back(mn.value(lambda, mu.parts(), 0));
  return ClassFunction(lambda.size(), std::move(values));
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::adjacent(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("adjacent transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::cycle_representative(const Partition& cycleType) {
  std::vector<int> images(static_cast<std::size_t>(cycleType.size()));
  int start = 0;
  for (int len : cycleType.parts()) {
    for (int t = 0; t < len; ++t) images[static_cast<std::size_t>(start + t)] = start + (t + 1) % len;
    start += len;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Partition Permutation::cycle_type() const {
  std::vector<char> seen(images_.size(), 0);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return Partition(std::move(lengths));
}

std::vector<int> Permutation::reduced_word() const {
  // Bubble sort the one-line notation: sigma * s_{j_1} * ... * s_{j_m} = id,
  // hence sigma = s_{j_m} * ... * s_{j_1}.
  std::vector<int> w = images_;
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] > w[p + 1]) {
        std::swap(w[p], w[p + 1]);
        swaps.push_back(static_cast<int>(p) + 1);
        changed = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> images(a.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  return Permutation(std::move(images));
}

}  // namespace fimod
