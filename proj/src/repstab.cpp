#include "fimod/repstab.hpp"

#include <algorithm>

#include "fimod/linalg.hpp"

namespace fimod {

MultiplicityTable decompose(const std::vector<ClassFunction>& characters, int cap) {
  MultiplicityTable table;
  for (const auto& chi : characters) {
    const int n = chi.level();
    CharacterTable ct = character_table(n, cap);
    LevelMultiplicities level;
    level.n = n;
    Rational dim = chi.degree();
    if (dim.get_den() != 1 || dim < 0) {
      throw InvalidCharacter("level " + std::to_string(n) + ": degree " + to_string(dim) + " is not a dimension");
    }
    level.dim = static_cast<int>(dim.get_num().get_si());
    Integer reconciled = 0;
    for (std::size_t i = 0; i < ct.shapes.size(); ++i) {
      Rational m = inner_product(chi, ct.characters[i]);
      if (m.get_den() != 1 || m < 0) {
        throw InvalidCharacter("level " + std::to_string(n) + ": multiplicity of " + ct.shapes[i].to_string() +
                               " is " + to_string(m));
      }
      if (m == 0) continue;
      level.byTail[ct.shapes[i].tail()] = m.get_num();
      reconciled += m.get_num() * hook_length_dimension(ct.shapes[i]);
    }
    if (reconciled != level.dim) {
      throw InvalidCharacter("level " + std::to_string(n) + ": multiplicities do not add up to the dimension");
    }
    table.push_back(std::move(level));
  }
  return table;
}

namespace {

template <class T>
Onset constant_tail_onset(const std::vector<int>& levels, const std::vector<T>& values) {
  if (levels.size() < 2) throw std::invalid_argument("stabilization needs at least two levels");
  std::size_t i = values.size() - 1;
  while (i > 0 && values[i - 1] == values.back()) --i;
  Onset o;
  o.level = levels[i];
  o.flag = i + 1 == values.size() ? Certainty::InsufficientLevels : Certainty::Certified;
  return o;
}

}  // namespace

Onset stabilization_onset(const MultiplicityTable& table) {
  std::vector<int> levels;
  std::vector<std::map<Partition, Integer>> maps;
  for (const auto& l : table) {
    levels.push_back(l.n);
    maps.push_back(l.byTail);
  }
  return constant_tail_onset(levels, maps);
}

// ---------------------------------------------------------------------------

CharacterPolynomial::CharacterPolynomial(std::map<BinomialMonomial, Rational> coefficients) {
  for (auto& [m, c] : coefficients) {
    for (const auto& [ell, e] : m) {
      if (ell < 1 || e < 1) throw std::invalid_argument("binomial monomial needs ell >= 1 and m_ell >= 1");
    }
    if (c != 0) coefficients_.emplace(m, c);
  }
}

CharacterPolynomial CharacterPolynomial::constant(const Rational& c) {
  return CharacterPolynomial({{BinomialMonomial{}, c}});
}

namespace {

Integer binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer evaluate_monomial(const BinomialMonomial& m, const Partition& mu) {
  Integer v = 1;
  for (const auto& [ell, e] : m) v *= binomial(mu.multiplicity(ell), e);
  return v;
}

}  // namespace

Rational CharacterPolynomial::operator()(const Partition& cycleType) const {
  Rational v = 0;
  for (const auto& [m, c] : coefficients_) v += c * evaluate_monomial(m, cycleType);
  return v;
}

ClassFunction CharacterPolynomial::at_level(int n) const {
  std::vector<Rational> values;
  for (const auto& mu : enumerate_partitions(n)) values.push_back((*this)(mu));
  return ClassFunction(n, std::move(values));
}

int CharacterPolynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : coefficients_) {
    int md = 0;
    for (const auto& [ell, e] : m) md += ell * e;
    d = std::max(d, md);
  }
  return d;
}

int CharacterPolynomial::variables() const {
  int r = 0;
  for (const auto& [m, c] : coefficients_) {
    if (!m.empty()) r = std::max(r, m.rbegin()->first);
  }
  return r;
}

std::string CharacterPolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : coefficients_) {
    std::string factors;
    for (const auto& [ell, e] : m) {
      if (!factors.empty()) factors += "*";
      std::string z = "Z" + std::to_string(ell);
      factors += e == 1 ? z : "C(" + z + "," + std::to_string(e) + ")";
    }
    Rational a = abs(c);
    std::string term;
    if (factors.empty()) {
      term = fimod::to_string(a);
    } else {
      term = a == 1 ? factors : fimod::to_string(a) + "*" + factors;
    }
    if (s.empty()) {
      s = (c < 0 ? "-" : "") + term;
    } else {
      s += (c < 0 ? " - " : " + ") + term;
    }
  }
  return s;
}

std::vector<BinomialMonomial> binomial_monomials(int d, int r) {
  std::vector<BinomialMonomial> out;
  BinomialMonomial current;
  // Choose m_ell for ell = r, r-1, ..., 1 within the remaining degree budget.
  auto rec = [&](auto&& self, int ell, int budget) -> void {
    if (ell == 0) {
      out.push_back(current);
      return;
    }
    for (int e = 0; e * ell <= budget; ++e) {
      if (e > 0) current[ell] = e;
      self(self, ell - 1, budget - e * ell);
    }
    current.erase(ell);
  };
  if (d >= 0) rec(rec, std::min(r, d), d);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Sample {
  Partition mu;
  Rational value;
};

LinearSolution solve_on(const std::vector<BinomialMonomial>& basis, const std::vector<Sample>& samples) {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (const auto& s : samples) {
    std::vector<Rational> row;
    for (const auto& m : basis) row.emplace_back(evaluate_monomial(m, s.mu));
    a.push_back(std::move(row));
    b.push_back(s.value);
  }
  if (basis.empty()) {
    LinearSolution sol;
    sol.consistent = std::all_of(b.begin(), b.end(), [](const Rational& v) { return v == 0; });
    sol.unique = true;
    return sol;
  }
  return solve_exact(std::move(a), std::move(b));
}

}  // namespace

CharacterFit fit_character_polynomial(const std::vector<ClassFunction>& characters, int maxDegree,
                                      int windowStart, int windowEnd) {
  CharacterFit fit;
  fit.windowStart = windowStart;
  fit.windowEnd = windowEnd;
  std::vector<Sample> samples;
  for (const auto& chi : characters) {
    if (chi.level() < windowStart || chi.level() > windowEnd) continue;
    auto shapes = enumerate_partitions(chi.level());
    for (std::size_t i = 0; i < shapes.size(); ++i) samples.push_back({shapes[i], chi.at_index(static_cast<int>(i))});
  }
  if (samples.empty()) throw std::invalid_argument("fit_character_polynomial: no levels in the window");

  for (int e = -1; e <= maxDegree && !fit.found; ++e) {
    for (int r = 0; r <= std::max(e, 0); ++r) {
      auto basis = binomial_monomials(e, r);
      LinearSolution sol = solve_on(basis, samples);
      if (!sol.consistent) continue;
      std::map<BinomialMonomial, Rational> coeffs;
      for (std::size_t i = 0; i < basis.size(); ++i) coeffs[basis[i]] = sol.x[i];
      fit.found = true;
      fit.polynomial = CharacterPolynomial(std::move(coeffs));
      fit.degree = fit.polynomial.degree();
      fit.variables = fit.polynomial.variables();
      // Uniqueness among all fits of this degree, with every variable allowed.
      auto full = binomial_monomials(e, e);
      fit.unique = solve_on(full, samples).unique;
      break;
    }
  }
  if (!fit.found) return fit;

  for (const auto& chi : characters) {
    LevelResidual res;
    res.n = chi.level();
    res.inWindow = res.n >= windowStart && res.n <= windowEnd;
    auto shapes = enumerate_partitions(res.n);
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      if (fit.polynomial(shapes[i]) != chi.at_index(static_cast<int>(i))) ++res.mismatches;
    }
    fit.residuals.push_back(res);
  }
  return fit;
}

InnerProductSeries stable_inner_product(const std::vector<ClassFunction>& characters,
                                        const CharacterPolynomial& q) {
  InnerProductSeries s;
  for (const auto& chi : characters) {
    s.levels.push_back(chi.level());
    s.values.push_back(inner_product(chi, q.at_level(chi.level())));
  }
  s.onset = constant_tail_onset(s.levels, s.values);
  return s;
}

}  // namespace fimod
