#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fimod/config_cohomology.hpp"
#include "fimod/repstab.hpp"
#include "oracles.hpp"

using namespace fimod;

namespace {

std::vector<ClassFunction> characters(const TruncatedFIModule& v) {
  std::vector<ClassFunction> out;
  for (int n = 0; n <= v.max_level(); ++n) out.push_back(level_character(v, n));
  return out;
}

const std::vector<ClassFunction>& h1() {
  static const auto c = characters(build_conf_module({1, 8}));
  return c;
}

CharacterPolynomial q_h1() {
  return CharacterPolynomial({{{{1, 2}}, Rational(1)}, {{{2, 1}}, Rational(1)}});
}

}  // namespace

TEST_CASE("decomposition of the H^1 testbed") {
  auto table = decompose(h1());
  const auto& six = table[6];
  CHECK(six.byTail == std::map<Partition, Integer>{{Partition(), 1}, {Partition({1}), 1}, {Partition({2}), 1}});
  for (const auto& l : table) {
    Integer total = 0;
    for (const auto& [tail, m] : l.byTail) total += m * hook_length_dimension(*Partition::pad(tail, l.n));
    CHECK(total == l.dim);
  }
  auto onset = stabilization_onset(table);
  CHECK(onset.level == 4);
  CHECK(onset.flag == Certainty::Certified);
}

TEST_CASE("decomposition of simple characters") {
  auto k0 = decompose(characters(build_conf_module({0, 6})));
  for (const auto& l : k0) CHECK(l.byTail == std::map<Partition, Integer>{{Partition(), 1}});
  CHECK(stabilization_onset(k0).level == 0);

  // Regular character of S_3: each irreducible with multiplicity its dimension.
  ClassFunction reg(3);
  reg[Partition({1, 1, 1})] = 6;
  auto r = decompose({reg});
  CHECK(r[0].byTail == std::map<Partition, Integer>{{Partition(), 1}, {Partition({1}), 2}, {Partition({1, 1}), 1}});

  ClassFunction bad(3);
  bad[Partition({1, 1, 1})] = 1;
  CHECK_THROWS_AS(decompose({bad}), InvalidCharacter);
  CHECK_THROWS_AS(decompose({ClassFunction::constant(3, -1)}), InvalidCharacter);
}

TEST_CASE("onset flags") {
  auto t = decompose(characters(free_module(1, 3)));
  // M(1): (n) + (n-1,1) for n >= 2, constant only from n = 2.
  auto o = stabilization_onset(t);
  CHECK(o.level == 2);
  auto top = decompose(characters(point_module(3, 3)));
  CHECK(stabilization_onset(top).flag == Certainty::InsufficientLevels);
  CHECK_THROWS(stabilization_onset(decompose({ClassFunction::constant(1, 1)})));
}

TEST_CASE("character polynomials") {
  auto q = q_h1();
  CHECK(q.degree() == 2);
  CHECK(q.variables() == 2);
  CHECK(q.to_string() == "C(Z1,2) + Z2");
  CHECK(q(Partition({2, 1, 1})) == 2);
  CHECK(CharacterPolynomial::constant(1).to_string() == "1");
  CHECK(CharacterPolynomial().degree() == -1);
  CHECK(CharacterPolynomial({{{{1, 3}, {3, 1}}, Rational(-1, 2)}}).to_string() == "-1/2*C(Z1,3)*Z3");
  CHECK(binomial_monomials(2, 2).size() == 4);
  CHECK(binomial_monomials(4, 4).size() == 12);
  CHECK(binomial_monomials(-1, 3).empty());
  CHECK_THROWS(CharacterPolynomial(std::map<BinomialMonomial, Rational>{{BinomialMonomial{{0, 1}}, Rational(1)}}));
}

TEST_CASE("fitting the H^1 characters") {
  auto fit = fit_character_polynomial(h1(), 2, 3, 8);
  REQUIRE(fit.found);
  CHECK(fit.polynomial == q_h1());
  CHECK(fit.degree == 2);
  CHECK(fit.variables == 2);
  CHECK(fit.unique);
  for (const auto& r : fit.residuals) CHECK(r.mismatches == 0);
  // Brute-force traces: fixed 2-subsets.
  for (int n = 2; n <= 6; ++n) {
    for (const auto& p : oracle::all_permutations(n)) {
      long fixed = 0;
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          int pa = p[static_cast<std::size_t>(a)], pb = p[static_cast<std::size_t>(b)];
          fixed += (pa == a && pb == b) || (pa == b && pb == a);
        }
      }
      CHECK(fit.polynomial(Partition(oracle::cycle_type(p))) == fixed);
    }
  }
}

TEST_CASE("fitting failures and trivial fits") {
  auto k0 = characters(build_conf_module({0, 5}));
  auto fit = fit_character_polynomial(k0, 2, 0, 5);
  REQUIRE(fit.found);
  CHECK(fit.polynomial == CharacterPolynomial::constant(1));
  CHECK(fit.degree == 0);
  CHECK(fit_character_polynomial(h1(), 1, 3, 8).found == false);
  auto zero = fit_character_polynomial(characters(zero_module(3)), 2, 0, 3);
  CHECK(zero.found);
  CHECK(zero.degree == -1);
  // The sign character of S_3 needs degree 2, and four unknowns meet three classes.
  auto loose = fit_character_polynomial({ClassFunction(3, {1, -1, 1})}, 2, 3, 3);
  CHECK(loose.found);
  CHECK_FALSE(loose.unique);
  CHECK_THROWS(fit_character_polynomial(h1(), 2, 20, 30));
}

TEST_CASE("fitted polynomial reproduces the dimension polynomial") {
  auto fit = fit_character_polynomial(h1(), 2, 4, 8);
  REQUIRE(fit.found);
  for (int n = 0; n <= 12; ++n) {
    Partition identity(std::vector<int>(static_cast<std::size_t>(n), 1));
    CHECK(fit.polynomial(identity) == n * (n - 1) / 2);
  }
}

TEST_CASE("stable inner products") {
  auto s = stable_inner_product(h1(), q_h1());
  CHECK(s.values[2] == 1);
  CHECK(s.values[3] == 2);
  for (int n = 4; n <= 8; ++n) CHECK(s.values[static_cast<std::size_t>(n)] == 3);
  CHECK(s.onset.level == 4);
  auto one = stable_inner_product(h1(), CharacterPolynomial::constant(1));
  for (int n = 2; n <= 8; ++n) CHECK(one.values[static_cast<std::size_t>(n)] == 1);
  auto k0 = stable_inner_product(characters(build_conf_module({0, 5})), CharacterPolynomial::constant(1));
  for (const auto& v : k0.values) CHECK(v == 1);
  CHECK(k0.onset.level == 0);
}
