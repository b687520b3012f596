#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fimod/degree_calculus.hpp"

using namespace fimod;

namespace {

BoundExpr random_expr(std::mt19937& rng) {
  std::uniform_int_distribution<long> slope(-3, 6), offset(-10, 10), count(0, 4);
  std::vector<AffineTerm> terms;
  for (long i = count(rng); i > 0; --i) terms.push_back({slope(rng), offset(rng)});
  return BoundExpr(std::uniform_int_distribution<long>(-1, 3)(rng), terms);
}

void check_same_values(const BoundExpr& a, const BoundExpr& b) {
  CHECK(pointwise_differences(a, b, kVerifyRange).empty());
}

BoundExpr lam(long a, long b, long floor = -1) { return BoundExpr::affine(a, b, floor); }

}  // namespace

TEST_CASE("bound expressions evaluate as max of affine forms") {
  BoundExpr e(-1, {{16, -6}, {8, -2}});
  CHECK(e(0) == -1);
  CHECK(e(1) == 10);
  CHECK(e.to_string() == "max(-1, 16*k-6, 8*k-2)");
  CHECK(e.to_string("k", true) == "max(-1, 16k-6, 8k-2)");
  CHECK(BoundExpr::constant(0).to_string() == "0");
  CHECK(BoundExpr::affine(1, 0).to_string("q") == "max(-1, q)");
}

TEST_CASE("algebra of bounds, property test") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    auto a = random_expr(rng), b = random_expr(rng), c = random_expr(rng);
    check_same_values(a.simplified(), a);
    check_same_values(max(a, b), max(b, a));
    check_same_values(max(a, max(b, c)), max(max(a, b), c));
    check_same_values(max(a, a), a);
    for (long k = 0; k <= kVerifyRange; ++k) {
      CHECK((a + b)(k) == a(k) + b(k));
      CHECK((a + 5)(k) == a(k) + 5);
      CHECK((3 * a)(k) == 3 * a(k));
      CHECK(a.compose(2, 1)(k) == a(2 * k + 1));
      long pm = a(0);
      for (long q = 1; q <= k; ++q) pm = std::max(pm, a(q));
      CHECK(a.prefix_max()(k) == pm);
    }
  }
  CHECK_THROWS_AS(-1 * BoundExpr::constant(0), std::invalid_argument);
}

TEST_CASE("coefficients rule") {
  auto out = coefficients_rule({lam(2, 0), lam(8, -6)});
  CHECK(out.delta == lam(2, 0));
  check_same_values(out.hmax, BoundExpr(-1, {{4, -2}, {8, -6}}));
  CHECK(out.hmax(0) == -1);
  CHECK(out.hmax(1) == 2);
  for (long q = 1; q <= 50; ++q) CHECK(out.hmax(q) == 8 * q - 6);
  auto zero = coefficients_rule({BoundExpr::constant(0), BoundExpr::constant(-1)});
  CHECK(zero.hmax(0) == -1);
  auto third = coefficients_rule({lam(1, 0), lam(4, -4)});
  for (long q = 0; q <= 50; ++q) CHECK(third.hmax(q) == std::max({-1L, 2 * q - 2, 4 * q - 4}));
}

TEST_CASE("kernel/cokernel and filtration rules") {
  auto c = [](long x) { return BoundExpr::constant(x); };
  auto kc = kernel_cokernel_rule({c(2), c(2)}, {c(3), c(0)});
  CHECK(kc.kernel.delta(0) == 2);
  CHECK(kc.kernel.hmax(0) == 2);
  CHECK(kc.cokernel.delta(0) == 3);
  CHECK(kc.cokernel.hmax(0) == 2);
  auto triv = kernel_cokernel_rule({c(0), c(-1)}, {c(0), c(-1)});
  CHECK(triv.kernel.hmax(0) == -1);
  CHECK(kernel_cokernel_rule({c(1), c(0)}, {c(1), c(4)}).cokernel.hmax(0) == 4);

  auto f = filtration_rule({{c(1), c(2)}, {c(3), c(0)}});
  CHECK(f.delta(0) == 3);
  CHECK(f.hmax(0) == 2);
  CHECK(filtration_rule({{c(0), c(-1)}, {c(0), c(-1)}}).hmax(0) == -1);
  CHECK_THROWS_AS(filtration_rule({}), std::invalid_argument);
}

TEST_CASE("spectral rule, exact evaluation") {
  SpectralInput mcg{2, lam(2, 0), lam(8, -6)};
  auto v = spectral_rule(mcg, 1);
  CHECK(v.delta == 2);
  CHECK(v.hmax == 10);
  // k = 0: eta only up to l = 0 and an empty range of D terms.
  SpectralInput diff{2, lam(1, 0), lam(4, -4)};
  auto z = spectral_rule(diff, 0);
  CHECK(z.delta == 0);
  CHECK(z.hmax == -1);
  CHECK(spectral_rule({2, lam(3, 1), BoundExpr::constant(5)}, 0).delta == 1);
  CHECK_THROWS(spectral_rule(mcg, -1));
  CHECK_THROWS(spectral_rule({1, lam(1, 0), lam(1, 0)}, 0));
}

TEST_CASE("symbolic spectral rule matches the finite maxima") {
  for (long lambda = 0; lambda <= 1; ++lambda) {
    for (long mu = 1; mu <= 2; ++mu) {
      auto conf = config_space_rule(mu == 2 ? 2 : 3, lambda == 1);
      auto input = spectral_input_from_columns(coefficients_rule(conf.profile));
      CHECK(spectral_discrepancies(input, kVerifyRange).empty());
    }
  }
  // Pages beyond 2 leave the D-range empty for small k, where the symbolic
  // form overshoots; those k are reported.
  SpectralInput odd{4, BoundExpr::constant(3), BoundExpr::constant(-1)};
  auto bad = spectral_discrepancies(odd, 5);
  CHECK(bad == std::vector<long>{0, 1});
  auto sym = spectral_rule_symbolic(odd);
  for (long k = 0; k <= 20; ++k) CHECK(sym.hmax(k) >= spectral_rule(odd, k).hmax);
}

TEST_CASE("presentation and stable range rules") {
  for (long l = 0; l <= 1; ++l) {
    auto p = presentation_rule({lam(2, 0), lam(16, -4 * l - 2)});
    check_same_values(p.t0, lam(18, -4 * l - 1, 0));
    check_same_values(p.t1, lam(34, -8 * l - 2, 0));
    auto d = presentation_rule({lam(1, 0), lam(8, -2 * l - 2)});
    check_same_values(d.t0, lam(9, -2 * l - 1, 0));
    check_same_values(d.t1, lam(17, -4 * l - 2, 0));
    check_same_values(stable_range_rule({lam(2, 0), lam(16, -4 * l - 2)}, false), lam(20, -4 * l - 1, 0));
  }
  auto z = presentation_rule({BoundExpr::constant(0), BoundExpr::constant(-1)});
  CHECK(z.t0(0) == 0);
  CHECK(z.t1(0) == 0);
  check_same_values(stable_range_rule({lam(2, 0), BoundExpr::constant(-1)}, true), lam(4, 0));
  CHECK(stable_range_rule({BoundExpr::constant(0), BoundExpr::constant(-1)}, false)(0) == 0);
}

TEST_CASE("presentation bounds dominate") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    BoundExpr d = max(random_expr(rng), BoundExpr::constant(0));
    BoundExpr h = random_expr(rng);
    auto p = presentation_rule({d, h});
    for (long k = 0; k <= 50; ++k) {
      CHECK(p.t1(k) >= p.t0(k));
      CHECK(p.t0(k) >= d(k));
    }
  }
}

TEST_CASE("configuration space rule") {
  // mu = 2, lambda = 1, q = 1: 9*2 - 4*2 - 2 = 8.
  CHECK(config_space_rule(2, true, 1) == ConfigSpaceValues{2, 2, 5, 8});
  CHECK(config_space_rule(3, true, 2) == ConfigSpaceValues{2, 4, 7, 12});
  for (int d = 2; d <= 5; ++d) {
    CHECK(config_space_rule(d, false, 0) == ConfigSpaceValues{0, -1, 0, 0});
    CHECK(config_space_rule(d, true, 0) == ConfigSpaceValues{0, -1, 0, 0});
  }
  CHECK_THROWS_AS(config_space_rule(1, true), std::invalid_argument);
  CHECK_THROWS_AS(config_space_rule(2, true, -1), std::invalid_argument);
}

TEST_CASE("preset pipelines") {
  auto t = preset_pipeline(Preset::Mcg, 1, 1);
  CHECK(std::vector<long>{t.delta.value, t.hmax.value, t.t0.value, t.t1.value, t.stableRange.value} ==
        std::vector<long>{2, 10, 13, 24, 15});
  t = preset_pipeline(Preset::Mcg, 2, 0);
  CHECK(std::vector<long>{t.delta.value, t.hmax.value, t.t0.value, t.t1.value, t.stableRange.value} ==
        std::vector<long>{4, 30, 35, 66, 39});
  t = preset_pipeline(Preset::Diffeo, 1, 1);
  CHECK(std::vector<long>{t.delta.value, t.hmax.value, t.t0.value, t.t1.value} == std::vector<long>{1, 4, 6, 11});
  CHECK_FALSE(t.stableRange.published.has_value());
  t = preset_pipeline(Preset::Diffeo, 0, 0);
  CHECK(std::vector<long>{t.delta.value, t.hmax.value, t.t0.value, t.t1.value} == std::vector<long>{0, -1, 0, 0});
  t = preset_pipeline(Preset::McgBoundary, 3, 1);
  CHECK(std::vector<long>{t.delta.value, t.hmax.value, t.t0.value, t.t1.value, t.stableRange.value} ==
        std::vector<long>{6, -1, 6, 6, 12});
  t = preset_pipeline(Preset::Hyperelliptic, 2, 0);
  CHECK(t.lambda == 1);
  REQUIRE(t.rationalStableRange);
  CHECK(t.rationalStableRange->value == 12);

  for (auto p : {Preset::Mcg, Preset::McgBoundary, Preset::Diffeo, Preset::Hyperelliptic}) {
    for (int l = 0; l <= 1; ++l) {
      auto table = preset_pipeline(p, 4, l);
      for (const auto* line : {&table.delta, &table.hmax, &table.t0, &table.t1, &table.stableRange}) {
        CHECK(line->matchesPublished);
      }
      CHECK(table.trace.size() >= 5);
    }
  }
  CHECK_THROWS_AS(preset_pipeline(Preset::Mcg, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(preset_pipeline(Preset::Mcg, 1, 2), std::invalid_argument);
}

TEST_CASE("preset names") {
  for (auto p : {Preset::Mcg, Preset::McgBoundary, Preset::Diffeo, Preset::Hyperelliptic}) {
    CHECK(parse_preset(to_string(p)) == p);
  }
  CHECK_THROWS_AS(parse_preset("torelli"), UnknownPreset);
}
