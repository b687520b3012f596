#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fimod/symmetric.hpp"
#include "oracles.hpp"

using namespace fimod;

TEST_CASE("partitions enumerate in reverse lexicographic order") {
  auto p4 = enumerate_partitions(4);
  std::vector<std::string> names;
  for (const auto& p : p4) names.push_back(p.to_string());
  CHECK(names == std::vector<std::string>{"(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"});
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(8).size() == 22);
  CHECK(partition_index(Partition({2, 2})) == 2);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("padding and tails") {
  CHECK(Partition({4, 2, 1}).tail() == Partition({2, 1}));
  CHECK(Partition::pad(Partition({2}), 4) == Partition({2, 2}));
  CHECK_FALSE(Partition::pad(Partition({2}), 3).has_value());
  CHECK(Partition::pad(Partition(), 0) == Partition());
  CHECK(Partition::pad(Partition(), 3) == Partition({3}));
}

TEST_CASE("class sizes sum to n!") {
  for (int n = 0; n <= 8; ++n) {
    Integer total = 0;
    for (const auto& c : cycle_types(n)) total += c.classSize;
    CHECK(total == factorial(n));
  }
  CHECK(class_size(Partition({2, 2})) == 3);
}

TEST_CASE("Murnaghan-Nakayama agrees with the Frobenius formula") {
  for (int n = 0; n <= 7; ++n) {
    auto table = character_table(n);
    for (std::size_t i = 0; i < table.shapes.size(); ++i) {
      auto mus = enumerate_partitions(n);
      for (std::size_t j = 0; j < mus.size(); ++j) {
        CHECK(table.characters[i].at_index(static_cast<int>(j)) ==
              oracle::frobenius_character(table.shapes[i].parts(), mus[j].parts()));
      }
      CHECK(table.characters[i].degree() == hook_length_dimension(table.shapes[i]));
    }
  }
}

TEST_CASE("S_3 character table") {
  auto t = character_table(3);
  // classes (3), (2,1), (1,1,1)
  CHECK(t.characters[0].values() == std::vector<Rational>{1, 1, 1});
  CHECK(t.characters[1].values() == std::vector<Rational>{-1, 0, 2});
  CHECK(t.characters[2].values() == std::vector<Rational>{1, -1, 1});
}

TEST_CASE("irreducible characters are orthonormal") {
  for (int n = 1; n <= 8; ++n) {
    auto t = character_table(n);
    for (std::size_t i = 0; i < t.characters.size(); ++i) {
      for (std::size_t j = 0; j < t.characters.size(); ++j) {
        CHECK(inner_product(t.characters[i], t.characters[j]) == (i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("Frobenius reciprocity for induction from S_{n-1}") {
  for (int n = 1; n <= 7; ++n) {
    auto big = character_table(n);
    auto small = character_table(n - 1);
    for (const auto& chi : big.characters) {
      for (const auto& psi : small.characters) {
        CHECK(inner_product(induce_class_function(psi), chi) == inner_product(psi, restrict_class_function(chi)));
      }
    }
  }
}

TEST_CASE("induction matches brute-force induced characters") {
  // Ind of the trivial character of S_{n-1} is the permutation character on points.
  for (int n = 1; n <= 6; ++n) {
    auto ind = induce_class_function(ClassFunction::constant(n - 1, 1));
    for (const auto& p : oracle::all_permutations(n)) {
      long fixed = 0;
      for (int i = 0; i < n; ++i) fixed += p[static_cast<std::size_t>(i)] == i;
      CHECK(ind[Partition(oracle::cycle_type(p))] == fixed);
    }
  }
}

TEST_CASE("cap is enforced") {
  CHECK_THROWS_AS(character_table(10), CapExceeded);
  CHECK_NOTHROW(character_table(10, 10));
  CHECK_THROWS_AS(irreducible_character(Partition({5, 5}), 9), CapExceeded);
}

TEST_CASE("permutations and reduced words") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& images : oracle::all_permutations(n)) {
      Permutation p(images);
      Permutation rebuilt = Permutation::identity(n);
      for (int i : p.reduced_word()) rebuilt = rebuilt * Permutation::adjacent(n, i);
      CHECK(rebuilt == p);
      long inversions = 0;
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) inversions += images[static_cast<std::size_t>(a)] > images[static_cast<std::size_t>(b)];
      }
      CHECK(static_cast<long>(p.reduced_word().size()) == inversions);
      CHECK(p * p.inverse() == Permutation::identity(n));
      CHECK(p.cycle_type() == Partition(oracle::cycle_type(images)));
    }
  }
  CHECK(Permutation::cycle_representative(Partition({3, 2})).cycle_type() == Partition({3, 2}));
}
