#include <doctest.h>

#include <set>

#include <cycaut/permutation.hpp>

#include "support.hpp"

using namespace cycaut;

TEST_CASE("basic permutations") {
  const auto t = complete_cycle(5);
  CHECK(t.to_string() == "[1,2,3,4,0]");
  CHECK(t.cycle_notation() == "(0 1 2 3 4)");
  CHECK(order(t) == 5);
  CHECK(Permutation::identity(3).cycle_notation() == "()");
  CHECK(multiplier(7, 3)(5) == 1);
  CHECK(affine(7, 2, 3)(4) == 4);
  CHECK(transposition(4, 1, 3).cycle_notation() == "(1 3)");
  CHECK_THROWS(Permutation(std::vector<std::uint32_t>{0, 0, 1}));
  CHECK_THROWS(multiplier(6, 2));
}

TEST_CASE("composition, inverse and powers") {
  const auto s = affine(11, 3, 4);
  const auto r = multiplier(11, 5);
  for (u64 i = 0; i < 11; ++i) CHECK(compose(s, r)(i) == s(r(i)));
  CHECK(compose(s, inverse(s)).is_identity());
  CHECK(power(s, order(s)).is_identity());
  CHECK(power(s, -1) == inverse(s));
  CHECK(power(complete_cycle(11), 3) == affine(11, 1, 3));
  CHECK(orbits(multiplier(7, 2)).size() == 3);
}

TEST_CASE("parse round trip") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::uint32_t> img(1 + rng() % 20);
    std::iota(img.begin(), img.end(), 0u);
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation s(img);
    CHECK(Permutation::parse(s.to_string()) == s);
  }
  CHECK_THROWS(Permutation::parse("[0,2"));
  CHECK_THROWS(Permutation::parse("[0,0]"));
}

TEST_CASE("normalizer of the 5-cycle is AGL(1,5)") {
  const auto t = complete_cycle(5);
  std::set<Permutation> affines;
  for (u64 a = 1; a < 5; ++a) {
    for (u64 b = 0; b < 5; ++b) affines.insert(affine(5, a, b));
  }
  std::vector<Permutation> found;
  testing::find_permutation(5, [&](const Permutation& s) {
    if (conjugate_into_cycle_power(s, t)) found.push_back(s);
    return false;
  });
  CHECK(found.size() == 20);
  for (const auto& s : found) CHECK(affines.count(s) == 1);
  CHECK(conjugate_into_cycle_power(multiplier(5, 2), t) == 2);
  CHECK_FALSE(conjugate_into_cycle_power(transposition(5, 0, 1), t));
}

TEST_CASE("affine maps form a group") {
  for (u64 n : {7u, 9u, 12u}) {
    std::vector<AffineMap> all;
    for (u64 a = 1; a < n; ++a) {
      if (gcd(a, n) != 1) continue;
      for (u64 b = 0; b < n; ++b) all.emplace_back(n, a, b);
    }
    for (const auto& f : all) {
      CHECK(compose(f, inverse(f)) == AffineMap(n, 1, 0));
      for (const auto& g : all) {
        const auto fg = compose(f, g);
        CHECK(fg.permutation() == compose(f.permutation(), g.permutation()));
      }
    }
  }
  CHECK(AffineMap(7, 2, 0).is_multiplier());
  CHECK(AffineMap(7, 2, 0).to_string() == "multiplier a=2");
  CHECK_THROWS(AffineMap(9, 3, 1));
}
