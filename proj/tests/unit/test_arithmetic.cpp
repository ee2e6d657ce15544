#include <doctest.h>

#include <random>
#include <set>

#include <cycaut/arithmetic.hpp>

using namespace cycaut;

namespace {

u64 brute_order(u64 q, u64 n) {
  u64 x = q % n;
  for (u64 r = 1;; ++r) {
    if (x == 1) return r;
    x = x * (q % n) % n;
  }
}

u64 brute_phi(u64 n) {
  u64 c = 0;
  for (u64 a = 1; a <= n; ++a) c += gcd(a, n) == 1;
  return c;
}

}  // namespace

TEST_CASE("gcd, lcm and modular helpers") {
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(0, 5) == 5);
  CHECK(lcm(4, 6) == 12);
  CHECK(pow_mod(3, 4, 7) == 4);
  CHECK(inverse_mod(2, 25) == 13);
  CHECK(inverse_mod(2, 9) == 5);
  CHECK_THROWS(inverse_mod(3, 9));
  CHECK(checked_pow(3, 4) == 81);
  CHECK_THROWS_AS(checked_pow(2, 64), std::overflow_error);
  CHECK(mul_mod(u64{1} << 62, 7, (u64{1} << 62) + 1) == ((u64{1} << 62) + 1) - 7);
}

TEST_CASE("primes and factorizations agree with trial division") {
  for (u64 n = 2; n < 2000; ++n) {
    bool prime = true;
    for (u64 d = 2; d * d <= n; ++d) prime = prime && n % d != 0;
    CHECK(is_prime(n) == prime);
    CHECK(euler_phi(n) == brute_phi(n));
    u64 rest = n;
    for (u64 p : distinct_prime_factors(n)) {
      CHECK(is_prime(p));
      while (rest % p == 0) rest /= p;
    }
    CHECK(rest == 1);
  }
  CHECK(is_prime(1'000'000'007));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("prime powers") {
  const auto pp = as_prime_power(243);
  REQUIRE(pp);
  CHECK(pp->p == 3);
  CHECK(pp->m == 5);
  CHECK_FALSE(as_prime_power(12));
  CHECK_FALSE(is_prime_power(1));
  CHECK(is_prime_power(2));
  const auto len = PrimePowerLength::of(25);
  REQUIRE(len);
  CHECK(len->p() == 5);
  CHECK(len->m() == 2);
  CHECK(len->block_stride() == 5);
  CHECK_FALSE(PrimePowerLength::of(15));
  CHECK_THROWS(PrimePowerLength(4, 2));
}

TEST_CASE("multiplicative order matches repeated multiplication") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const u64 n = 2 + rng() % 5000;
    const u64 q = 1 + rng() % 10000;
    if (gcd(q, n) != 1) continue;
    CHECK(multiplicative_order(q, n) == brute_order(q, n));
  }
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(2, 17) == 8);
  CHECK(multiplicative_order(3, 13) == 3);
  CHECK_THROWS(multiplicative_order(3, 9));
  CHECK_THROWS(multiplicative_order(2, 1));
}

TEST_CASE("z-invariant") {
  CHECK(z_invariant(2, 7) == 1);
  CHECK(z_invariant(3, 11) == 2);  // 3^5 - 1 = 2 * 11^2
  CHECK(z_invariant(2, 1093) == 2);
  CHECK(z_invariant(10, 3) == 2);  // 10 - 1 = 9
  CHECK_THROWS(z_invariant(9, 3));
  CHECK_THROWS(z_invariant(2, 9));
}

TEST_CASE("order lifting when z = 1") {
  std::mt19937_64 rng(11);
  const u64 primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  int checked = 0;
  while (checked < 300) {
    const u64 p = primes[rng() % 10];
    const u64 q = 2 + rng() % 500;
    if (q % p == 0 || z_invariant(q, p) != 1) continue;
    const unsigned m = 1 + rng() % 3;
    const PrimePowerLength len(p, m);
    const u64 expected = len.block_stride() * multiplicative_order(q, p);
    CHECK(order_mod_prime_power(q, len) == expected);
    CHECK(brute_order(q, len.n()) == expected);
    ++checked;
  }
}

TEST_CASE("cyclotomic cosets") {
  const auto part = cyclotomic_cosets(7, 2);
  REQUIRE(part.cosets.size() == 3);
  CHECK(part.cosets[0] == std::vector<u64>{0});
  CHECK(part.cosets[1] == std::vector<u64>{1, 2, 4});
  CHECK(part.cosets[2] == std::vector<u64>{3, 5, 6});
  CHECK(part.coset_of(5) == std::vector<u64>{3, 5, 6});
  CHECK(cyclotomic_coset(1, 17, 2) == std::vector<u64>{1, 2, 4, 8, 9, 13, 15, 16});
  CHECK(cyclotomic_coset(1, 25, 3).size() == 20);
  const std::vector<u64> seeds{1, 2};
  CHECK(coset_closure(seeds, 23, 2).size() == 11);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const u64 n = 2 + rng() % 300;
    const u64 q = 2 + rng() % 50;
    if (gcd(q, n) != 1) continue;
    const auto cp = cyclotomic_cosets(n, q);
    std::set<u64> seen;
    for (const auto& c : cp.cosets) {
      for (u64 x : c) {
        CHECK(seen.insert(x).second);
        CHECK(std::binary_search(c.begin(), c.end(), x * q % n));
      }
    }
    CHECK(seen.size() == n);
  }
}

TEST_CASE("projective length decompositions") {
  using D = ProjectiveDecomposition;
  CHECK(projective_length_decompositions(7, 10) == std::vector<D>{{2, 3}});
  CHECK(projective_length_decompositions(13, 10) == std::vector<D>{{3, 3}});
  CHECK(projective_length_decompositions(21, 10) == std::vector<D>{{4, 3}});
  CHECK(projective_length_decompositions(31, 10) == std::vector<D>{{5, 3}, {2, 5}});
  CHECK(projective_length_decompositions(43, 10).empty());  // t = 6 is not a prime power
  CHECK(projective_length_decompositions(17, 10) == std::vector<D>{{16, 2}});
}
