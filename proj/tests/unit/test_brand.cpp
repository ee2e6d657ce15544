#include <doctest.h>

#include <random>
#include <set>

#include <cycaut/brand.hpp>

using namespace cycaut;

namespace {

std::set<Permutation> images(const QGroupId& id) {
  std::set<Permutation> out;
  enumerate(id, [&](const PolyPerm& f) {
    out.insert(f.permutation());
    return true;
  });
  return out;
}

}  // namespace

TEST_CASE("polynomial permutations") {
  const PrimePowerLength len(3, 2);
  const PolyPerm f(len, {1, 1, 3});
  CHECK(f.degree() == 2);
  CHECK(f(2) == (1 + 2 + 3 * 4) % 9);
  CHECK(f.to_string() == "poly mod 3^2: 1 + 1*x + 3*x^2");
  CHECK(PolyPerm(len, {0, 1, 0}).degree() == 1);
  CHECK_THROWS(PolyPerm(len, {0, 3}));     // a_1 not a unit
  CHECK_THROWS(PolyPerm(len, {0, 1, 1}));  // a_2 not divisible by p^(m-1)
  CHECK_THROWS(PolyPerm(len, {0, 1, 3, 3}));
  CHECK(translation(len, 4)(7) == 2);
  CHECK(identity_poly(len).permutation().is_identity());
  CHECK(f_i(PrimePowerLength(5, 2), 1) == translation(PrimePowerLength(5, 2), 1));
  CHECK(f_i(PrimePowerLength(5, 2), 3)(1) == (1 + 1 + 5 * 2) % 25);
  CHECK_THROWS(f_i(PrimePowerLength(5, 2), 4));
  CHECK_THROWS(f_i(PrimePowerLength(5, 1), 2));
}

TEST_CASE("group orders match enumeration") {
  const std::tuple<u64, unsigned, unsigned> cases[] = {{3, 2, 1}, {5, 2, 1}, {5, 2, 2}, {5, 2, 3}, {7, 2, 2},
                                                       {3, 3, 1}, {5, 3, 2}, {7, 2, 4}, {3, 2, 2}, {5, 2, 4}};
  for (auto [p, m, n] : cases) {
    const PrimePowerLength len(p, m);
    for (bool restricted : {false, true}) {
      const QGroupId id(len, n, restricted);
      u64 visited = 0;
      const auto stats = enumerate(id, [&](const PolyPerm& f) {
        CHECK(membership(f, id));
        ++visited;
        return true;
      });
      const auto distinct = images(id);
      CHECK(distinct.size() == visited);
      CHECK(visited + stats.collisions == id.cardinality());
      if (n + 1 < p) {
        CHECK(stats.collisions == 0);
      }
    }
  }
  CHECK(QGroupId(PrimePowerLength(3, 2), 2).cardinality() == 162);
  CHECK(QGroupId(PrimePowerLength(3, 2), 2, true).cardinality() == 81);
  CHECK(QGroupId(PrimePowerLength(5, 2), 1).cardinality() == 500);
  CHECK(QGroupId(PrimePowerLength(5, 2), 1, true).cardinality() == 125);
}

TEST_CASE("closure, inverses and conjugation") {
  std::mt19937_64 rng(17);
  const std::tuple<u64, unsigned, unsigned> cases[] = {{5, 2, 3}, {7, 2, 4}, {5, 3, 2}, {11, 2, 9}, {3, 2, 2}};
  for (auto [p, m, n] : cases) {
    const PrimePowerLength len(p, m);
    const QGroupId q(len, n);
    const QGroupId q1(len, n, true);
    const auto id_perm = Permutation::identity(len.n());
    for (int i = 0; i < 100; ++i) {
      const auto g = element_at(q, rng() % q.cardinality());
      const auto h = element_at(q, rng() % q.cardinality());
      const auto k = element_at(q1, rng() % q1.cardinality());
      const auto gh = compose(g, h);
      CHECK(membership(gh, q));
      CHECK(gh.permutation() == compose(g.permutation(), h.permutation()));
      const auto gi = invert(g);
      CHECK(membership(gi, q));
      CHECK(compose(g.permutation(), gi.permutation()) == id_perm);
      CHECK(compose(k, invert(k)).permutation() == id_perm);
      CHECK(membership(invert(k), q1));
      const auto c = conjugate(k, g);
      CHECK(membership(c, q1));
      CHECK(c.permutation() == compose(inverse(g.permutation()), compose(k.permutation(), g.permutation())));
    }
  }
}

TEST_CASE("Q^1 on a prime is the affine group") {
  const PrimePowerLength len(7, 1);
  const QGroupId id(len, 1);
  CHECK(id.cardinality() == 42);
  std::set<Permutation> affines;
  for (u64 a = 1; a < 7; ++a) {
    for (u64 b = 0; b < 7; ++b) affines.insert(affine(7, a, b));
  }
  CHECK(images(id) == affines);
  CHECK_THROWS(QGroupId(len, 2));
  CHECK_THROWS(QGroupId(len, 1, true));
}

TEST_CASE("Q_1^1 is generated by x + 1 and x + p^(m-1) x") {
  const PrimePowerLength len(5, 2);
  const auto elems = images(QGroupId(len, 1, true));
  CHECK(elems.size() == 125);
  std::set<Permutation> closure{Permutation::identity(25)};
  const Permutation gens[] = {translation(len, 1).permutation(), PolyPerm(len, {0, 6}).permutation()};
  std::vector<Permutation> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& s : frontier) {
      for (const auto& g : gens) {
        auto t = compose(g, s);
        if (closure.insert(t).second) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  CHECK(closure == elems);
}

TEST_CASE("element_at is lexicographic in the coefficients") {
  const QGroupId id(PrimePowerLength(5, 2), 3);
  std::vector<u64> prev;
  for (u64 i = 0; i < id.cardinality(); i += 37) {
    const auto f = element_at(id, i);
    std::vector<u64> c(4, 0);
    for (std::size_t j = 0; j < 4; ++j) c[j] = f.coefficient(j);
    if (!prev.empty()) CHECK(prev < c);
    prev = c;
  }
  CHECK(element_at(id, 0) == identity_poly(id.len));
  CHECK_THROWS_AS(element_at(id, id.cardinality()), std::out_of_range);
}

TEST_CASE("rejections and caps") {
  CHECK_THROWS(QGroupId(PrimePowerLength(2, 3), 1));
  CHECK_THROWS(QGroupId(PrimePowerLength(5, 2), 5));
  CHECK_THROWS(QGroupId(PrimePowerLength(5, 2), 0));
  const QGroupId big(PrimePowerLength(7, 3), 5);
  CHECK_THROWS_AS(enumerate(big, [](const PolyPerm&) { return true; }, 1000), CapExceeded);
  u64 seen = 0;
  const auto stats = enumerate(QGroupId(PrimePowerLength(5, 2), 2), [&](const PolyPerm&) { return ++seen < 10; });
  CHECK(seen == 10);
  CHECK(stats.stopped);
}
