#include <doctest.h>

#include <set>

#include <cycaut/autgroup.hpp>

#include "support.hpp"

using namespace cycaut;

namespace {

u64 closure_size(const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation::identity(gens.front().degree())};
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& s : frontier) {
      for (const auto& g : gens) {
        auto t = compose(g, s);
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

CyclicCode code(u64 n, u64 q, std::vector<u64> seeds) {
  return CyclicCode::from_defining_set(n, Field::of_order(q), seeds);
}

u64 p_part(u64 v, u64 p) {
  u64 out = 1;
  while (v % p == 0) {
    v /= p;
    out *= p;
  }
  return out;
}

}  // namespace

TEST_CASE("Singer labelling generates PGammaL") {
  const std::tuple<unsigned, u64, u64> cases[] = {{3, 2, 168}, {2, 3, 24}, {3, 3, 5616}, {2, 4, 120}, {4, 2, 20160}};
  for (auto [d, t, expected] : cases) {
    const SingerLabeling lab(d, t);
    CHECK(lab.points() == (checked_pow(t, d) - 1) / (t - 1));
    for (u64 i = 0; i < lab.points(); ++i) CHECK(lab.index_of(lab.point(i)) == i);
    auto gens = lab.pgaml_generators();
    gens.push_back(lab.singer_cycle());
    CHECK(closure_size(gens) == expected);
    CHECK(pgaml_order(d, t) == expected);
  }
  CHECK(pgaml_order(3, 4) == 120960);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("classification examples") {
  const auto ham = classify(code(7, 2, {1}));
  CHECK(ham.tag == AutTag::Projective);
  CHECK(ham.name() == "PGammaL(3,2)");
  CHECK(ham.order == 168);
  CHECK(closure_size(ham.generators) == 168);

  const auto golay = classify(code(23, 2, {1}));
  CHECK(golay.tag == AutTag::GolayBinary);
  CHECK(golay.order == 10200960);
  CHECK(std::get<GolayEvidence>(golay.evidence).min_distance == 7);
  const auto ternary = classify(code(11, 3, {1}));
  CHECK(ternary.tag == AutTag::GolayTernary);
  CHECK(ternary.order == 660);

  const auto qr17 = classify(code(17, 2, {1}));
  CHECK(qr17.tag == AutTag::AffineSubgroup);
  CHECK(qr17.name() == "C_8 x| C_17");
  CHECK(qr17.order == 136);

  const auto rep = classify(code(7, 2, {1, 3}));
  CHECK(rep.tag == AutTag::Symmetric);
  CHECK(rep.order == 5040);

  const auto simplex = classify(code(7, 2, {0, 3}));
  CHECK(simplex.tag == AutTag::Projective);
  CHECK(simplex.order == 168);
  const auto h15 = classify(code(15, 2, {1}));
  CHECK(h15.name() == "PGammaL(4,2)");
  CHECK(h15.order == 20160);
  CHECK(closure_size(h15.generators) == 20160);

  CHECK_THROWS_AS(classify(code(6, 5, {1})), Unsupported);
}

TEST_CASE("Algorithm A screens") {
  CHECK_THROWS_WITH(algorithm_a(code(7, 2, {1})), doctest::Contains("projective screen failed"));
  CHECK_THROWS_WITH(algorithm_a(code(23, 2, {1})), doctest::Contains("Golay screen failed"));
  CHECK_THROWS_WITH(algorithm_a(code(7, 2, {0})), doctest::Contains("elementary-code screen failed"));
  CHECK_THROWS(algorithm_a(code(9, 2, {1})));
  const auto a = algorithm_a(code(17, 2, {1}));
  CHECK(std::get<AffineEvidence>(a.evidence).multipliers == std::vector<u64>{1, 2, 4, 8, 9, 13, 15, 16});
}

TEST_CASE("Algorithm A agrees with brute force on length 7") {
  for (const auto& c : testing::all_cyclic_codes(7, Field::of_order(4))) {
    const auto cl = classify(c);
    const u64 brute = testing::count_permutations(7, [&](const Permutation& s) { return is_automorphism(c, s); });
    CHECK(cl.order == brute);
  }
}

TEST_CASE("graph classification") {
  const auto c7 = classify(cycle_graph(7));
  CHECK(c7.name() == "C_2 x| C_7");
  CHECK(c7.order == 14);
  CHECK(classify(CirculantGraph(5, {1, 2, 3, 4})).order == 120);
  CHECK(classify(CirculantGraph(7, {1, 2, 4}, true)).name() == "C_3 x| C_7");
  const auto c25 = classify(cycle_graph(25));
  CHECK(c25.tag == AutTag::Imprimitive);
  CHECK_FALSE(c25.order_exact);
  CHECK(c25.order == 50);
  const auto& ev = std::get<ImprimitiveEvidence>(c25.evidence);
  CHECK(ev.blocks.size() == 5);
  REQUIRE(ev.sylow);
  CHECK(ev.sylow->s == 2);
  CHECK(ev.sylow->exact);
  CHECK_THROWS_AS(classify(cycle_graph(12)), Unsupported);
}

TEST_CASE("Sylow probe on synthetic groups") {
  const PrimePowerLength len(7, 2);
  for (unsigned k = 1; k <= 5; ++k) {
    // Aut = Q_1^k exactly.
    const QGroupId id(len, k, true);
    std::set<Permutation> group;
    enumerate(id, [&](const PolyPerm& f) {
      group.insert(f.permutation());
      return true;
    });
    const auto pr = sylow_exponent(len, [&](const Permutation& s) { return group.count(s) > 0; });
    CHECK(pr.I == k);
    CHECK(pr.s == k + 2);
    CHECK(pr.at_cap == (k == 5));
    CHECK(pr.exact == (k != 5));
  }
  const auto cyclic = sylow_exponent(len, [&](const Permutation& s) {
    for (u64 b = 0; b < 49; ++b) {
      if (s == affine(49, 1, b)) return true;
    }
    return false;
  });
  CHECK(cyclic.I == 1);
  CHECK(cyclic.s == 2);
  CHECK(cyclic.exact);
  CHECK(sylow_exponent(PrimePowerLength(7, 1), [](const Permutation&) { return true; }).s == 1);
  CHECK_THROWS(sylow_exponent(len, [](const Permutation&) { return false; }));
  CHECK_THROWS_AS(sylow_exponent(len, [&](const Permutation& s) { return s == f_i(len, 3).permutation() || s == complete_cycle(49); }),
                  std::logic_error);
}

TEST_CASE("Sylow probe against brute force on length 9") {
  std::vector<CirculantGraph> graphs;
  const std::vector<std::vector<u64>> pairs{{1, 8}, {2, 7}, {3, 6}, {4, 5}};
  for (unsigned mask = 1; mask < 15; ++mask) {
    std::vector<u64> s;
    for (unsigned i = 0; i < 4; ++i) {
      if (mask >> i & 1) s.insert(s.end(), pairs[i].begin(), pairs[i].end());
    }
    graphs.emplace_back(9, s);
  }
  for (const auto& g : graphs) {
    const auto pr = sylow_exponent(g);
    const u64 brute = testing::count_permutations(9, [&](const Permutation& s) { return is_automorphism(g, s); });
    const u64 sylow = p_part(brute, 3);
    CHECK(sylow % checked_pow(3, pr.s) == 0);
    if (pr.exact) CHECK(sylow == checked_pow(3, pr.s));
    const auto cl = classify(g);
    CHECK(brute % static_cast<u64>(cl.order) == 0);
  }
}
