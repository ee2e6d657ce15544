#include <doctest.h>

#include <random>

#include <cycaut/finite_field.hpp>

using namespace cycaut;

namespace {

using P = std::vector<u64>;

// Remainder of a by monic b over GF(r).
P poly_rem(P a, const P& b, u64 r) {
  while (a.size() >= b.size()) {
    const u64 c = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + (r - c) * b[i]) % r;
    a.pop_back();
  }
  return a;
}

bool is_zero(const P& a) {
  return std::all_of(a.begin(), a.end(), [](u64 c) { return c == 0; });
}

P monic_from(u64 code, unsigned deg, u64 r) {
  P f(deg + 1, 0);
  for (unsigned i = 0; i < deg; ++i) {
    f[i] = code % r;
    code /= r;
  }
  f[deg] = 1;
  return f;
}

// Irreducible iff no monic divisor of degree 1..k/2.
bool brute_irreducible(const P& f, u64 r) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= k / 2; ++d) {
    u64 count = 1;
    for (unsigned i = 0; i < d; ++i) count *= r;
    for (u64 c = 0; c < count; ++c) {
      if (is_zero(poly_rem(f, monic_from(c, d, r), r))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("prime fields are integers mod p") {
  const auto f = Field::make(7, 1);
  CHECK(f->order() == 7);
  for (u64 a = 0; a < 7; ++a) {
    for (u64 b = 0; b < 7; ++b) {
      CHECK(f->add({a}, {b}).value == (a + b) % 7);
      CHECK(f->mul({a}, {b}).value == a * b % 7);
      CHECK(f->sub({a}, {b}).value == (a + 7 - b) % 7);
    }
    if (a) CHECK(f->mul({a}, f->inv({a})) == f->one());
  }
  CHECK(f->primitive_element().value == 3);
  CHECK(f->scalar(-1).value == 6);
}

TEST_CASE("modulus is the least monic irreducible") {
  const std::pair<u64, unsigned> cases[] = {{2, 2}, {2, 3}, {2, 4}, {2, 6}, {3, 2}, {3, 3}, {5, 2}, {7, 2}};
  for (auto [r, k] : cases) {
    const auto f = Field::make(r, k);
    const P modulus = f->modulus();
    CHECK(brute_irreducible(modulus, r));
    u64 code = 0;
    for (unsigned i = k; i-- > 0;) code = code * r + modulus[i];
    for (u64 c = 0; c < code; ++c) CHECK_FALSE(brute_irreducible(monic_from(c, k, r), r));
  }
  CHECK(Field::make(2, 3)->modulus() == P{1, 1, 0, 1});
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(5);
  const std::pair<u64, unsigned> cases[] = {{2, 2}, {2, 3}, {3, 2}, {2, 10}, {3, 5}, {2, 20}, {3, 20}, {5, 3}};
  for (auto [r, k] : cases) {
    const auto f = Field::make(r, k);
    std::uniform_int_distribution<u64> pick(0, f->order() - 1);
    for (int i = 0; i < 200; ++i) {
      const FieldElem a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
      CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->add(a, f->neg(a)) == f->zero());
      CHECK(f->add(f->sub(a, b), b) == a);
      if (a.value) CHECK(f->mul(a, f->inv(a)) == f->one());
      CHECK(f->pow(a, f->order()) == a);
    }
  }
}

TEST_CASE("primitive element is the first of full order") {
  for (auto [r, k] : {std::pair<u64, unsigned>{2, 4}, {3, 3}, {2, 8}, {5, 2}}) {
    const auto f = Field::make(r, k);
    const auto g = f->primitive_element();
    CHECK(f->element_order(g) == f->order() - 1);
    for (u64 v = 1; v < g.value; ++v) CHECK(f->element_order({v}) < f->order() - 1);
  }
}

TEST_CASE("fields are shared and deterministic") {
  CHECK(Field::make(2, 5) == Field::make(2, 5));
  CHECK(Field::of_order(9)->degree() == 2);
  CHECK_THROWS(Field::of_order(6));
  CHECK_THROWS(Field::make(4, 1));
  CHECK_THROWS(Field::make(2, 41));
}

TEST_CASE("coefficient encoding round trip") {
  const auto f = Field::make(3, 4);
  for (u64 v = 0; v < f->order(); v += 7) {
    const auto c = f->coefficients({v});
    CHECK(c.size() == 4);
    CHECK(f->from_coefficients(c).value == v);
  }
}

TEST_CASE("embeddings are ring homomorphisms") {
  std::mt19937_64 rng(9);
  const std::pair<std::pair<u64, unsigned>, unsigned> cases[] = {
      {{2, 2}, 4}, {{2, 2}, 6}, {{3, 2}, 4}, {{2, 1}, 3}, {{2, 3}, 12}, {{5, 1}, 5}};
  for (auto [sub_spec, sup_k] : cases) {
    const auto sub = Field::make(sub_spec.first, sub_spec.second);
    const auto sup = Field::make(sub_spec.first, sup_k);
    const Embedding emb(sub, sup);
    CHECK(emb(sub->one()) == sup->one());
    CHECK(emb(sub->zero()) == sup->zero());
    for (int i = 0; i < 100; ++i) {
      const FieldElem a{rng() % sub->order()}, b{rng() % sub->order()};
      CHECK(emb(sub->add(a, b)) == sup->add(emb(a), emb(b)));
      CHECK(emb(sub->mul(a, b)) == sup->mul(emb(a), emb(b)));
      CHECK(emb.preimage(emb(a)) == a);
    }
  }
  const Embedding e(Field::make(2, 2), Field::make(2, 4));
  u64 outside = 0;
  for (u64 v = 0; v < 16; ++v) outside += !e.preimage({v}).has_value();
  CHECK(outside == 12);
  CHECK_THROWS(Embedding(Field::make(2, 2), Field::make(2, 3)));
  CHECK_THROWS(Embedding(Field::make(2, 2), Field::make(3, 2)));
}

TEST_CASE("product over roots") {
  const auto f = Field::make(2, 3);
  const auto g = f->primitive_element();
  std::vector<FieldElem> roots{g, f->pow(g, 2), f->pow(g, 4)};
  const Poly p = poly_product_over_roots(*f, roots);
  CHECK(p.degree() == 3);
  CHECK(p.coeffs.back() == f->one());
  for (auto r : roots) CHECK(evaluate(*f, p, r) == f->zero());
  CHECK(evaluate(*f, p, f->one()) != f->zero());
  roots.push_back(g);
  CHECK_THROWS(poly_product_over_roots(*f, roots));
}
