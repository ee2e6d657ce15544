#include "cycaut/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace cycaut {

namespace {

// Polynomials over the prime field Z_r, lowest coefficient first.
using PrimePoly = std::vector<u64>;

void strip(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PrimePoly prime_mod(PrimePoly a, const PrimePoly& f, u64 r) {
  strip(a);
  const std::size_t df = f.size() - 1;
  const u64 lead_inv = inverse_mod(f.back(), r);
  while (a.size() >= f.size()) {
    const u64 c = mul_mod(a.back(), lead_inv, r);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) {
      a[shift + j] = (a[shift + j] + r - mul_mod(c, f[j], r)) % r;
    }
    strip(a);
  }
  return a;
}

PrimePoly prime_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f, u64 r) {
  if (a.empty() || b.empty()) return {};
  PrimePoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + mul_mod(a[i], b[j], r)) % r;
    }
  }
  return prime_mod(std::move(prod), f, r);
}

PrimePoly prime_powmod(PrimePoly base, u64 e, const PrimePoly& f, u64 r) {
  PrimePoly result{1};
  base = prime_mod(std::move(base), f, r);
  while (e > 0) {
    if (e & 1) result = prime_mulmod(result, base, f, r);
    base = prime_mulmod(base, base, f, r);
    e >>= 1;
  }
  return result;
}

PrimePoly prime_gcd(PrimePoly a, PrimePoly b, u64 r) {
  strip(a);
  strip(b);
  while (!b.empty()) {
    PrimePoly rem = prime_mod(a, b, r);
    a = std::move(b);
    b = std::move(rem);
  }
  return a;
}

// Ben-Or: f of degree k is irreducible iff gcd(f, x^(r^i) - x) = 1 for
// every i <= k/2, i.e. f has no irreducible factor of degree <= k/2.
bool is_irreducible(const PrimePoly& f, u64 r) {
  const std::size_t k = f.size() - 1;
  if (k <= 1) return k == 1;
  PrimePoly h{0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    h = prime_powmod(h, r, f, r);
    PrimePoly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + r - 1) % r;
    strip(diff);
    if (diff.empty()) return false;
    if (prime_gcd(f, diff, r).size() > 1) return false;
  }
  return true;
}

}  // namespace

FieldPtr Field::make(u64 r, unsigned k) {
  // Construction searches for a modulus and a primitive element, so fields
  // are shared per (r, k).
  static std::mutex mu;
  static std::map<std::pair<u64, unsigned>, FieldPtr> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({r, k}); it != cache.end()) return it->second;
  }
  FieldPtr f(new Field(r, k));
  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(r, k), std::move(f)).first->second;
}

FieldPtr Field::of_order(u64 q) {
  const auto pp = as_prime_power(q);
  if (!pp) throw std::invalid_argument("Field::of_order: " + std::to_string(q) + " is not a prime power");
  return make(pp->p, pp->m);
}

Field::Field(u64 r, unsigned k) : r_(r), k_(k), order_(0) {
  if (!is_prime(r)) throw std::invalid_argument("Field: characteristic " + std::to_string(r) + " is not prime");
  if (k < 1) throw std::invalid_argument("Field: degree must be >= 1");
  u128 ord = 1;
  for (unsigned i = 0; i < k; ++i) {
    ord *= r;
    if (ord > kMaxFieldOrder) {
      throw std::invalid_argument("Field: GF(" + std::to_string(r) + "^" + std::to_string(k) +
                                  ") exceeds the 2^40 size cap");
    }
  }
  order_ = static_cast<u64>(ord);

  const u64 tails = order_;  // r^k monic candidates
  for (u64 v = 0; v < tails; ++v) {
    PrimePoly f(k + 1, 0);
    u64 x = v;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = x % r;
      x /= r;
    }
    f[k] = 1;
    if (is_irreducible(f, r)) {
      modulus_ = std::move(f);
      break;
    }
  }
  if (modulus_.empty()) throw std::logic_error("Field: no irreducible polynomial found");

  unit_primes_ = distinct_prime_factors(order_ - 1);
  const u64 units = order_ - 1;
  primitive_ = one();
  for (u64 v = 1; v < order_; ++v) {
    const FieldElem a{v};
    bool generator = true;
    for (u64 ell : unit_primes_) {
      if (pow(a, units / ell) == one()) {
        generator = false;
        break;
      }
    }
    if (generator) {
      primitive_ = a;
      break;
    }
  }

  if (order_ <= kTableOrder) {
    exp_.assign(units, 0);
    log_.assign(order_, 0);
    FieldElem x = one();
    for (u64 i = 0; i < units; ++i) {
      exp_[i] = static_cast<std::uint32_t>(x.value);
      log_[x.value] = static_cast<std::uint32_t>(i);
      x = mul_slow(x, primitive_);
    }
    if (order_ <= 256) {
      add_.assign(order_ * order_, 0);
      for (u64 a = 0; a < order_; ++a) {
        for (u64 b = 0; b < order_; ++b) {
          add_[a * order_ + b] = static_cast<std::uint32_t>(add_digits({a}, {b}, false).value);
        }
      }
    }
  }
}

FieldElem Field::scalar(i64 c) const {
  const i64 rr = static_cast<i64>(r_);
  return {static_cast<u64>(((c % rr) + rr) % rr)};
}

FieldElem Field::from_coefficients(std::span<const u64> coeffs) const {
  if (coeffs.size() > k_) throw std::invalid_argument("Field::from_coefficients: too many coefficients");
  u64 v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= r_) throw std::invalid_argument("Field::from_coefficients: coefficient not reduced");
    v = v * r_ + coeffs[i];
  }
  return {v};
}

std::vector<u64> Field::coefficients(FieldElem a) const {
  std::vector<u64> out(k_, 0);
  u64 v = a.value;
  for (unsigned i = 0; i < k_; ++i) {
    out[i] = v % r_;
    v /= r_;
  }
  return out;
}

FieldElem Field::add_digits(FieldElem a, FieldElem b, bool subtract) const {
  if (r_ == 2) return {a.value ^ b.value};
  u64 x = a.value, y = b.value, out = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    const u64 dx = x % r_, dy = y % r_;
    const u64 d = subtract ? (dx + r_ - dy) % r_ : (dx + dy) % r_;
    out += d * place;
    x /= r_;
    y /= r_;
    if (i + 1 < k_) place *= r_;
  }
  return {out};
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
  if (!add_.empty()) return {add_[a.value * order_ + b.value]};
  return add_digits(a, b, false);
}

FieldElem Field::sub(FieldElem a, FieldElem b) const {
  if (r_ == 2) return {a.value ^ b.value};
  return add_digits(a, b, true);
}

FieldElem Field::neg(FieldElem a) const { return sub(zero(), a); }

FieldElem Field::mul_slow(FieldElem a, FieldElem b) const {
  if (a.value == 0 || b.value == 0) return zero();
  if (r_ == 2) {
    u128 prod = 0;
    for (unsigned i = 0; i < k_; ++i) {
      if ((b.value >> i) & 1) prod ^= static_cast<u128>(a.value) << i;
    }
    u128 mod = 0;
    for (unsigned i = 0; i <= k_; ++i) {
      if (modulus_[i]) mod |= static_cast<u128>(1) << i;
    }
    for (int i = 2 * static_cast<int>(k_) - 2; i >= static_cast<int>(k_); --i) {
      if ((prod >> i) & 1) prod ^= mod << (i - static_cast<int>(k_));
    }
    return {static_cast<u64>(prod)};
  }
  const auto da = coefficients(a);
  const auto db = coefficients(b);
  std::vector<u64> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) {
      prod[i + j] = (prod[i + j] + mul_mod(da[i], db[j], r_)) % r_;
    }
  }
  for (std::size_t i = prod.size(); i-- > k_;) {
    const u64 c = prod[i];
    if (c == 0) continue;
    for (unsigned j = 0; j <= k_; ++j) {
      const std::size_t pos = i - k_ + j;
      prod[pos] = (prod[pos] + r_ - mul_mod(c, modulus_[j], r_)) % r_;
    }
  }
  prod.resize(k_);
  return from_coefficients(prod);
}

FieldElem Field::mul(FieldElem a, FieldElem b) const {
  if (a.value == 0 || b.value == 0) return zero();
  if (!exp_.empty()) {
    const u64 units = order_ - 1;
    u64 s = static_cast<u64>(log_[a.value]) + log_[b.value];
    if (s >= units) s -= units;
    return {exp_[s]};
  }
  return mul_slow(a, b);
}

FieldElem Field::pow(FieldElem a, u64 e) const {
  FieldElem result = one();
  FieldElem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElem Field::inv(FieldElem a) const {
  if (a.value == 0) throw std::domain_error("Field::inv: zero has no inverse");
  if (!exp_.empty()) {
    const u64 units = order_ - 1;
    return {exp_[(units - log_[a.value]) % units]};
  }
  return pow(a, order_ - 2);
}

u64 Field::element_order(FieldElem a) const {
  if (a.value == 0) throw std::domain_error("Field::element_order: zero");
  u64 ord = order_ - 1;
  for (u64 ell : unit_primes_) {
    while (ord % ell == 0 && pow(a, ord / ell) == one()) ord /= ell;
  }
  return ord;
}

std::size_t Poly::degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

Poly trim(Poly p) {
  while (!p.coeffs.empty() && p.coeffs.back().value == 0) p.coeffs.pop_back();
  return p;
}

FieldElem evaluate(const Field& f, const Poly& p, FieldElem x) {
  FieldElem acc = f.zero();
  for (std::size_t i = p.coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p.coeffs[i]);
  return acc;
}

Poly poly_product_over_roots(const Field& f, std::span<const FieldElem> roots) {
  std::vector<FieldElem> sorted(roots.begin(), roots.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("poly_product_over_roots: duplicate root");
  }
  Poly p{{f.one()}};
  for (FieldElem root : roots) {
    if (!f.contains(root)) throw std::invalid_argument("poly_product_over_roots: root outside field");
    std::vector<FieldElem> next(p.coeffs.size() + 1, f.zero());
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], p.coeffs[i]);
      next[i] = f.sub(next[i], f.mul(root, p.coeffs[i]));
    }
    p.coeffs = std::move(next);
  }
  return trim(std::move(p));
}

Embedding::Embedding(FieldPtr sub, FieldPtr sup) : sub_(std::move(sub)), sup_(std::move(sup)) {
  if (sub_->characteristic() != sup_->characteristic()) {
    throw std::invalid_argument("Embedding: characteristics differ");
  }
  if (sup_->degree() % sub_->degree() != 0) {
    throw std::invalid_argument("Embedding: GF(r^" + std::to_string(sub_->degree()) +
                                ") is not a subfield of GF(r^" + std::to_string(sup_->degree()) + ")");
  }
  const Field& F = *sup_;
  Poly modulus;
  for (u64 c : sub_->modulus()) modulus.coeffs.push_back(F.scalar(static_cast<i64>(c)));

  std::optional<FieldElem> root;
  if (evaluate(F, modulus, F.zero()) == F.zero()) {
    root = F.zero();
  } else {
    const u64 step = (F.order() - 1) / (sub_->order() - 1);
    const FieldElem zeta = F.pow(F.primitive_element(), step);
    FieldElem cand = F.one();
    for (u64 j = 0; j + 1 < sub_->order(); ++j) {
      if (evaluate(F, modulus, cand) == F.zero()) {
        root = cand;
        break;
      }
      cand = F.mul(cand, zeta);
    }
  }
  if (!root) throw std::logic_error("Embedding: subfield modulus has no root");
  root_ = *root;

  if (sub_->order() <= (u64{1} << 20)) {
    for (u64 v = 0; v < sub_->order(); ++v) inverse_.emplace((*this)({v}).value, v);
  }
}

FieldElem Embedding::operator()(FieldElem a) const {
  const Field& F = *sup_;
  const auto coeffs = sub_->coefficients(a);
  FieldElem acc = F.zero();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = F.add(F.mul(acc, root_), F.scalar(static_cast<i64>(coeffs[i])));
  }
  return acc;
}

std::optional<FieldElem> Embedding::preimage(FieldElem b) const {
  if (inverse_.empty()) throw std::logic_error("Embedding::preimage: subfield too large for inversion table");
  const auto it = inverse_.find(b.value);
  if (it == inverse_.end()) return std::nullopt;
  return FieldElem{it->second};
}

FieldElem embed(const FieldPtr& sub, const FieldPtr& sup, FieldElem a) { return Embedding(sub, sup)(a); }

}  // namespace cycaut
