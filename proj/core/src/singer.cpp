#include <algorithm>
#include <stdexcept>
#include <string>

#include "cycaut/autgroup.hpp"

namespace cycaut {

namespace {

// Lookup tables are sized by t^d.
constexpr u64 kMaxSingerField = u64{1} << 22;

}  // namespace

SingerLabeling::SingerLabeling(unsigned d, u64 t) : d_(d), t_(t) {
  const auto pp = as_prime_power(t);
  if (!pp) throw std::invalid_argument("SingerLabeling: t = " + std::to_string(t) + " is not a prime power");
  if (d < 2) throw std::invalid_argument("SingerLabeling: d must be >= 2");
  u128 big_order = 1;
  for (unsigned i = 0; i < d; ++i) {
    big_order *= t;
    if (big_order > kMaxSingerField) {
      throw CapExceeded("SingerLabeling: GF(" + std::to_string(t) + "^" + std::to_string(d) + ") is too large", 0);
    }
  }
  const u64 Q = static_cast<u64>(big_order);
  n_ = (Q - 1) / (t - 1);
  big_ = Field::make(pp->p, pp->m * d);
  const Field& K = *big_;
  const FieldElem gamma = K.primitive_element();

  // GF(t) inside GF(t^d): 0 and the powers of omega = gamma^n.
  const FieldElem omega = K.pow(gamma, n_);
  sub_.assign(t, K.zero());
  sub_[1] = K.one();
  for (u64 j = 2; j < t; ++j) sub_[j] = K.mul(sub_[j - 1], omega);
  sub_index_.assign(Q, static_cast<std::uint32_t>(t));
  for (u64 j = 0; j < t; ++j) sub_index_[sub_[j].value] = static_cast<std::uint32_t>(j);

  std::vector<FieldElem> basis(d);
  basis[0] = K.one();
  for (unsigned j = 1; j < d; ++j) basis[j] = K.mul(basis[j - 1], gamma);
  std::vector<std::uint32_t> elem_to_packed(Q);
  for (u64 packed = 0; packed < Q; ++packed) {
    FieldElem x = K.zero();
    u64 rest = packed;
    for (unsigned j = 0; j < d; ++j) {
      x = K.add(x, K.mul(sub_[rest % t], basis[j]));
      rest /= t;
    }
    elem_to_packed[x.value] = static_cast<std::uint32_t>(packed);
  }

  coords_.assign(n_, 0);
  index_.assign(Q, static_cast<std::uint32_t>(n_));
  FieldElem x = K.one();
  for (u64 k = 0; k + 1 < Q; ++k) {
    const auto packed = elem_to_packed[x.value];
    if (k < n_) coords_[k] = packed;
    index_[packed] = static_cast<std::uint32_t>(k % n_);
    x = K.mul(x, gamma);
  }
  for (u64 i = 0; i < n_; ++i) {
    if (index_[coords_[i]] != i) throw std::logic_error("SingerLabeling: labelling is not a bijection");
  }
}

std::vector<FieldElem> SingerLabeling::unpack(u64 packed) const {
  std::vector<FieldElem> v(d_);
  for (unsigned j = 0; j < d_; ++j) {
    v[j] = sub_[packed % t_];
    packed /= t_;
  }
  return v;
}

u64 SingerLabeling::pack(const std::vector<FieldElem>& v) const {
  if (v.size() != d_) throw std::invalid_argument("SingerLabeling: dimension mismatch");
  u64 packed = 0;
  for (unsigned j = d_; j-- > 0;) {
    if (!big_->contains(v[j]) || sub_index_[v[j].value] == t_) {
      throw std::invalid_argument("SingerLabeling: coordinate outside GF(t)");
    }
    packed = packed * t_ + sub_index_[v[j].value];
  }
  return packed;
}

std::vector<FieldElem> SingerLabeling::point(u64 i) const {
  if (i >= n_) throw std::out_of_range("SingerLabeling::point: index out of range");
  auto v = unpack(coords_[i]);
  const auto lead = std::find_if(v.begin(), v.end(), [](FieldElem e) { return e.value != 0; });
  const FieldElem s = big_->inv(*lead);
  for (auto& e : v) e = big_->mul(e, s);
  return v;
}

u64 SingerLabeling::index_of(const std::vector<FieldElem>& v) const {
  const u64 packed = pack(v);
  if (packed == 0) throw std::invalid_argument("SingerLabeling::index_of: zero vector");
  return index_[packed];
}

Permutation SingerLabeling::from_map(
    const std::function<std::vector<FieldElem>(const std::vector<FieldElem>&)>& m) const {
  std::vector<std::uint32_t> img(n_);
  for (u64 i = 0; i < n_; ++i) {
    const u64 packed = pack(m(unpack(coords_[i])));
    if (packed == 0) throw std::logic_error("SingerLabeling: singular map");
    img[i] = index_[packed];
  }
  return Permutation(std::move(img));
}

std::vector<Permutation> SingerLabeling::pgaml_generators() const {
  const Field& K = *big_;
  std::vector<Permutation> gens;
  if (t_ > 2) {
    const FieldElem omega = sub_[2];
    gens.push_back(from_map([&](std::vector<FieldElem> v) {
      v[0] = K.mul(v[0], omega);
      return v;
    }));
  }
  gens.push_back(from_map([&](std::vector<FieldElem> v) {
    v[0] = K.add(v[0], v[1]);
    return v;
  }));
  gens.push_back(from_map([](std::vector<FieldElem> v) {
    std::swap(v[0], v[1]);
    return v;
  }));
  if (d_ > 2) {
    gens.push_back(from_map([](std::vector<FieldElem> v) {
      std::rotate(v.begin(), v.begin() + 1, v.end());
      return v;
    }));
  }
  // Frobenius x -> x^r sends gamma^i to gamma^(r i).
  const u64 r = K.characteristic();
  if (t_ != r) gens.push_back(multiplier(n_, r % n_));
  return gens;
}

BigInt pgaml_order(unsigned d, u64 t) {
  const auto pp = as_prime_power(t);
  if (!pp || d < 2) throw std::invalid_argument("pgaml_order: invalid parameters");
  BigInt order = pp->m;
  BigInt tt = t;
  order *= boost::multiprecision::pow(tt, d * (d - 1) / 2);
  for (unsigned i = 2; i <= d; ++i) order *= boost::multiprecision::pow(tt, i) - 1;
  return order;
}

}  // namespace cycaut
