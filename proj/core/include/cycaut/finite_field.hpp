#pragma once

// GF(r^k) as GF(r)[x]/(f) for the lexicographically least monic irreducible f
// of degree k. Elements are encoded as integers sum(c_i * r^i) over their
// coefficient vectors; the same encoding is used when matrices are serialized.

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cycaut/arithmetic.hpp"

namespace cycaut {

/// Fields larger than this are rejected.
inline constexpr u64 kMaxFieldOrder = u64{1} << 40;

struct FieldElem {
  u64 value = 0;
  auto operator<=>(const FieldElem&) const = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  /// Deterministic: the same (r, k) always yields the same modulus and the
  /// same primitive element.
  static FieldPtr make(u64 r, unsigned k);
  /// GF(q) for a prime power q.
  static FieldPtr of_order(u64 q);

  u64 characteristic() const noexcept { return r_; }
  unsigned degree() const noexcept { return k_; }
  u64 order() const noexcept { return order_; }
  /// Monic modulus, lowest coefficient first (k + 1 entries).
  const std::vector<u64>& modulus() const noexcept { return modulus_; }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  /// Image of an integer in the prime subfield.
  FieldElem scalar(i64 c) const;
  FieldElem from_coefficients(std::span<const u64> coeffs) const;
  std::vector<u64> coefficients(FieldElem a) const;
  bool contains(FieldElem a) const noexcept { return a.value < order_; }

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, u64 e) const;

  /// First element, in increasing encoding order, of multiplicative order |F| - 1.
  FieldElem primitive_element() const noexcept { return primitive_; }
  u64 element_order(FieldElem a) const;
  /// Distinct primes dividing |F| - 1.
  const std::vector<u64>& unit_group_primes() const noexcept { return unit_primes_; }

 private:
  Field(u64 r, unsigned k);

  FieldElem mul_slow(FieldElem a, FieldElem b) const;
  FieldElem add_digits(FieldElem a, FieldElem b, bool subtract) const;

  u64 r_;
  unsigned k_;
  u64 order_;
  std::vector<u64> modulus_;
  FieldElem primitive_;
  std::vector<u64> unit_primes_;

  // Lookup tables for small fields (order <= kTableOrder).
  static constexpr u64 kTableOrder = u64{1} << 16;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> add_;  // full addition table for order <= 256
};

/// Dense polynomial over a field, lowest degree first, no trailing zeros.
struct Poly {
  std::vector<FieldElem> coeffs;

  bool is_zero() const noexcept { return coeffs.empty(); }
  std::size_t degree() const;
  bool operator==(const Poly&) const = default;
};

Poly trim(Poly p);
FieldElem evaluate(const Field& f, const Poly& p, FieldElem x);
/// Monic product of (x - root) over distinct roots.
Poly poly_product_over_roots(const Field& f, std::span<const FieldElem> roots);

/// Ring embedding GF(r^a) -> GF(r^(a e)), fixed by sending the class of x in
/// the subfield to the first root of its modulus found in the larger field.
class Embedding {
 public:
  Embedding(FieldPtr sub, FieldPtr sup);

  FieldElem operator()(FieldElem a) const;
  /// Inverse on the image; nothing for elements outside it.
  std::optional<FieldElem> preimage(FieldElem b) const;

  const FieldPtr& sub() const noexcept { return sub_; }
  const FieldPtr& sup() const noexcept { return sup_; }
  FieldElem image_of_x() const noexcept { return root_; }

 private:
  FieldPtr sub_;
  FieldPtr sup_;
  FieldElem root_;
  std::unordered_map<u64, u64> inverse_;
};

FieldElem embed(const FieldPtr& sub, const FieldPtr& sup, FieldElem a);

}  // namespace cycaut
