#pragma once

// Polynomial permutations of Z_{p^m} (p odd) of the form
//
//   f(x) = a_0 + a_1 x + a_2 x^2 + ... + a_k x^k  mod p^m
//
// with a_1 a unit, p^(m-1) | a_i for i >= 2 and k <= p - 1, together with the
// groups Q^n (degree <= n) and Q_1^n (additionally a_1 = 1 mod p^(m-1)).

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cycaut/arithmetic.hpp"
#include "cycaut/permutation.hpp"

namespace cycaut {

/// Enumerations refuse to run past this many elements unless told otherwise.
inline constexpr u64 kDefaultEnumerationCap = 10'000'000;

class PolyPerm {
 public:
  /// Validates the coefficient constraints and that the induced map is a
  /// bijection. Trailing zero coefficients are dropped.
  PolyPerm(PrimePowerLength len, std::vector<u64> coeffs);

  const PrimePowerLength& length() const noexcept { return len_; }
  std::span<const u64> coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^i (zero beyond the degree).
  u64 coefficient(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  unsigned degree() const noexcept { return coeffs_.empty() ? 0 : static_cast<unsigned>(coeffs_.size() - 1); }

  /// Horner evaluation modulo p^m.
  u64 operator()(u64 x) const;
  const Permutation& permutation() const noexcept { return image_; }

  /// `poly mod p^m: a0 + a1*x + a2*x^2 ...`
  std::string to_string() const;

  bool operator==(const PolyPerm& o) const { return len_ == o.len_ && coeffs_ == o.coeffs_; }

 private:
  PrimePowerLength len_;
  std::vector<u64> coeffs_;
  Permutation image_;
};

PolyPerm identity_poly(const PrimePowerLength& len);
/// x -> x + b
PolyPerm translation(const PrimePowerLength& len, u64 b);

/// f_1 = x + 1 and f_i = 1 + x + p^(m-1) (x^2 + ... + x^i) for 2 <= i <= p - 2.
PolyPerm f_i(const PrimePowerLength& len, unsigned i);

/// x -> f(g(x)).
PolyPerm compose(const PolyPerm& f, const PolyPerm& g);
PolyPerm invert(const PolyPerm& g);
/// h^-1 o g o h
PolyPerm conjugate(const PolyPerm& g, const PolyPerm& h);

/// Identifies Q^n (restricted = false) or Q_1^n (restricted = true).
struct QGroupId {
  PrimePowerLength len;
  unsigned degree_bound;
  bool restricted;

  QGroupId(PrimePowerLength len, unsigned degree_bound, bool restricted = false);

  /// (p-1) p^(2m+n-2) for Q^n, p^(m+n) for Q_1^n.
  u64 cardinality() const;
  /// `Q^2`, `Q_1^3`
  std::string name() const;
};

bool membership(const PolyPerm& f, const QGroupId& id);

/// The element at position `index` in lexicographic (a_0, a_1, ...) order.
PolyPerm element_at(const QGroupId& id, u64 index);

struct EnumerationStats {
  u64 visited = 0;
  /// Coefficient vectors whose map duplicated an earlier one (only tracked
  /// for degree_bound = p - 1).
  u64 collisions = 0;
  bool stopped = false;
};

/// Visits elements in lexicographic coefficient order until `visit` returns
/// false. Throws CapExceeded when the group is larger than `cap`.
EnumerationStats enumerate(const QGroupId& id, const std::function<bool(const PolyPerm&)>& visit,
                           u64 cap = kDefaultEnumerationCap);

}  // namespace cycaut
