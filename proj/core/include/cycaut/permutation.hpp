#pragma once

// Permutations of Z_n on the 0-based coordinate set {0, ..., n-1}. The
// complete cycle is i -> i + 1 mod n.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cycaut/arithmetic.hpp"

namespace cycaut {

class Permutation {
 public:
  Permutation() = default;
  /// Validates that `image` is a bijection of {0, ..., n-1}.
  explicit Permutation(std::vector<std::uint32_t> image);
  static Permutation from_images(std::span<const u64> image);
  static Permutation identity(u64 n);

  u64 degree() const noexcept { return image_.size(); }
  u64 operator()(u64 i) const { return image_[i]; }
  std::span<const std::uint32_t> image() const noexcept { return image_; }
  bool is_identity() const;

  /// Cycles including fixed points, each starting at its least element.
  std::vector<std::vector<u64>> cycles() const;
  /// `[s0,s1,...]`
  std::string to_string() const;
  /// `(0 1 2)(3 4)`; the identity renders as `()`.
  std::string cycle_notation() const;
  /// Inverse of to_string().
  static Permutation parse(std::string_view text);

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> image_;
};

Permutation complete_cycle(u64 n);
/// x -> a x + b mod n.
Permutation affine(u64 n, u64 a, u64 b);
/// x -> a x mod n.
Permutation multiplier(u64 n, u64 a);
/// Swaps i and j.
Permutation transposition(u64 n, u64 i, u64 j);

/// (s o r)(i) = s(r(i))
Permutation compose(const Permutation& s, const Permutation& r);
Permutation inverse(const Permutation& s);
Permutation power(const Permutation& s, i64 k);
/// Least k >= 1 with s^k = id (lcm of cycle lengths).
u64 order(const Permutation& s);
std::vector<std::vector<u64>> orbits(const Permutation& s);

/// j with s t s^-1 = t^j when s normalizes <t>; t must be an n-cycle.
std::optional<u64> conjugate_into_cycle_power(const Permutation& s, const Permutation& t);

/// The affine map x -> a x + b on Z_n with gcd(a, n) = 1.
struct AffineMap {
  u64 n = 1;
  u64 a = 1;
  u64 b = 0;

  AffineMap() = default;
  AffineMap(u64 n, u64 a, u64 b);

  u64 operator()(u64 x) const { return (mul_mod(a, x, n) + b) % n; }
  Permutation permutation() const { return affine(n, a, b); }
  bool is_multiplier() const noexcept { return b == 0; }
  std::string to_string() const;

  bool operator==(const AffineMap&) const = default;
};

/// (f o g)(x) = f(g(x)), parameters (a1 a2, a1 b2 + b1).
AffineMap compose(const AffineMap& f, const AffineMap& g);
AffineMap inverse(const AffineMap& f);

}  // namespace cycaut
