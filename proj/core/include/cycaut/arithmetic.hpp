#pragma once

// Exact number theory on residues: multiplicative orders, the z-invariant,
// cyclotomic cosets and projective-length decompositions.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycaut {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ typedef unsigned __int128 u128;

/// Largest object length accepted by validating constructors.
inline constexpr u64 kMaxLength = 1'000'000;

/// Raised when a search or enumeration would exceed a configured cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, u64 required)
      : std::runtime_error(what), required_(required) {}
  u64 required() const noexcept { return required_; }

 private:
  u64 required_;
};

/// Raised for inputs outside the supported class (e.g. composite lengths
/// that are not prime powers).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);
u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
u64 inverse_mod(u64 a, u64 m);
/// base^exp, throwing std::overflow_error past 2^64.
u64 checked_pow(u64 base, unsigned exp);

bool is_prime(u64 n);
std::vector<u64> distinct_prime_factors(u64 n);
u64 euler_phi(u64 n);

struct PrimePower {
  u64 p;
  unsigned m;
};

/// (p, m) with n = p^m, or nothing when n is not a prime power.
std::optional<PrimePower> as_prime_power(u64 n);
bool is_prime_power(u64 n);

/// A length n = p^m with p prime and m >= 1.
class PrimePowerLength {
 public:
  PrimePowerLength(u64 p, unsigned m);

  static std::optional<PrimePowerLength> of(u64 n);

  u64 p() const noexcept { return p_; }
  unsigned m() const noexcept { return m_; }
  u64 n() const noexcept { return n_; }
  /// p^(m-1)
  u64 block_stride() const noexcept { return n_ / p_; }

  bool operator==(const PrimePowerLength&) const = default;

 private:
  u64 p_;
  unsigned m_;
  u64 n_;
};

/// Least r >= 1 with q^r = 1 (mod n). Requires gcd(q, n) = 1 and 2 <= n <= kMaxLength.
u64 multiplicative_order(u64 q, u64 n);

/// Largest z with p^z | q^t - 1 where t is the order of q modulo p.
unsigned z_invariant(u64 q, u64 p);

/// Order of q modulo p^m. Cross-checks against p^(m-1) * ord_p(q) whenever
/// the z-invariant is 1.
u64 order_mod_prime_power(u64 q, const PrimePowerLength& len);

/// Orbits of x -> q*x on Z_n, each sorted, listed by increasing minimum.
struct CosetPartition {
  u64 modulus = 0;
  u64 base = 0;
  std::vector<std::vector<u64>> cosets;

  /// Index into `cosets` of the orbit containing s.
  std::size_t index_of(u64 s) const;
  const std::vector<u64>& coset_of(u64 s) const { return cosets[index_of(s)]; }

 private:
  friend CosetPartition cyclotomic_cosets(u64 n, u64 q);
  std::vector<std::uint32_t> owner_;
};

CosetPartition cyclotomic_cosets(u64 n, u64 q);
std::vector<u64> cyclotomic_coset(u64 s, u64 n, u64 q);
/// Union of the cyclotomic cosets of the given seeds, sorted.
std::vector<u64> coset_closure(std::span<const u64> seeds, u64 n, u64 q);

struct ProjectiveDecomposition {
  u64 t;
  unsigned d;
  bool operator==(const ProjectiveDecomposition&) const = default;
};

/// All (t, d) with t a prime power, 2 <= d <= max_d and n = (t^d - 1)/(t - 1),
/// ordered by increasing d.
std::vector<ProjectiveDecomposition> projective_length_decompositions(u64 n, unsigned max_d);

}  // namespace cycaut
