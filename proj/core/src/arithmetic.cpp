#include "cycaut/arithmetic.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>

namespace cycaut {

namespace {

void require_length(u64 n, const char* what) {
  if (n > kMaxLength) {
    throw std::invalid_argument(std::string(what) + ": modulus " + std::to_string(n) +
                                " exceeds the length cap " + std::to_string(kMaxLength));
  }
}

}  // namespace

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    const u64 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  const u64 g = gcd(a, b);
  const u128 v = static_cast<u128>(a / g) * b;
  if (v > std::numeric_limits<u64>::max()) throw std::overflow_error("lcm overflows 64 bits");
  return static_cast<u64>(v);
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 inverse_mod(u64 a, u64 m) {
  if (m == 0) throw std::invalid_argument("inverse_mod: zero modulus");
  i64 old_r = static_cast<i64>(a % m), r = static_cast<i64>(m);
  i64 old_s = 1, s = 0;
  while (r != 0) {
    const i64 quot = old_r / r;
    i64 tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1 && m != 1) {
    throw std::invalid_argument("inverse_mod: " + std::to_string(a) + " is not a unit modulo " +
                                std::to_string(m));
  }
  const i64 mm = static_cast<i64>(m);
  return static_cast<u64>(((old_s % mm) + mm) % mm);
}

u64 checked_pow(u64 base, unsigned exp) {
  u64 result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    const u128 v = static_cast<u128>(result) * base;
    if (v > std::numeric_limits<u64>::max()) throw std::overflow_error("checked_pow overflow");
    result = static_cast<u64>(v);
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (u64 d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<u64> distinct_prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 euler_phi(u64 n) {
  u64 result = n;
  for (u64 p : distinct_prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::optional<PrimePower> as_prime_power(u64 n) {
  if (n < 2) return std::nullopt;
  const auto primes = distinct_prime_factors(n);
  if (primes.size() != 1) return std::nullopt;
  unsigned m = 0;
  for (u64 v = n; v > 1; v /= primes[0]) ++m;
  return PrimePower{primes[0], m};
}

bool is_prime_power(u64 n) { return as_prime_power(n).has_value(); }

PrimePowerLength::PrimePowerLength(u64 p, unsigned m) : p_(p), m_(m), n_(0) {
  if (!is_prime(p)) throw std::invalid_argument("PrimePowerLength: " + std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("PrimePowerLength: exponent must be >= 1");
  n_ = checked_pow(p, m);
  require_length(n_, "PrimePowerLength");
}

std::optional<PrimePowerLength> PrimePowerLength::of(u64 n) {
  const auto pp = as_prime_power(n);
  if (!pp) return std::nullopt;
  return PrimePowerLength(pp->p, pp->m);
}

u64 multiplicative_order(u64 q, u64 n) {
  if (n < 2) throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
  require_length(n, "multiplicative_order");
  if (gcd(q % n, n) != 1) {
    throw std::invalid_argument("multiplicative_order: gcd(" + std::to_string(q) + ", " +
                                std::to_string(n) + ") != 1");
  }
  u64 order = euler_phi(n);
  for (u64 ell : distinct_prime_factors(order)) {
    while (order % ell == 0 && pow_mod(q, order / ell, n) == 1) order /= ell;
  }
  return order;
}

unsigned z_invariant(u64 q, u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("z_invariant: " + std::to_string(p) + " is not prime");
  if (q % p == 0) throw std::invalid_argument("z_invariant: p divides q");
  const u64 t = p == 2 ? 1 : multiplicative_order(q, p);

  // Work modulo the largest power of p below 2^62; fall back to exact
  // arithmetic only if q^t - 1 vanishes there.
  u64 pk = p;
  unsigned k = 1;
  while (pk <= (u64{1} << 62) / p) {
    pk *= p;
    ++k;
  }
  u64 diff = (pow_mod(q, t, pk) + pk - 1) % pk;
  if (diff != 0) {
    unsigned z = 0;
    while (diff % p == 0) {
      diff /= p;
      ++z;
    }
    return z;
  }
  using boost::multiprecision::cpp_int;
  cpp_int v = boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(t)) - 1;
  unsigned z = 0;
  while (v % p == 0) {
    v /= p;
    ++z;
  }
  return z;
}

u64 order_mod_prime_power(u64 q, const PrimePowerLength& len) {
  if (q % len.p() == 0) throw std::invalid_argument("order_mod_prime_power: p divides q");
  if (len.n() == 2) return 1;
  const u64 order = multiplicative_order(q, len.n());
  if (len.p() != 2 && z_invariant(q, len.p()) == 1) {
    const u64 expected = len.block_stride() * multiplicative_order(q, len.p());
    if (order != expected) {
      throw std::logic_error("order_mod_prime_power: lifting identity violated for q=" +
                             std::to_string(q) + ", n=" + std::to_string(len.n()));
    }
  }
  return order;
}

std::size_t CosetPartition::index_of(u64 s) const {
  if (s >= modulus) throw std::out_of_range("CosetPartition::index_of");
  return owner_[s];
}

CosetPartition cyclotomic_cosets(u64 n, u64 q) {
  if (n < 1) throw std::invalid_argument("cyclotomic_cosets: n must be >= 1");
  require_length(n, "cyclotomic_cosets");
  if (gcd(q % n, n) != 1 && n > 1) {
    throw std::invalid_argument("cyclotomic_cosets: gcd(q, n) != 1");
  }
  CosetPartition part;
  part.modulus = n;
  part.base = q;
  constexpr auto kUnassigned = std::numeric_limits<std::uint32_t>::max();
  part.owner_.assign(n, kUnassigned);
  const u64 qm = q % n;
  for (u64 s = 0; s < n; ++s) {
    if (part.owner_[s] != kUnassigned) continue;
    const auto idx = static_cast<std::uint32_t>(part.cosets.size());
    std::vector<u64> orbit;
    u64 x = s;
    do {
      orbit.push_back(x);
      part.owner_[x] = idx;
      x = mul_mod(x, qm, n);
    } while (x != s);
    std::sort(orbit.begin(), orbit.end());
    part.cosets.push_back(std::move(orbit));
  }
  return part;
}

std::vector<u64> cyclotomic_coset(u64 s, u64 n, u64 q) {
  if (gcd(q % n, n) != 1 && n > 1) throw std::invalid_argument("cyclotomic_coset: gcd(q, n) != 1");
  std::vector<u64> orbit;
  const u64 start = s % n;
  u64 x = start;
  do {
    orbit.push_back(x);
    x = mul_mod(x, q % n, n);
  } while (x != start);
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<u64> coset_closure(std::span<const u64> seeds, u64 n, u64 q) {
  std::vector<bool> in(n, false);
  for (u64 s : seeds) {
    if (in[s % n]) continue;
    for (u64 x : cyclotomic_coset(s, n, q)) in[x] = true;
  }
  std::vector<u64> out;
  for (u64 i = 0; i < n; ++i) {
    if (in[i]) out.push_back(i);
  }
  return out;
}

std::vector<ProjectiveDecomposition> projective_length_decompositions(u64 n, unsigned max_d) {
  std::vector<ProjectiveDecomposition> out;
  for (unsigned d = 2; d <= max_d; ++d) {
    for (u64 t = 2;; ++t) {
      // (t^d - 1)/(t - 1) = 1 + t + ... + t^(d-1)
      u128 sum = 0, term = 1;
      for (unsigned i = 0; i < d && sum <= n; ++i) {
        sum += term;
        term *= t;
      }
      if (sum > n) break;
      if (sum == n && is_prime_power(t)) out.push_back({t, d});
    }
  }
  return out;
}

}  // namespace cycaut
