#include "cycaut/brand.hpp"

#include <stdexcept>
#include <unordered_map>

namespace cycaut {

namespace {

void require_odd(const PrimePowerLength& len, const char* what) {
  if (len.p() == 2) throw std::invalid_argument(std::string(what) + ": p = 2 is not supported");
}

u64 neg_mod(u64 a, u64 n) { return (n - a % n) % n; }

// Coefficients of (c0 + c1 x)^i mod n, lowest first.
std::vector<u64> binomial_power(u64 c0, u64 c1, unsigned i, u64 n) {
  std::vector<u64> out{1 % n};
  for (unsigned step = 0; step < i; ++step) {
    std::vector<u64> next(out.size() + 1, 0);
    for (std::size_t j = 0; j < out.size(); ++j) {
      next[j] = (next[j] + mul_mod(out[j], c0, n)) % n;
      next[j + 1] = (next[j + 1] + mul_mod(out[j], c1, n)) % n;
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

PolyPerm::PolyPerm(PrimePowerLength len, std::vector<u64> coeffs) : len_(len), coeffs_(std::move(coeffs)) {
  require_odd(len_, "PolyPerm");
  const u64 n = len_.n();
  const u64 stride = len_.block_stride();
  for (auto& c : coeffs_) c %= n;
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.size() < 2 || coeffs_[1] % len_.p() == 0) {
    throw std::invalid_argument("PolyPerm: linear coefficient must be a unit modulo p");
  }
  if (coeffs_.size() - 1 > len_.p() - 1) {
    throw std::invalid_argument("PolyPerm: degree " + std::to_string(coeffs_.size() - 1) + " exceeds p - 1");
  }
  for (std::size_t i = 2; i < coeffs_.size(); ++i) {
    if (coeffs_[i] % stride != 0) {
      throw std::invalid_argument("PolyPerm: coefficient a_" + std::to_string(i) + " = " +
                                  std::to_string(coeffs_[i]) + " is not divisible by p^(m-1)");
    }
  }
  std::vector<std::uint32_t> img(n);
  for (u64 x = 0; x < n; ++x) img[x] = static_cast<std::uint32_t>((*this)(x));
  try {
    image_ = Permutation(std::move(img));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("PolyPerm: " + to_string() + " is not a bijection");
  }
}

u64 PolyPerm::operator()(u64 x) const {
  const u64 n = len_.n();
  u64 acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = (mul_mod(acc, x, n) + coeffs_[i]) % n;
  return acc;
}

std::string PolyPerm::to_string() const {
  std::string s = "poly mod " + std::to_string(len_.p()) + "^" + std::to_string(len_.m()) + ": ";
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) s += " + ";
    first = false;
    s += std::to_string(coeffs_[i]);
    if (i == 1) s += "*x";
    if (i >= 2) s += "*x^" + std::to_string(i);
  }
  return first ? s + "0" : s;
}

PolyPerm identity_poly(const PrimePowerLength& len) { return PolyPerm(len, {0, 1}); }

PolyPerm translation(const PrimePowerLength& len, u64 b) { return PolyPerm(len, {b % len.n(), 1}); }

PolyPerm f_i(const PrimePowerLength& len, unsigned i) {
  require_odd(len, "f_i");
  if (i == 1) return PolyPerm(len, {1, 1});
  if (i < 2 || i + 2 > len.p()) {
    throw std::invalid_argument("f_i: index " + std::to_string(i) + " outside [1, p-2]");
  }
  if (len.m() < 2) throw std::invalid_argument("f_i: i >= 2 requires m >= 2");
  std::vector<u64> c(i + 1, len.block_stride());
  c[0] = 1;
  c[1] = 1;
  return PolyPerm(len, std::move(c));
}

PolyPerm compose(const PolyPerm& f, const PolyPerm& g) {
  if (!(f.length() == g.length())) throw std::invalid_argument("compose: length mismatch");
  const auto& len = f.length();
  const u64 n = len.n();
  if (len.m() < 2 && (f.degree() > 1 || g.degree() > 1)) {
    throw std::invalid_argument("compose: non-affine polynomial maps need m >= 2");
  }
  // a_i g(x)^i = a_i (g_0 + g_1 x)^i mod p^m for i >= 2: every other term
  // carries two factors divisible by p^(m-1).
  std::vector<u64> h(std::max(f.degree(), g.degree()) + 1, 0);
  h[0] = f.coefficient(0);
  for (std::size_t j = 0; j <= g.degree(); ++j) {
    h[j] = (h[j] + mul_mod(f.coefficient(1), g.coefficient(j), n)) % n;
  }
  for (unsigned i = 2; i <= f.degree(); ++i) {
    const u64 ai = f.coefficient(i);
    if (ai == 0) continue;
    const auto term = binomial_power(g.coefficient(0), g.coefficient(1), i, n);
    for (std::size_t j = 0; j < term.size(); ++j) h[j] = (h[j] + mul_mod(ai, term[j], n)) % n;
  }
  std::optional<PolyPerm> result;
  try {
    result.emplace(len, std::move(h));
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string("compose: reduced composition left the group: ") + e.what());
  }
  for (u64 x = 0; x < n; ++x) {
    if ((*result)(x) != f(g(x))) throw std::logic_error("compose: reduced composition disagrees pointwise");
  }
  return *result;
}

PolyPerm invert(const PolyPerm& g) {
  const auto& len = g.length();
  const u64 n = len.n();
  // Constant-free part: b_1 = g_1^-1, b_i = -g_i g_1^-(i+1).
  const u64 g1inv = inverse_mod(g.coefficient(1), n);
  std::vector<u64> b(g.degree() + 1, 0);
  b[1] = g1inv;
  u64 g1inv_pow = g1inv;
  for (unsigned i = 2; i <= g.degree(); ++i) {
    g1inv_pow = mul_mod(g1inv_pow, g1inv, n);  // g_1^-i
    b[i] = neg_mod(mul_mod(g.coefficient(i), mul_mod(g1inv_pow, g1inv, n), n), n);
  }
  PolyPerm inner(len, std::move(b));
  if (g.coefficient(0) == 0) return inner;
  // g = t_{g_0} o g', so g^-1 = g'^-1 o t_{-g_0}.
  return compose(inner, translation(len, neg_mod(g.coefficient(0), n)));
}

PolyPerm conjugate(const PolyPerm& g, const PolyPerm& h) { return compose(invert(h), compose(g, h)); }

QGroupId::QGroupId(PrimePowerLength len_, unsigned degree_bound_, bool restricted_)
    : len(len_), degree_bound(degree_bound_), restricted(restricted_) {
  require_odd(len, "QGroupId");
  if (degree_bound < 1 || degree_bound + 1 > len.p()) {
    throw std::invalid_argument("QGroupId: degree bound must lie in [1, p-1]");
  }
  if (len.m() < 2 && (degree_bound > 1 || restricted)) {
    throw std::invalid_argument("QGroupId: " + name() + " needs m >= 2");
  }
}

u64 QGroupId::cardinality() const {
  const u64 p = len.p();
  const unsigned m = len.m();
  if (restricted) return checked_pow(p, m + degree_bound);
  return (p - 1) * checked_pow(p, 2 * m + degree_bound - 2);
}

std::string QGroupId::name() const {
  return std::string(restricted ? "Q_1^" : "Q^") + std::to_string(degree_bound);
}

bool membership(const PolyPerm& f, const QGroupId& id) {
  if (!(f.length() == id.len)) return false;
  if (f.degree() > id.degree_bound) return false;
  if (id.restricted && f.coefficient(1) % id.len.block_stride() != 1 % id.len.block_stride()) return false;
  return true;
}

PolyPerm element_at(const QGroupId& id, u64 index) {
  const u64 total = id.cardinality();
  if (index >= total) throw std::out_of_range("element_at: index past the group order");
  const u64 p = id.len.p();
  const u64 stride = id.len.block_stride();
  std::vector<u64> c(id.degree_bound + 1, 0);
  for (unsigned i = id.degree_bound; i >= 2; --i) {
    c[i] = (index % p) * stride;
    index /= p;
  }
  const u64 linear_count = id.restricted ? p : (p - 1) * stride;
  const u64 li = index % linear_count;
  index /= linear_count;
  c[1] = id.restricted ? 1 + li * stride : li + li / (p - 1) + 1;
  c[0] = index;
  return PolyPerm(id.len, std::move(c));
}

EnumerationStats enumerate(const QGroupId& id, const std::function<bool(const PolyPerm&)>& visit, u64 cap) {
  const u64 total = id.cardinality();
  if (total > cap) {
    throw CapExceeded("enumerate: |" + id.name() + "| = " + std::to_string(total) + " exceeds the cap " +
                          std::to_string(cap),
                      total);
  }
  EnumerationStats stats;
  const bool track = id.degree_bound + 1 == id.len.p();
  std::unordered_map<u64, u64> seen;  // image hash -> first index
  for (u64 idx = 0; idx < total; ++idx) {
    PolyPerm f = element_at(id, idx);
    if (track) {
      u64 h = 1469598103934665603ULL;
      for (auto v : f.permutation().image()) h = (h ^ v) * 1099511628211ULL;
      const auto [it, fresh] = seen.emplace(h, idx);
      if (!fresh && element_at(id, it->second).permutation() == f.permutation()) {
        ++stats.collisions;
        continue;
      }
    }
    ++stats.visited;
    if (!visit(f)) {
      stats.stopped = true;
      break;
    }
  }
  return stats;
}

}  // namespace cycaut
