#include "cycaut/permutation.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace cycaut {

namespace {

void require_degree(u64 n, const char* what) {
  if (n > kMaxLength) throw std::invalid_argument(std::string(what) + ": degree exceeds the length cap");
}

void require_same_degree(const Permutation& a, const Permutation& b, const char* what) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument(std::string(what) + ": degree mismatch (" + std::to_string(a.degree()) +
                                " vs " + std::to_string(b.degree()) + ")");
  }
}

}  // namespace

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  require_degree(image_.size(), "Permutation");
  std::vector<bool> seen(image_.size(), false);
  for (auto v : image_) {
    if (v >= image_.size() || seen[v]) throw std::invalid_argument("Permutation: image is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::from_images(std::span<const u64> image) {
  std::vector<std::uint32_t> img(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] >= image.size()) throw std::invalid_argument("Permutation: image out of range");
    img[i] = static_cast<std::uint32_t>(image[i]);
  }
  return Permutation(std::move(img));
}

Permutation Permutation::identity(u64 n) {
  require_degree(n, "identity");
  std::vector<std::uint32_t> img(n);
  for (u64 i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

std::vector<std::vector<u64>> Permutation::cycles() const {
  std::vector<std::vector<u64>> out;
  std::vector<bool> seen(image_.size(), false);
  for (u64 i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<u64> cycle;
    for (u64 x = i; !seen[x]; x = image_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(image_[i]);
  }
  return s + "]";
}

std::string Permutation::cycle_notation() const {
  std::string s;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Permutation Permutation::parse(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("Permutation::parse: expected [s0,s1,...]");
  }
  text = trim(text.substr(1, text.size() - 2));
  std::vector<u64> image;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    u64 v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("Permutation::parse: bad entry '" + std::string(token) + "'");
    }
    image.push_back(v);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return from_images(image);
}

Permutation complete_cycle(u64 n) {
  if (n < 1) throw std::invalid_argument("complete_cycle: n must be >= 1");
  require_degree(n, "complete_cycle");
  std::vector<std::uint32_t> img(n);
  for (u64 i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>((i + 1) % n);
  return Permutation(std::move(img));
}

Permutation affine(u64 n, u64 a, u64 b) {
  if (n < 1) throw std::invalid_argument("affine: n must be >= 1");
  require_degree(n, "affine");
  if (gcd(a % n, n) != 1 && n > 1) {
    throw std::invalid_argument("affine: " + std::to_string(a) + " is not a unit modulo " + std::to_string(n));
  }
  std::vector<std::uint32_t> img(n);
  for (u64 i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>((mul_mod(a % n, i, n) + b) % n);
  return Permutation(std::move(img));
}

Permutation multiplier(u64 n, u64 a) { return affine(n, a, 0); }

Permutation transposition(u64 n, u64 i, u64 j) {
  if (i >= n || j >= n) throw std::invalid_argument("transposition: point out of range");
  std::vector<std::uint32_t> img(n);
  for (u64 x = 0; x < n; ++x) img[x] = static_cast<std::uint32_t>(x);
  std::swap(img[i], img[j]);
  return Permutation(std::move(img));
}

Permutation compose(const Permutation& s, const Permutation& r) {
  require_same_degree(s, r, "compose");
  std::vector<std::uint32_t> img(s.degree());
  for (u64 i = 0; i < s.degree(); ++i) img[i] = static_cast<std::uint32_t>(s(r(i)));
  return Permutation(std::move(img));
}

Permutation inverse(const Permutation& s) {
  std::vector<std::uint32_t> img(s.degree());
  for (u64 i = 0; i < s.degree(); ++i) img[s(i)] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(img));
}

Permutation power(const Permutation& s, i64 k) {
  Permutation base = k < 0 ? inverse(s) : s;
  u64 e = static_cast<u64>(k < 0 ? -k : k);
  Permutation result = Permutation::identity(s.degree());
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

u64 order(const Permutation& s) {
  u64 result = 1;
  for (const auto& c : s.cycles()) result = lcm(result, c.size());
  return result;
}

std::vector<std::vector<u64>> orbits(const Permutation& s) { return s.cycles(); }

std::optional<u64> conjugate_into_cycle_power(const Permutation& s, const Permutation& t) {
  require_same_degree(s, t, "conjugate_into_cycle_power");
  const u64 n = t.degree();
  if (n == 0) return std::nullopt;
  // pos[x] = k such that x = t^k(0)
  std::vector<u64> pos(n, n);
  u64 x = 0;
  for (u64 k = 0; k < n; ++k) {
    if (pos[x] != n) throw std::invalid_argument("conjugate_into_cycle_power: t is not an n-cycle");
    pos[x] = k;
    x = t(x);
  }
  const Permutation rho = compose(compose(s, t), inverse(s));
  const u64 j = (pos[rho(0)] + n - pos[0]) % n;
  for (u64 y = 0; y < n; ++y) {
    if ((pos[rho(y)] + n - pos[y]) % n != j) return std::nullopt;
  }
  return j;
}

AffineMap::AffineMap(u64 n_, u64 a_, u64 b_) : n(n_), a(a_ % n_), b(b_ % n_) {
  if (n_ < 1) throw std::invalid_argument("AffineMap: n must be >= 1");
  if (gcd(a, n) != 1 && n > 1) throw std::invalid_argument("AffineMap: a is not a unit");
}

std::string AffineMap::to_string() const {
  if (b == 0) return "multiplier a=" + std::to_string(a);
  return "affine x -> " + std::to_string(a) + "x + " + std::to_string(b) + " mod " + std::to_string(n);
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  if (f.n != g.n) throw std::invalid_argument("compose: modulus mismatch");
  return AffineMap(f.n, mul_mod(f.a, g.a, f.n), (mul_mod(f.a, g.b, f.n) + f.b) % f.n);
}

AffineMap inverse(const AffineMap& f) {
  const u64 ainv = f.n == 1 ? 0 : inverse_mod(f.a, f.n);
  return AffineMap(f.n, ainv, (f.n - mul_mod(ainv, f.b, f.n)) % f.n);
}

}  // namespace cycaut
