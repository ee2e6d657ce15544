#include "cycaut/codes.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>

namespace cycaut {

namespace {

GeneratorMatrix reduce(const Field& f, u64 n, std::vector<FieldElem> m, std::vector<u64>& pivots,
                       const std::vector<bool>* allowed = nullptr) {
  const u64 rows = n == 0 ? 0 : m.size() / n;
  u64 r = 0;
  pivots.clear();
  for (u64 col = 0; col < n && r < rows; ++col) {
    if (allowed && !(*allowed)[col]) continue;
    u64 piv = r;
    while (piv < rows && m[piv * n + col].value == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap_ranges(m.begin() + piv * n, m.begin() + (piv + 1) * n, m.begin() + r * n);
    const FieldElem s = f.inv(m[r * n + col]);
    for (u64 j = 0; j < n; ++j) m[r * n + j] = f.mul(m[r * n + j], s);
    for (u64 i = 0; i < rows; ++i) {
      if (i == r) continue;
      const FieldElem c = m[i * n + col];
      if (c.value == 0) continue;
      for (u64 j = 0; j < n; ++j) m[i * n + j] = f.sub(m[i * n + j], f.mul(c, m[r * n + j]));
    }
    pivots.push_back(col);
    ++r;
  }
  m.resize(r * n);
  return GeneratorMatrix{r, n, std::move(m), allowed == nullptr};
}

// Visits every codeword sum(d_j row_j) in mixed-radix order.
void for_each_codeword(const LinearCode& code, const std::function<void(std::span<const FieldElem>)>& fn) {
  const Field& f = *code.field();
  const u64 n = code.length();
  const u64 k = code.dimension();
  const u64 q = f.order();
  const auto& g = code.canonical();
  std::vector<FieldElem> mult(k * q * n);
  for (u64 j = 0; j < k; ++j) {
    for (u64 v = 0; v < q; ++v) {
      for (u64 i = 0; i < n; ++i) mult[(j * q + v) * n + i] = f.mul({v}, g.at(j, i));
    }
  }
  std::vector<FieldElem> word(n, f.zero());
  std::vector<u64> digit(k, 0);
  fn(word);
  while (true) {
    u64 j = 0;
    for (; j < k; ++j) {
      const u64 old = digit[j];
      const u64 next = old + 1 == q ? 0 : old + 1;
      for (u64 i = 0; i < n; ++i) {
        word[i] = f.add(f.sub(word[i], mult[(j * q + old) * n + i]), mult[(j * q + next) * n + i]);
      }
      digit[j] = next;
      if (next != 0) break;
    }
    if (j == k) break;
    fn(word);
  }
}

u64 weight(std::span<const FieldElem> w) {
  return static_cast<u64>(std::count_if(w.begin(), w.end(), [](FieldElem e) { return e.value != 0; }));
}

u64 capped_power(u64 base, u64 exp, u64 cap) {
  u64 acc = 1;
  for (u64 i = 0; i < exp; ++i) {
    if (acc > cap / std::max<u64>(base, 1)) return cap + 1;
    acc *= base;
  }
  return acc;
}

u64 binomial(u64 n, u64 k) {
  u128 acc = 1;
  for (u64 i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > (u128{1} << 63)) return u64{1} << 63;
  }
  return static_cast<u64>(acc);
}

u64 information_set_distance(const LinearCode& code) {
  const Field& f = *code.field();
  const u64 n = code.length();
  const u64 k = code.dimension();
  const u64 q = f.order();

  // Generator matrices systematic on pairwise disjoint information sets.
  std::vector<GeneratorMatrix> systematic;
  std::vector<bool> free_cols(n, true);
  while (true) {
    std::vector<u64> piv;
    auto g = reduce(f, n, code.canonical().entries, piv, &free_cols);
    if (g.rows < k) break;
    for (u64 c : piv) free_cols[c] = false;
    systematic.push_back(std::move(g));
  }
  const u64 sets = systematic.size();

  u64 best = n + 1;
  u64 budget = 200'000'000;
  std::vector<FieldElem> acc(n);
  for (u64 r = 1; r <= k; ++r) {
    const u64 cost = binomial(k, r) * capped_power(q - 1, r - 1, budget);
    if (cost > budget / sets) {
      throw CapExceeded("min_distance: information-set search needs more than the cap at depth " +
                            std::to_string(r),
                        cost * sets);
    }
    budget -= cost * sets;
    for (const auto& g : systematic) {
      std::fill(acc.begin(), acc.end(), f.zero());
      std::function<void(u64, u64)> dfs = [&](u64 start, u64 depth) {
        if (depth == r) {
          best = std::min(best, weight(acc));
          return;
        }
        for (u64 j = start; j + (r - depth) <= k; ++j) {
          for (u64 c = 1; c < q; ++c) {
            if (depth == 0 && c != 1) break;
            for (u64 i = 0; i < n; ++i) acc[i] = f.add(acc[i], f.mul({c}, g.at(j, i)));
            dfs(j + 1, depth + 1);
            for (u64 i = 0; i < n; ++i) acc[i] = f.sub(acc[i], f.mul({c}, g.at(j, i)));
          }
        }
      };
      dfs(0, 0);
    }
    // An unseen codeword has more than r nonzeros on every information set.
    if (best <= sets * (r + 1)) return best;
  }
  return best;
}

}  // namespace

LinearCode::LinearCode(FieldPtr field, u64 n, std::vector<FieldElem> rows_flat) : field_(std::move(field)), n_(n) {
  if (!field_) throw std::invalid_argument("LinearCode: null field");
  if (n_ == 0 || n_ > kMaxLength) throw std::invalid_argument("LinearCode: length out of range");
  if (rows_flat.size() % n_ != 0) throw std::invalid_argument("LinearCode: ragged matrix");
  for (auto e : rows_flat) {
    if (!field_->contains(e)) throw std::invalid_argument("LinearCode: entry outside the field");
  }
  rref_ = reduce(*field_, n_, std::move(rows_flat), pivots_);
}

bool LinearCode::contains(std::span<const FieldElem> word) const {
  if (word.size() != n_) throw std::invalid_argument("LinearCode::contains: length mismatch");
  const Field& f = *field_;
  std::vector<FieldElem> w(word.begin(), word.end());
  for (u64 j = 0; j < pivots_.size(); ++j) {
    const FieldElem c = w[pivots_[j]];
    if (c.value == 0) continue;
    const auto row = rref_.row(j);
    for (u64 i = 0; i < n_; ++i) {
      if (row[i].value != 0) w[i] = f.sub(w[i], f.mul(c, row[i]));
    }
  }
  return std::all_of(w.begin(), w.end(), [](FieldElem e) { return e.value == 0; });
}

LinearCode LinearCode::permuted(const Permutation& sigma) const {
  if (sigma.degree() != n_) throw std::invalid_argument("LinearCode::permuted: degree mismatch");
  std::vector<FieldElem> m(rref_.entries.size());
  for (u64 j = 0; j < rref_.rows; ++j) {
    for (u64 i = 0; i < n_; ++i) m[j * n_ + sigma(i)] = rref_.at(j, i);
  }
  return LinearCode(field_, n_, std::move(m));
}

bool LinearCode::permutes_onto(const Permutation& sigma, const LinearCode& target) const {
  if (sigma.degree() != n_) throw std::invalid_argument("LinearCode::permutes_onto: degree mismatch");
  if (target.n_ != n_ || target.field_->order() != field_->order() || target.dimension() != dimension()) {
    return false;
  }
  std::vector<FieldElem> w(n_);
  for (u64 j = 0; j < rref_.rows; ++j) {
    for (u64 i = 0; i < n_; ++i) w[sigma(i)] = rref_.at(j, i);
    if (!target.contains(w)) return false;
  }
  return true;
}

bool LinearCode::operator==(const LinearCode& o) const {
  return n_ == o.n_ && field_->order() == o.field_->order() && rref_ == o.rref_;
}

struct CyclicCode::Cache {
  std::once_flag once;
  std::optional<LinearCode> code;
};

CyclicCode::CyclicCode(u64 n, FieldPtr field, std::vector<u64> zeros)
    : n_(n), field_(std::move(field)), zeros_(std::move(zeros)), cache_(std::make_shared<Cache>()) {}

CyclicCode CyclicCode::from_defining_set(u64 n, FieldPtr field, std::span<const u64> seeds) {
  if (!field) throw std::invalid_argument("CyclicCode: null field");
  if (n < 2 || n > kMaxLength) throw std::invalid_argument("CyclicCode: length must lie in [2, 10^6]");
  if (gcd(field->order(), n) != 1) {
    throw std::invalid_argument("CyclicCode: gcd(q, n) = gcd(" + std::to_string(field->order()) + ", " +
                                std::to_string(n) + ") != 1");
  }
  std::vector<u64> reduced;
  reduced.reserve(seeds.size());
  for (u64 s : seeds) reduced.push_back(s % n);
  auto zeros = coset_closure(reduced, n, field->order() % n);
  return CyclicCode(n, std::move(field), std::move(zeros));
}

CyclicCode CyclicCode::bch(u64 n, FieldPtr field, u64 b, u64 delta) {
  if (delta < 2) throw std::invalid_argument("bch: designed distance must be >= 2");
  if (b < 1) throw std::invalid_argument("bch: b must be >= 1");
  if (n < 2) throw std::invalid_argument("bch: length must be >= 2");
  std::vector<u64> seeds;
  for (u64 i = 0; i + 1 < delta && i < n; ++i) seeds.push_back((b + i) % n);
  return from_defining_set(n, std::move(field), seeds);
}

const LinearCode& CyclicCode::linear() const {
  std::call_once(cache_->once, [this] {
    if (zeros_.size() == n_) {
      cache_->code.emplace(field_, n_, std::vector<FieldElem>{});
    } else {
      cache_->code.emplace(field_, n_, generator_matrix(*this).entries);
    }
  });
  return *cache_->code;
}

std::vector<FieldElem> generator_polynomial(const CyclicCode& code) {
  const FieldPtr& F = code.field();
  const u64 n = code.length();
  const u64 q = F->order();
  if (code.defining_set().empty()) return {F->one()};

  const u64 e = multiplicative_order(q % n, n);
  const u128 big_order = [&] {
    u128 acc = 1;
    for (u64 i = 0; i < e; ++i) {
      acc *= q;
      if (acc > kMaxFieldOrder) {
        throw CapExceeded("generator_polynomial: splitting field GF(" + std::to_string(q) + "^" + std::to_string(e) +
                              ") exceeds the 2^40 cap",
                          0);
      }
    }
    return acc;
  }();
  const FieldPtr big = Field::make(F->characteristic(), F->degree() * static_cast<unsigned>(e));
  const FieldElem beta = big->pow(big->primitive_element(), static_cast<u64>((big_order - 1) / n));

  std::vector<FieldElem> roots;
  roots.reserve(code.defining_set().size());
  for (u64 z : code.defining_set()) roots.push_back(big->pow(beta, z));
  const Poly g = poly_product_over_roots(*big, roots);

  std::vector<FieldElem> out(g.coeffs.size());
  if (big == F) {
    out = g.coeffs;
  } else {
    const Embedding emb(F, big);
    for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
      const auto pre = emb.preimage(g.coeffs[i]);
      if (!pre) throw std::logic_error("generator_polynomial: coefficient escaped GF(q)");
      out[i] = *pre;
    }
  }
  return out;
}

GeneratorMatrix generator_matrix(const CyclicCode& code) {
  const u64 n = code.length();
  if (code.defining_set().size() == n) throw std::invalid_argument("generator_matrix: zero code has no generator");
  const auto g = generator_polynomial(code);
  const u64 k = n - (g.size() - 1);
  GeneratorMatrix m{k, n, std::vector<FieldElem>(k * n, code.field()->zero()), false};
  for (u64 j = 0; j < k; ++j) {
    for (u64 i = 0; i < g.size(); ++i) m.entries[j * n + j + i] = g[i];
  }
  return m;
}

GeneratorMatrix canonical_form(const CyclicCode& code) { return code.linear().canonical(); }

LinearCode apply_perm(const CyclicCode& code, const Permutation& sigma) { return code.linear().permuted(sigma); }

bool is_automorphism(const LinearCode& code, const Permutation& sigma) { return code.permutes_onto(sigma, code); }

bool is_automorphism(const CyclicCode& code, const Permutation& sigma) {
  return is_automorphism(code.linear(), sigma);
}

std::vector<u64> multiplier_stabilizer(const CyclicCode& code) {
  const u64 n = code.length();
  std::vector<bool> in_z(n, false);
  for (u64 z : code.defining_set()) in_z[z] = true;
  std::vector<u64> out;
  for (u64 a = 1; a < n; ++a) {
    if (gcd(a, n) != 1) continue;
    bool fixes = true;
    for (u64 z : code.defining_set()) {
      if (!in_z[mul_mod(a, z, n)]) {
        fixes = false;
        break;
      }
    }
    if (fixes) out.push_back(a);
  }
  if (n <= 200) {
    // Spot-check the defining-set shortcut against the matrix action.
    std::vector<u64> sample{out.front(), out.back()};
    for (u64 a = 2; a < n; ++a) {
      if (gcd(a, n) == 1 && !std::binary_search(out.begin(), out.end(), a)) {
        sample.push_back(a);
        break;
      }
    }
    for (u64 a : sample) {
      const bool expected = std::binary_search(out.begin(), out.end(), a);
      if (is_automorphism(code, multiplier(n, a)) != expected) {
        throw std::logic_error("multiplier_stabilizer: defining-set test disagrees with the matrix action at a = " +
                               std::to_string(a));
      }
    }
  }
  return out;
}

CyclicCode dual(const CyclicCode& code) {
  const u64 n = code.length();
  std::vector<bool> neg_z(n, false);
  for (u64 z : code.defining_set()) neg_z[(n - z) % n] = true;
  std::vector<u64> zeros;
  for (u64 x = 0; x < n; ++x) {
    if (!neg_z[x]) zeros.push_back(x);
  }
  return CyclicCode::from_defining_set(n, code.field(), zeros);
}

bool is_elementary(const CyclicCode& code) {
  const auto& z = code.defining_set();
  const u64 n = code.length();
  if (z.empty() || z.size() == n) return true;
  if (z.size() == 1 && z[0] == 0) return true;
  return z.size() == n - 1 && z[0] == 1;
}

u64 min_distance(const LinearCode& code) {
  if (code.dimension() == 0) throw std::invalid_argument("min_distance: zero code");
  const u64 q = code.field()->order();
  if (capped_power(q, code.dimension(), kBruteForceCap) <= kBruteForceCap) {
    u64 best = code.length();
    bool first = true;
    for_each_codeword(code, [&](std::span<const FieldElem> w) {
      if (first) {
        first = false;
        return;
      }
      best = std::min(best, weight(w));
    });
    return best;
  }
  if (code.length() > 64) {
    throw CapExceeded("min_distance: q^k exceeds the brute-force cap and n > 64", 0);
  }
  return information_set_distance(code);
}

u64 min_distance(const CyclicCode& code) { return min_distance(code.linear()); }

std::optional<std::vector<u64>> weight_distribution(const LinearCode& code, u64 cap) {
  if (capped_power(code.field()->order(), code.dimension(), cap) > cap) return std::nullopt;
  std::vector<u64> dist(code.length() + 1, 0);
  for_each_codeword(code, [&](std::span<const FieldElem> w) { ++dist[weight(w)]; });
  return dist;
}

}  // namespace cycaut
