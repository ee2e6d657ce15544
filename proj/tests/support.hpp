#pragma once

// Brute-force oracles shared by the unit and acceptance tests.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include <cycaut/codes.hpp>
#include <cycaut/permutation.hpp>

namespace cycaut::testing {

/// Calls fn on every permutation of {0..n-1} until it returns true.
template <class Fn>
std::optional<Permutation> find_permutation(u64 n, Fn&& fn) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  do {
    Permutation s(img);
    if (fn(s)) return s;
  } while (std::next_permutation(img.begin(), img.end()));
  return std::nullopt;
}

template <class Fn>
u64 count_permutations(u64 n, Fn&& fn) {
  u64 count = 0;
  find_permutation(n, [&](const Permutation& s) {
    if (fn(s)) ++count;
    return false;
  });
  return count;
}

/// Random union of q-cyclotomic cosets mod n.
inline CyclicCode random_cyclic_code(u64 n, const FieldPtr& f, std::mt19937_64& rng) {
  const auto part = cyclotomic_cosets(n, f->order() % n);
  std::vector<u64> seeds;
  for (const auto& c : part.cosets) {
    if (rng() % 2) seeds.push_back(c.front());
  }
  return CyclicCode::from_defining_set(n, f, seeds);
}

/// Every cyclic code of length n over f.
inline std::vector<CyclicCode> all_cyclic_codes(u64 n, const FieldPtr& f) {
  const auto part = cyclotomic_cosets(n, f->order() % n);
  std::vector<CyclicCode> out;
  for (u64 mask = 0; mask < (u64{1} << part.cosets.size()); ++mask) {
    std::vector<u64> seeds;
    for (std::size_t i = 0; i < part.cosets.size(); ++i) {
      if (mask >> i & 1) seeds.push_back(part.cosets[i].front());
    }
    out.push_back(CyclicCode::from_defining_set(n, f, seeds));
  }
  return out;
}

/// The cyclic code with the same row space, if there is one.
inline std::optional<CyclicCode> as_cyclic(const LinearCode& code) {
  for (auto& c : all_cyclic_codes(code.length(), code.field())) {
    if (c.dimension() == code.dimension() && c.linear() == code) return c;
  }
  return std::nullopt;
}

inline bool brute_force_equivalent(const LinearCode& a, const LinearCode& b) {
  if (a.dimension() != b.dimension()) return false;
  return find_permutation(a.length(), [&](const Permutation& s) { return a.permutes_onto(s, b); }).has_value();
}

}  // namespace cycaut::testing
