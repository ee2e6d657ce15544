#pragma once

// Permutation equivalence of cyclic codes and of circulant graphs. Prime
// lengths need only multipliers; lengths p^m (p odd) search Q^(s-m+1) where
// p^s is the order of a Sylow p-subgroup of Aut of the first object.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cycaut/autgroup.hpp"
#include "cycaut/brand.hpp"
#include "cycaut/codes.hpp"
#include "cycaut/graphs.hpp"
#include "cycaut/permutation.hpp"

namespace cycaut {

enum class Verdict { Equivalent, NotEquivalent };

struct EquivalenceWitness {
  Verdict verdict = Verdict::NotEquivalent;
  /// Maps the first object onto the second when Equivalent.
  std::variant<std::monostate, AffineMap, PolyPerm> witness;
  std::string search_space;
  u64 candidates_checked = 0;
  /// Why the verdict was reached early (precheck, Sylow data), if it was.
  std::string reason;
  std::vector<std::string> warnings;

  bool equivalent() const noexcept { return verdict == Verdict::Equivalent; }
  /// The witness as a permutation; throws when there is none.
  Permutation permutation() const;
  std::string witness_string() const;
};

struct SearchOptions {
  u64 cap = kDefaultEnumerationCap;
  unsigned jobs = 1;
};

/// Some permutation-invariant differs: the reason, or nothing.
std::optional<std::string> equivalence_precheck(const CyclicCode& a, const CyclicCode& b);
std::optional<std::string> equivalence_precheck(const CirculantGraph& a, const CirculantGraph& b);

/// Scans the p - 1 multipliers.
EquivalenceWitness equivalent_prime(const CyclicCode& a, const CyclicCode& b);
EquivalenceWitness equivalent_prime(const CirculantGraph& a, const CirculantGraph& b);

/// When neither Sylow probe is exact, a failed search throws Unsupported
/// instead of returning NotEquivalent.
EquivalenceWitness equivalent_prime_power(const CyclicCode& a, const CyclicCode& b, const SearchOptions& opts = {});
EquivalenceWitness equivalent_prime_power(const CirculantGraph& a, const CirculantGraph& b,
                                          const SearchOptions& opts = {});

/// Dispatches on the length. Throws Unsupported for other lengths and
/// for powers of 2.
EquivalenceWitness equivalent(const CyclicCode& a, const CyclicCode& b, const SearchOptions& opts = {});
EquivalenceWitness equivalent(const CirculantGraph& a, const CirculantGraph& b, const SearchOptions& opts = {});

}  // namespace cycaut
