#pragma once

// Linear and cyclic codes over GF(q). A cyclic code is held by its defining
// set Z (a union of q-cyclotomic cosets mod n); the codewords are the c(x)
// with c(beta^z) = 0 for every z in Z. Linear codes are identified by the
// reduced row echelon form of a generator matrix.

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cycaut/arithmetic.hpp"
#include "cycaut/finite_field.hpp"
#include "cycaut/permutation.hpp"

namespace cycaut {

/// Brute-force enumeration cap (codewords) for min_distance / weights.
inline constexpr u64 kBruteForceCap = 10'000'000;

struct GeneratorMatrix {
  u64 rows = 0;
  u64 cols = 0;
  /// Row-major, rows * cols entries.
  std::vector<FieldElem> entries;
  bool canonical = false;

  FieldElem at(u64 i, u64 j) const { return entries[i * cols + j]; }
  std::span<const FieldElem> row(u64 i) const { return {entries.data() + i * cols, cols}; }
  bool operator==(const GeneratorMatrix&) const = default;
};

/// Row space of a matrix, stored in canonical form.
class LinearCode {
 public:
  /// Rows may be dependent; zero rows are dropped by the reduction.
  LinearCode(FieldPtr field, u64 n, std::vector<FieldElem> rows_flat);

  const FieldPtr& field() const noexcept { return field_; }
  u64 length() const noexcept { return n_; }
  u64 dimension() const noexcept { return pivots_.size(); }
  const GeneratorMatrix& canonical() const noexcept { return rref_; }
  const std::vector<u64>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const FieldElem> word) const;
  /// Coordinate i of every codeword moves to position sigma(i).
  LinearCode permuted(const Permutation& sigma) const;
  /// Whether permuted(sigma) == target, without building the permuted code.
  bool permutes_onto(const Permutation& sigma, const LinearCode& target) const;

  bool operator==(const LinearCode& o) const;

 private:
  FieldPtr field_;
  u64 n_;
  GeneratorMatrix rref_;
  std::vector<u64> pivots_;
};

class CyclicCode {
 public:
  /// Closes the seeds under multiplication by q. Requires gcd(q, n) = 1.
  static CyclicCode from_defining_set(u64 n, FieldPtr field, std::span<const u64> seeds);
  /// Defining set covers b, b+1, ..., b+delta-2.
  static CyclicCode bch(u64 n, FieldPtr field, u64 b, u64 delta);

  u64 length() const noexcept { return n_; }
  const FieldPtr& field() const noexcept { return field_; }
  u64 q() const noexcept { return field_->order(); }
  const std::vector<u64>& defining_set() const noexcept { return zeros_; }
  u64 dimension() const noexcept { return n_ - zeros_.size(); }

  /// Generator-matrix view, built on first use and shared between copies.
  const LinearCode& linear() const;

  bool operator==(const CyclicCode& o) const {
    return n_ == o.n_ && q() == o.q() && zeros_ == o.zeros_;
  }

 private:
  struct Cache;
  CyclicCode(u64 n, FieldPtr field, std::vector<u64> zeros);

  u64 n_;
  FieldPtr field_;
  std::vector<u64> zeros_;
  std::shared_ptr<Cache> cache_;
};

/// prod_{z in Z} (x - beta^z) with coefficients in GF(q), lowest first, where
/// beta = primitive(GF(q^e))^((q^e - 1)/n) and e = ord_n(q).
std::vector<FieldElem> generator_polynomial(const CyclicCode& code);
/// Cyclic shifts of the generator polynomial. Throws for the zero code.
GeneratorMatrix generator_matrix(const CyclicCode& code);
GeneratorMatrix canonical_form(const CyclicCode& code);

LinearCode apply_perm(const CyclicCode& code, const Permutation& sigma);
bool is_automorphism(const CyclicCode& code, const Permutation& sigma);
bool is_automorphism(const LinearCode& code, const Permutation& sigma);

/// Units a with a*Z = Z, which is exactly when the multiplier fixes the code.
std::vector<u64> multiplier_stabilizer(const CyclicCode& code);

/// Defining set Z_n \ (-Z).
CyclicCode dual(const CyclicCode& code);
/// Zero code, full space, repetition code or its dual.
bool is_elementary(const CyclicCode& code);

/// Exact minimum weight. Brute force when q^k <= kBruteForceCap, otherwise an
/// information-set search for n <= 64. Throws CapExceeded beyond that and
/// std::invalid_argument for the zero code.
u64 min_distance(const LinearCode& code);
u64 min_distance(const CyclicCode& code);

/// Number of codewords of each weight 0..n, when q^k <= cap.
std::optional<std::vector<u64>> weight_distribution(const LinearCode& code, u64 cap = 1'000'000);

}  // namespace cycaut
