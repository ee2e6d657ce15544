#pragma once

// Automorphism groups of cyclic codes and circulant graphs: Algorithm A for
// prime length, Golay and projective (PGammaL) detection, and the Sylow probe
// for lengths p^m.

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cycaut/brand.hpp"
#include "cycaut/codes.hpp"
#include "cycaut/graphs.hpp"
#include "cycaut/permutation.hpp"

namespace cycaut {

using BigInt = boost::multiprecision::cpp_int;

enum class AutTag { Symmetric, AffineSubgroup, FullAffine, Projective, GolayBinary, GolayTernary, Imprimitive };

std::string to_string(AutTag tag);

struct SymmetricEvidence {
  bool elementary = true;
};

struct AffineEvidence {
  /// The multiplier group A; Aut = {x -> a x + b : a in A}.
  std::vector<u64> multipliers;
};

struct ProjectiveEvidence {
  unsigned d = 0;
  u64 t = 0;
  /// k such that labelling coordinate i by <gamma^(k i)> makes every
  /// generator an automorphism.
  u64 labeling_unit = 1;
};

struct GolayEvidence {
  u64 dimension = 0;
  /// Present when the weight check ran.
  std::optional<u64> min_distance;
};

struct SylowProbe {
  /// Largest i in [1, p-2] with f_i in Aut.
  unsigned I = 1;
  /// p^s is the order of a Sylow p-subgroup (a lower bound unless exact).
  unsigned s = 1;
  bool at_cap = false;
  bool exact = true;
  /// Number of is_automorphism calls made.
  unsigned probes = 0;
};

struct ImprimitiveEvidence {
  /// Absent for p = 2.
  std::optional<SylowProbe> sylow;
  /// Orbits of T^(p^(m-1)).
  std::vector<std::vector<u64>> blocks;
  std::vector<u64> multipliers;
};

using AutEvidence =
    std::variant<SymmetricEvidence, AffineEvidence, ProjectiveEvidence, GolayEvidence, ImprimitiveEvidence>;

struct AutClassification {
  AutTag tag = AutTag::Symmetric;
  u64 n = 0;
  AutEvidence evidence;
  /// Exact order, or a lower bound when !order_exact.
  BigInt order;
  bool order_exact = true;
  /// Known members of Aut, each checked with is_automorphism.
  std::vector<Permutation> generators;

  /// `S_7`, `C_8 x| C_17`, `AGL(1,7)`, `PGammaL(3,2)`, `M_23`, `PSL(2,11)`, ...
  std::string name() const;
};

/// Points of PG(d-1, t) labelled by Z_n, n = (t^d - 1)/(t - 1): coordinate i
/// is the point spanned by gamma^i, gamma the fixed primitive element of
/// GF(t^d). The shift i -> i + 1 is multiplication by gamma.
class SingerLabeling {
 public:
  SingerLabeling(unsigned d, u64 t);

  unsigned d() const noexcept { return d_; }
  u64 t() const noexcept { return t_; }
  u64 points() const noexcept { return n_; }
  /// Normalized GF(t)-coordinates of point i (first nonzero entry is 1).
  std::vector<FieldElem> point(u64 i) const;
  /// Coordinate of the point spanned by v.
  u64 index_of(const std::vector<FieldElem>& v) const;

  /// Coordinate permutations of a generating set of PGammaL(d, t): a
  /// diagonal matrix, a transvection, a transposition and a d-cycle of
  /// coordinates, and the Frobenius of GF(t^d).
  std::vector<Permutation> pgaml_generators() const;
  /// The Singer cycle itself (the shift).
  Permutation singer_cycle() const { return complete_cycle(n_); }

 private:
  Permutation from_map(const std::function<std::vector<FieldElem>(const std::vector<FieldElem>&)>& m) const;

  unsigned d_;
  u64 t_;
  u64 n_;
  std::vector<FieldElem> unpack(u64 packed) const;
  u64 pack(const std::vector<FieldElem>& v) const;

  FieldPtr big_;                          // GF(t^d)
  std::vector<FieldElem> sub_;            // GF(t) as a subfield, 0 first
  std::vector<std::uint32_t> sub_index_;  // element of GF(t^d) -> position in sub_
  std::vector<std::uint32_t> coords_;     // i -> packed coordinates of gamma^i
  std::vector<std::uint32_t> index_;      // packed coordinates -> point
};

/// a t^(d(d-1)/2) prod_{i=2..d} (t^i - 1) for t = r^a.
BigInt pgaml_order(unsigned d, u64 t);
BigInt factorial(u64 n);

/// Requires a non-elementary code of prime length that passes the Golay and
/// projective screens; the error names the failing screen.
AutClassification algorithm_a(const CyclicCode& code);
std::optional<AutClassification> detect_golay(const CyclicCode& code);
/// Whether PGammaL(d, t), placed through some Singer labelling, fixes the code.
std::optional<u64> projective_labeling(const CyclicCode& code, unsigned d, u64 t);
bool is_projective(const CyclicCode& code, unsigned d, u64 t);

/// Binary search for I over f_1..f_{p-2}; see SylowProbe.
SylowProbe sylow_exponent(const PrimePowerLength& len, const std::function<bool(const Permutation&)>& in_aut);
SylowProbe sylow_exponent(const CyclicCode& code);
SylowProbe sylow_exponent(const CirculantGraph& g);

/// Throws Unsupported for lengths that are neither prime nor prime powers.
AutClassification classify(const CyclicCode& code);
AutClassification classify(const CirculantGraph& g);

}  // namespace cycaut
