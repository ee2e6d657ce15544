#include "cycaut/autgroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cycaut {

namespace {

using InAut = std::function<bool(const Permutation&)>;

void verify_generators(const AutClassification& c, const InAut& in_aut) {
  for (const auto& g : c.generators) {
    if (!in_aut(g)) {
      throw std::logic_error("classify: claimed generator " + g.cycle_notation() + " is not an automorphism");
    }
  }
}

// A generator of the cyclic group A (units mod an odd prime power or a prime).
u64 cyclic_generator(const std::vector<u64>& a, u64 n) {
  for (u64 g : a) {
    if (multiplicative_order(g, n) == a.size()) return g;
  }
  throw std::logic_error("cyclic_generator: multiplier group is not cyclic");
}

std::vector<Permutation> multiplier_generators(const std::vector<u64>& a, u64 n) {
  std::vector<Permutation> out;
  if (a.size() <= 1) return out;
  if (n % 2 == 1) {
    out.push_back(multiplier(n, cyclic_generator(a, n)));
  } else {
    for (u64 x : a) {
      if (x != 1) out.push_back(multiplier(n, x));
    }
  }
  return out;
}

AutClassification affine_classification(u64 p, std::vector<u64> a) {
  AutClassification c;
  c.n = p;
  c.tag = a.size() == p - 1 ? AutTag::FullAffine : AutTag::AffineSubgroup;
  c.order = BigInt(p) * a.size();
  c.generators.push_back(complete_cycle(p));
  for (auto& g : multiplier_generators(a, p)) c.generators.push_back(std::move(g));
  c.evidence = AffineEvidence{std::move(a)};
  return c;
}

AutClassification symmetric_classification(u64 n) {
  AutClassification c;
  c.n = n;
  c.tag = AutTag::Symmetric;
  c.order = factorial(n);
  c.evidence = SymmetricEvidence{true};
  c.generators.push_back(complete_cycle(n));
  if (n >= 2) c.generators.push_back(transposition(n, 0, 1));
  return c;
}

AutClassification imprimitive_classification(const PrimePowerLength& len, std::vector<u64> a,
                                             std::optional<SylowProbe> sylow) {
  const u64 n = len.n();
  AutClassification c;
  c.n = n;
  c.tag = AutTag::Imprimitive;
  c.order_exact = false;
  c.generators.push_back(complete_cycle(n));
  for (auto& g : multiplier_generators(a, n)) c.generators.push_back(std::move(g));
  BigInt affine_part = BigInt(n) * a.size();
  c.order = affine_part;
  if (sylow) {
    const BigInt sylow_order = boost::multiprecision::pow(BigInt(len.p()), sylow->s);
    c.order = affine_part * sylow_order / boost::multiprecision::gcd(affine_part, sylow_order);
    if (len.m() >= 2) {
      for (unsigned i = 2; i <= sylow->I; ++i) c.generators.push_back(f_i(len, i).permutation());
      if (sylow->s > len.m()) c.generators.push_back(multiplier(n, 1 + len.block_stride()));
    }
  }
  c.evidence = ImprimitiveEvidence{sylow, orbits(power(complete_cycle(n), static_cast<i64>(len.block_stride()))),
                                   std::move(a)};
  return c;
}

bool power_of(u64 t, u64 r) {
  if (t < r) return false;
  while (t % r == 0) t /= r;
  return t == 1;
}

std::optional<AutClassification> projective_screen(const CyclicCode& code) {
  const u64 r = code.field()->characteristic();
  for (const auto& dec : projective_length_decompositions(code.length(), 64)) {
    if (dec.d < 3 || !power_of(dec.t, r)) continue;
    if (const auto k = projective_labeling(code, dec.d, dec.t)) {
      AutClassification c;
      c.n = code.length();
      c.tag = AutTag::Projective;
      c.order = pgaml_order(dec.d, dec.t);
      c.evidence = ProjectiveEvidence{dec.d, dec.t, *k};
      const SingerLabeling lab(dec.d, dec.t);
      const auto mk = multiplier(c.n, *k);
      const auto mk_inv = inverse(mk);
      c.generators.push_back(complete_cycle(c.n));
      for (const auto& g : lab.pgaml_generators()) c.generators.push_back(compose(mk_inv, compose(g, mk)));
      return c;
    }
  }
  return std::nullopt;
}

AutClassification algorithm_a_unchecked(const CyclicCode& code) {
  return affine_classification(code.length(), multiplier_stabilizer(code));
}

}  // namespace

std::string to_string(AutTag tag) {
  switch (tag) {
    case AutTag::Symmetric: return "Symmetric";
    case AutTag::AffineSubgroup: return "AffineSubgroup";
    case AutTag::FullAffine: return "FullAffine";
    case AutTag::Projective: return "Projective";
    case AutTag::GolayBinary: return "GolayBinary";
    case AutTag::GolayTernary: return "GolayTernary";
    case AutTag::Imprimitive: return "Imprimitive";
  }
  return "?";
}

std::string AutClassification::name() const {
  const std::string ns = std::to_string(n);
  switch (tag) {
    case AutTag::Symmetric: return "S_" + ns;
    case AutTag::FullAffine: return "AGL(1," + ns + ")";
    case AutTag::AffineSubgroup: {
      const auto k = std::get<AffineEvidence>(evidence).multipliers.size();
      return k == 1 ? "C_" + ns : "C_" + std::to_string(k) + " x| C_" + ns;
    }
    case AutTag::Projective: {
      const auto& e = std::get<ProjectiveEvidence>(evidence);
      return "PGammaL(" + std::to_string(e.d) + "," + std::to_string(e.t) + ")";
    }
    case AutTag::GolayBinary: return "M_23";
    case AutTag::GolayTernary: return "PSL(2,11)";
    case AutTag::Imprimitive: {
      const auto& e = std::get<ImprimitiveEvidence>(evidence);
      return "imprimitive (" + std::to_string(e.blocks.size()) + " blocks of " +
             std::to_string(e.blocks.empty() ? 0 : e.blocks.front().size()) + ")";
    }
  }
  return "?";
}

BigInt factorial(u64 n) {
  BigInt f = 1;
  for (u64 i = 2; i <= n; ++i) f *= i;
  return f;
}

std::optional<u64> projective_labeling(const CyclicCode& code, unsigned d, u64 t) {
  const u64 n = code.length();
  const auto pp = as_prime_power(t);
  if (!pp || d < 2) throw std::invalid_argument("is_projective: invalid (d, t)");
  const BigInt expected = (boost::multiprecision::pow(BigInt(t), d) - 1) / (t - 1);
  if (expected != n) throw std::invalid_argument("is_projective: n != (t^d - 1)/(t - 1)");
  if (pp->p != code.field()->characteristic()) {
    throw std::invalid_argument("is_projective: t is not a power of the field characteristic");
  }
  const SingerLabeling lab(d, t);
  const auto gens = lab.pgaml_generators();
  // Conjugates by the Frobenius multiplier give the same group, so one unit
  // per class k<r> is enough.
  const u64 r = pp->p % n;
  std::vector<bool> seen(n, false);
  constexpr unsigned kMaxClasses = 2000;
  unsigned tried = 0;
  for (u64 k = 1; k < n && tried < kMaxClasses; ++k) {
    if (gcd(k, n) != 1 || seen[k]) continue;
    for (u64 x = k; !seen[x]; x = mul_mod(x, r, n)) seen[x] = true;
    ++tried;
    const auto mk = multiplier(n, k);
    const auto mk_inv = inverse(mk);
    const bool all = std::all_of(gens.begin(), gens.end(), [&](const Permutation& g) {
      return is_automorphism(code, compose(mk_inv, compose(g, mk)));
    });
    if (all) return k;
  }
  return std::nullopt;
}

bool is_projective(const CyclicCode& code, unsigned d, u64 t) { return projective_labeling(code, d, t).has_value(); }

std::optional<AutClassification> detect_golay(const CyclicCode& code) {
  const u64 n = code.length();
  const u64 q = code.q();
  const u64 k = code.dimension();
  const u64 r = code.field()->characteristic();
  if (is_elementary(code)) return std::nullopt;
  AutClassification c;
  c.n = n;
  u64 expected_d = 0;
  if (n == 23 && r == 2 && (k == 11 || k == 12)) {
    c.tag = AutTag::GolayBinary;
    c.order = 10'200'960;
    expected_d = k == 12 ? 7 : 8;
  } else if (n == 11 && r == 3 && (k == 5 || k == 6)) {
    c.tag = AutTag::GolayTernary;
    c.order = 660;
    expected_d = k == 6 ? 5 : 6;
  } else {
    return std::nullopt;
  }
  GolayEvidence ev{k, std::nullopt};
  u64 words = 1;
  for (u64 i = 0; i < k && words <= kBruteForceCap; ++i) words *= q;
  if (words <= kBruteForceCap) {
    ev.min_distance = min_distance(code);
    if (*ev.min_distance != expected_d) {
      throw std::logic_error("detect_golay: minimum distance " + std::to_string(*ev.min_distance) +
                             " where " + std::to_string(expected_d) + " was expected");
    }
  }
  c.evidence = ev;
  c.generators.push_back(complete_cycle(n));
  for (auto& g : multiplier_generators(multiplier_stabilizer(code), n)) c.generators.push_back(std::move(g));
  verify_generators(c, [&](const Permutation& s) { return is_automorphism(code, s); });
  return c;
}

AutClassification algorithm_a(const CyclicCode& code) {
  const u64 n = code.length();
  if (!is_prime(n)) throw std::invalid_argument("algorithm_a: length " + std::to_string(n) + " is not prime");
  if (is_elementary(code)) throw std::invalid_argument("algorithm_a: elementary-code screen failed");
  if (detect_golay(code)) throw std::invalid_argument("algorithm_a: Golay screen failed");
  if (projective_screen(code)) throw std::invalid_argument("algorithm_a: projective screen failed");
  auto c = algorithm_a_unchecked(code);
  verify_generators(c, [&](const Permutation& s) { return is_automorphism(code, s); });
  return c;
}

SylowProbe sylow_exponent(const PrimePowerLength& len, const InAut& in_aut) {
  const u64 p = len.p();
  const unsigned m = len.m();
  if (p == 2) throw std::invalid_argument("sylow_exponent: p = 2 is not supported");
  SylowProbe pr;
  if (m == 1) {
    // p^1 already exhausts the p-part of p!.
    pr.I = 1;
    pr.s = 1;
    return pr;
  }
  auto probe = [&](const Permutation& s) {
    ++pr.probes;
    return in_aut(s);
  };
  if (!probe(complete_cycle(len.n()))) throw std::invalid_argument("sylow_exponent: object is not cyclic");
  const unsigned top = static_cast<unsigned>(p - 2);
  unsigned lo = 1;
  unsigned hi = top;
  while (lo < hi) {
    const unsigned mid = (lo + hi + 1) / 2;
    if (probe(f_i(len, mid).permutation())) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  pr.I = lo;
  if (pr.I + 1 <= top && probe(f_i(len, pr.I + 1).permutation())) {
    throw std::logic_error("sylow_exponent: f_" + std::to_string(pr.I + 1) + " passes above the located I");
  }
  if (pr.I >= 3 && !probe(f_i(len, pr.I - 1).permutation())) {
    throw std::logic_error("sylow_exponent: f_" + std::to_string(pr.I - 1) + " fails below the located I");
  }
  pr.at_cap = pr.I == top;
  if (pr.I >= 2) {
    pr.s = pr.I + m;
    pr.exact = !pr.at_cap;
  } else if (probe(multiplier(len.n(), 1 + len.block_stride()))) {
    // Q_1^1 = <T, x -> (1 + p^(m-1)) x> lies in Aut.
    pr.s = m + 1;
    pr.exact = !pr.at_cap;
  } else {
    // Every subgroup of order p^(m+1) containing T is Q_1^1, so P = <T>.
    pr.s = m;
    pr.exact = true;
  }
  return pr;
}

SylowProbe sylow_exponent(const CyclicCode& code) {
  const auto len = PrimePowerLength::of(code.length());
  if (!len) throw std::invalid_argument("sylow_exponent: length is not a prime power");
  return sylow_exponent(*len, [&](const Permutation& s) { return is_automorphism(code, s); });
}

SylowProbe sylow_exponent(const CirculantGraph& g) {
  const auto len = PrimePowerLength::of(g.order());
  if (!len) throw std::invalid_argument("sylow_exponent: order is not a prime power");
  return sylow_exponent(*len, [&](const Permutation& s) { return is_automorphism(g, s); });
}

AutClassification classify(const CyclicCode& code) {
  const u64 n = code.length();
  const InAut in_aut = [&](const Permutation& s) { return is_automorphism(code, s); };
  AutClassification c;
  if (is_elementary(code)) {
    c = symmetric_classification(n);
  } else if (auto g = detect_golay(code)) {
    return *g;
  } else if (auto pr = projective_screen(code)) {
    c = std::move(*pr);
  } else {
    const auto len = PrimePowerLength::of(n);
    if (!len) throw Unsupported("classify: length " + std::to_string(n) + " is neither prime nor a prime power");
    if (len->m() == 1) {
      // Non-elementary codes of length 2 or 3 do exist (e.g. over GF(4)), so
      // small primes go through Algorithm A as well.
      c = algorithm_a_unchecked(code);
    } else {
      std::optional<SylowProbe> sylow;
      if (len->p() != 2) sylow = sylow_exponent(*len, in_aut);
      c = imprimitive_classification(*len, multiplier_stabilizer(code), sylow);
    }
  }
  verify_generators(c, in_aut);
  return c;
}

AutClassification classify(const CirculantGraph& g) {
  const u64 n = g.order();
  const InAut in_aut = [&](const Permutation& s) { return is_automorphism(g, s); };
  AutClassification c;
  if (g.connection().empty() || g.connection().size() + 1 == n) {
    c = symmetric_classification(n);
  } else {
    const auto len = PrimePowerLength::of(n);
    if (!len) throw Unsupported("classify: order " + std::to_string(n) + " is neither prime nor a prime power");
    if (len->m() == 1) {
      c = affine_classification(n, multiplier_stabilizer(g));
    } else {
      std::optional<SylowProbe> sylow;
      if (len->p() != 2) sylow = sylow_exponent(*len, in_aut);
      c = imprimitive_classification(*len, multiplier_stabilizer(g), sylow);
    }
  }
  verify_generators(c, in_aut);
  return c;
}

}  // namespace cycaut
