#include "cycaut/equivalence.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace cycaut {

namespace {

struct CodeOps {
  using Object = CyclicCode;
  static u64 length(const CyclicCode& c) { return c.length(); }
  static void check_category(const CyclicCode& a, const CyclicCode& b) {
    if (a.q() != b.q()) throw std::invalid_argument("equivalence: codes over different fields");
  }
  static bool maps(const CyclicCode& a, const Permutation& s, const CyclicCode& b) {
    return a.linear().permutes_onto(s, b.linear());
  }
  static bool verify(const CyclicCode& a, const Permutation& s, const CyclicCode& b) {
    return apply_perm(a, s) == b.linear();
  }
  static void warm(const CyclicCode& a) { (void)a.linear(); }
};

struct GraphOps {
  using Object = CirculantGraph;
  static u64 length(const CirculantGraph& g) { return g.order(); }
  static void check_category(const CirculantGraph& a, const CirculantGraph& b) {
    if (a.directed() != b.directed()) throw std::invalid_argument("equivalence: graph and digraph");
  }
  static bool maps(const CirculantGraph& a, const Permutation& s, const CirculantGraph& b) {
    return maps_onto(a, s, b);
  }
  static bool verify(const CirculantGraph& a, const Permutation& s, const CirculantGraph& b) {
    return apply_perm(a, s) == edges(b);
  }
  static void warm(const CirculantGraph&) {}
};

template <class Ops>
void reverify(const typename Ops::Object& a, const EquivalenceWitness& w, const typename Ops::Object& b) {
  if (!Ops::verify(a, w.permutation(), b)) {
    throw std::logic_error("equivalence: witness " + w.witness_string() + " failed re-verification");
  }
}

template <class Ops>
EquivalenceWitness prime_search(const typename Ops::Object& a, const typename Ops::Object& b) {
  Ops::check_category(a, b);
  const u64 p = Ops::length(a);
  if (!is_prime(p)) throw std::invalid_argument("equivalent_prime: length " + std::to_string(p) + " is not prime");
  EquivalenceWitness w;
  w.search_space = "multipliers of Z_" + std::to_string(p) + ", |.|=" + std::to_string(p - 1);
  if (auto why = equivalence_precheck(a, b)) {
    w.reason = *why;
    return w;
  }
  for (u64 m = 1; m < p; ++m) {
    ++w.candidates_checked;
    if (Ops::maps(a, multiplier(p, m), b)) {
      w.verdict = Verdict::Equivalent;
      w.witness = AffineMap(p, m, 0);
      reverify<Ops>(a, w, b);
      return w;
    }
  }
  return w;
}

// First index in [0, total) whose element satisfies pred, scanning in order.
template <class Pred>
std::optional<u64> first_hit(const QGroupId& id, u64 total, const Pred& pred, unsigned jobs) {
  if (jobs <= 1) {
    for (u64 idx = 0; idx < total; ++idx) {
      if (pred(element_at(id, idx))) return idx;
    }
    return std::nullopt;
  }
  constexpr u64 kChunk = 512;
  std::atomic<u64> best{total};
  std::atomic<u64> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    try {
      while (true) {
        const u64 start = next.fetch_add(1) * kChunk;
        if (start >= total || start >= best.load()) return;
        const u64 stop = std::min(total, start + kChunk);
        for (u64 idx = start; idx < stop && idx < best.load(); ++idx) {
          if (pred(element_at(id, idx))) {
            u64 cur = best.load();
            while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
            }
            break;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mu);
      if (!error) error = std::current_exception();
      best.store(0);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  const u64 hit = best.load();
  if (hit == total) return std::nullopt;
  return hit;
}

template <class Ops>
EquivalenceWitness prime_power_search(const typename Ops::Object& a, const typename Ops::Object& b,
                                      const SearchOptions& opts) {
  Ops::check_category(a, b);
  const u64 n = Ops::length(a);
  const auto len = PrimePowerLength::of(n);
  if (!len) throw std::invalid_argument("equivalent_prime_power: length is not a prime power");
  if (len->p() == 2) throw Unsupported("equivalent_prime_power: p = 2 is not supported");
  if (len->m() < 2) throw std::invalid_argument("equivalent_prime_power: needs m >= 2");

  EquivalenceWitness w;
  if (auto why = equivalence_precheck(a, b)) {
    w.reason = *why;
    w.search_space = "none (precheck)";
    return w;
  }
  Ops::warm(a);
  Ops::warm(b);
  const auto pa = sylow_exponent(a);
  const auto pb = sylow_exponent(b);
  if (pa.exact && pb.exact && pa.s != pb.s) {
    w.reason = "Sylow p-subgroups differ: p^" + std::to_string(pa.s) + " vs p^" + std::to_string(pb.s);
    w.search_space = "none (Sylow data)";
    return w;
  }
  // Search from an object whose Sylow subgroup is known exactly.
  const bool swapped = !pa.exact && pb.exact;
  const auto& from = swapped ? b : a;
  const auto& to = swapped ? a : b;
  const auto& probe = swapped ? pb : pa;

  unsigned bound = 0;
  if (probe.exact) {
    bound = probe.s - len->m() + 1;
  } else {
    bound = static_cast<unsigned>(len->p() - 1);
    w.warnings.push_back("Sylow probe reached I = p - 2; searching Q^" + std::to_string(bound) +
                         " without the P = Q_1^I guarantee");
  }
  const QGroupId id(*len, bound);
  const u64 total = id.cardinality();
  w.search_space = id.name() + ", |.|=" + std::to_string(total);
  if (total > opts.cap) {
    throw CapExceeded("equivalent_prime_power: |" + id.name() + "| = " + std::to_string(total) +
                          " exceeds the cap " + std::to_string(opts.cap),
                      total);
  }

  const auto hit = first_hit(
      id, total, [&](const PolyPerm& f) { return Ops::maps(from, f.permutation(), to); }, opts.jobs);
  if (!hit) {
    // Without P = Q_1^I an empty Q^(p-1) proves nothing.
    if (!probe.exact) {
      throw Unsupported("equivalent_prime_power: inconclusive, no witness in " + w.search_space +
                        " and the Sylow probe stopped at I = p - 2");
    }
    w.candidates_checked = total;
    return w;
  }
  w.candidates_checked = *hit + 1;
  PolyPerm f = element_at(id, *hit);
  if (swapped) f = invert(f);
  w.verdict = Verdict::Equivalent;
  if (f.degree() <= 1) {
    w.witness = AffineMap(n, f.coefficient(1), f.coefficient(0));
  } else {
    w.witness = f;
  }
  reverify<Ops>(a, w, b);
  return w;
}

template <class Ops>
EquivalenceWitness dispatch(const typename Ops::Object& a, const typename Ops::Object& b, const SearchOptions& opts) {
  Ops::check_category(a, b);
  const u64 n = Ops::length(a);
  if (n != Ops::length(b)) {
    EquivalenceWitness w;
    w.reason = "lengths differ";
    w.search_space = "none (precheck)";
    return w;
  }
  const auto len = PrimePowerLength::of(n);
  if (!len) throw Unsupported("equivalent: length " + std::to_string(n) + " is neither prime nor a prime power");
  if (len->m() == 1) return prime_search<Ops>(a, b);
  if (len->p() == 2) throw Unsupported("equivalent: lengths 2^m are not supported");
  return prime_power_search<Ops>(a, b, opts);
}

}  // namespace

Permutation EquivalenceWitness::permutation() const {
  if (const auto* m = std::get_if<AffineMap>(&witness)) return m->permutation();
  if (const auto* f = std::get_if<PolyPerm>(&witness)) return f->permutation();
  throw std::logic_error("EquivalenceWitness: no witness");
}

std::string EquivalenceWitness::witness_string() const {
  if (const auto* m = std::get_if<AffineMap>(&witness)) return m->to_string();
  if (const auto* f = std::get_if<PolyPerm>(&witness)) return f->to_string();
  return "none";
}

std::optional<std::string> equivalence_precheck(const CyclicCode& a, const CyclicCode& b) {
  if (a.length() != b.length()) return "lengths differ";
  if (a.q() != b.q()) return "fields differ";
  if (a.dimension() != b.dimension()) {
    return "dimensions differ (" + std::to_string(a.dimension()) + " vs " + std::to_string(b.dimension()) + ")";
  }
  const auto wa = weight_distribution(a.linear());
  if (wa) {
    const auto wb = weight_distribution(b.linear());
    if (wb && *wa != *wb) return "weight distributions differ";
  }
  return std::nullopt;
}

std::optional<std::string> equivalence_precheck(const CirculantGraph& a, const CirculantGraph& b) {
  if (a.order() != b.order()) return "orders differ";
  if (a.directed() != b.directed()) return "directedness differs";
  if (a.edge_count() != b.edge_count()) {
    return "edge counts differ (" + std::to_string(a.edge_count()) + " vs " + std::to_string(b.edge_count()) + ")";
  }
  return std::nullopt;
}

EquivalenceWitness equivalent_prime(const CyclicCode& a, const CyclicCode& b) { return prime_search<CodeOps>(a, b); }

EquivalenceWitness equivalent_prime(const CirculantGraph& a, const CirculantGraph& b) {
  return prime_search<GraphOps>(a, b);
}

EquivalenceWitness equivalent_prime_power(const CyclicCode& a, const CyclicCode& b, const SearchOptions& opts) {
  return prime_power_search<CodeOps>(a, b, opts);
}

EquivalenceWitness equivalent_prime_power(const CirculantGraph& a, const CirculantGraph& b,
                                          const SearchOptions& opts) {
  return prime_power_search<GraphOps>(a, b, opts);
}

EquivalenceWitness equivalent(const CyclicCode& a, const CyclicCode& b, const SearchOptions& opts) {
  return dispatch<CodeOps>(a, b, opts);
}

EquivalenceWitness equivalent(const CirculantGraph& a, const CirculantGraph& b, const SearchOptions& opts) {
  return dispatch<GraphOps>(a, b, opts);
}

}  // namespace cycaut
