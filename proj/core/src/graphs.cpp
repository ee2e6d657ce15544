#include "cycaut/graphs.hpp"

#include <algorithm>
#include <stdexcept>

namespace cycaut {

CirculantGraph::CirculantGraph(u64 n, std::vector<u64> connection, bool directed)
    : n_(n), conn_(std::move(connection)), directed_(directed) {
  if (n_ < 1 || n_ > kMaxLength) throw std::invalid_argument("CirculantGraph: order out of range");
  std::sort(conn_.begin(), conn_.end());
  conn_.erase(std::unique(conn_.begin(), conn_.end()), conn_.end());
  in_conn_.assign(n_, false);
  for (u64 s : conn_) {
    if (s >= n_) throw std::invalid_argument("CirculantGraph: connection element " + std::to_string(s) + " >= n");
    if (s == 0) throw std::invalid_argument("CirculantGraph: 0 in the connection set");
    in_conn_[s] = true;
  }
  if (!directed_) {
    for (u64 s : conn_) {
      if (!in_conn_[n_ - s]) {
        throw std::invalid_argument("CirculantGraph: undirected connection set is not closed under negation (" +
                                    std::to_string(s) + " without " + std::to_string(n_ - s) + ")");
      }
    }
  }
}

bool CirculantGraph::has_arc(u64 i, u64 j) const { return in_conn_[(j + n_ - i % n_) % n_]; }

CirculantGraph cycle_graph(u64 n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  return CirculantGraph(n, {1, n - 1}, false);
}

EdgeSet edges(const CirculantGraph& g) { return apply_perm(g, Permutation::identity(g.order())); }

EdgeSet apply_perm(const CirculantGraph& g, const Permutation& sigma) {
  if (sigma.degree() != g.order()) throw std::invalid_argument("apply_perm: degree mismatch");
  EdgeSet out{g.order(), g.directed(), {}};
  const u64 n = g.order();
  out.arcs.reserve(n * g.connection().size());
  for (u64 i = 0; i < n; ++i) {
    for (u64 s : g.connection()) {
      out.arcs.emplace_back(static_cast<std::uint32_t>(sigma(i)), static_cast<std::uint32_t>(sigma((i + s) % n)));
    }
  }
  std::sort(out.arcs.begin(), out.arcs.end());
  return out;
}

bool maps_onto(const CirculantGraph& g, const Permutation& sigma, const CirculantGraph& h) {
  if (sigma.degree() != g.order()) throw std::invalid_argument("maps_onto: degree mismatch");
  if (h.order() != g.order() || h.directed() != g.directed() || h.connection().size() != g.connection().size()) {
    return false;
  }
  // Equal arc counts, so containment is equality.
  const u64 n = g.order();
  for (u64 i = 0; i < n; ++i) {
    for (u64 s : g.connection()) {
      if (!h.has_arc(sigma(i), sigma((i + s) % n))) return false;
    }
  }
  return true;
}

bool is_automorphism(const CirculantGraph& g, const Permutation& sigma) { return maps_onto(g, sigma, g); }

std::vector<u64> multiplier_stabilizer(const CirculantGraph& g) {
  const u64 n = g.order();
  std::vector<u64> out;
  for (u64 a = 1; a < n || (n == 1 && a == 1); ++a) {
    if (gcd(a, n) != 1) continue;
    bool fixes = true;
    for (u64 s : g.connection()) {
      if (!std::binary_search(g.connection().begin(), g.connection().end(), mul_mod(a, s, n))) {
        fixes = false;
        break;
      }
    }
    if (fixes) out.push_back(a);
    if (n == 1) break;
  }
  return out;
}

std::string to_dot(const CirculantGraph& g) {
  const u64 n = g.order();
  std::string s = g.directed() ? "digraph circulant {\n" : "graph circulant {\n";
  const char* arrow = g.directed() ? " -> " : " -- ";
  for (u64 i = 0; i < n; ++i) s += "  " + std::to_string(i) + ";\n";
  for (u64 i = 0; i < n; ++i) {
    for (u64 c : g.connection()) {
      const u64 j = (i + c) % n;
      if (!g.directed() && j < i) continue;
      s += "  " + std::to_string(i) + arrow + std::to_string(j) + ";\n";
    }
  }
  return s + "}\n";
}

}  // namespace cycaut
