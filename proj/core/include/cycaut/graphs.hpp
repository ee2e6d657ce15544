#pragma once

// Circulant graphs and digraphs on Z_n: i -> j is an arc iff (j - i) mod n
// lies in the connection set.

#include <string>
#include <utility>
#include <vector>

#include "cycaut/arithmetic.hpp"
#include "cycaut/permutation.hpp"

namespace cycaut {

class CirculantGraph {
 public:
  /// Rejects 0 in the connection set, entries >= n, and (for undirected
  /// graphs) sets not closed under negation.
  CirculantGraph(u64 n, std::vector<u64> connection, bool directed = false);

  u64 order() const noexcept { return n_; }
  const std::vector<u64>& connection() const noexcept { return conn_; }
  bool directed() const noexcept { return directed_; }
  bool has_arc(u64 i, u64 j) const;
  /// Number of edges (arcs for digraphs).
  u64 edge_count() const noexcept { return directed_ ? n_ * conn_.size() : n_ * conn_.size() / 2; }

  bool operator==(const CirculantGraph&) const = default;

 private:
  u64 n_;
  std::vector<u64> conn_;
  bool directed_;
  std::vector<bool> in_conn_;
};

/// Connection set {1, n-1}.
CirculantGraph cycle_graph(u64 n);

/// A relabelled graph, no longer assumed circulant. Undirected edges are
/// stored in both directions.
struct EdgeSet {
  u64 n = 0;
  bool directed = false;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;  // sorted

  bool operator==(const EdgeSet&) const = default;
};

EdgeSet edges(const CirculantGraph& g);
/// Arc (sigma(i), sigma(j)) for each arc (i, j).
EdgeSet apply_perm(const CirculantGraph& g, const Permutation& sigma);
bool is_automorphism(const CirculantGraph& g, const Permutation& sigma);
/// Whether apply_perm(g, sigma) equals h.
bool maps_onto(const CirculantGraph& g, const Permutation& sigma, const CirculantGraph& h);

/// Units a with a*S = S.
std::vector<u64> multiplier_stabilizer(const CirculantGraph& g);

std::string to_dot(const CirculantGraph& g);

}  // namespace cycaut
