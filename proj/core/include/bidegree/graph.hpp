#pragma once

#include <cstdint>
#include <vector>

#include "bidegree/rng.hpp"

namespace bidegree {

struct BiDegreeSequence;

/// Simple loopless directed graph on n labeled nodes. Nodes are 0-indexed
/// internally; all file formats and the CLI use 1-indexed node labels.
/// Adjacency is a dense byte matrix: sampling and degree counting are O(n^2)
/// anyway, so the flat layout keeps both cache-friendly.
class DirectedGraph {
 public:
  explicit DirectedGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {}

  int node_count() const { return n_; }

  bool has_edge(int i, int j) const { return adj_[idx(i, j)] != 0; }

  /// Adds edge i -> j. Self-loops are ignored; duplicate adds are no-ops.
  void add_edge(int i, int j) {
    if (i == j) return;
    adj_[idx(i, j)] = 1;
  }

  /// Removes edge i -> j if present.
  void remove_edge(int i, int j) {
    if (i == j) return;
    adj_[idx(i, j)] = 0;
  }

  std::size_t edge_count() const;

  /// Edges as ordered (i, j) pairs, row-major order.
  std::vector<std::pair<int, int>> edges() const;

  BiDegreeSequence degrees() const;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }
  int n_;
  std::vector<std::uint8_t> adj_;
};

/// Paired out-/in-degree vectors (d+, d-) of a directed graph.
struct BiDegreeSequence {
  std::vector<int> out_deg;
  std::vector<int> in_deg;

  int size() const { return static_cast<int>(out_deg.size()); }
};

/// Integer bi-sequence after additive noise. Unlike BiDegreeSequence there is
/// no range constraint: entries may be negative or exceed n-1.
struct NoisyBiSequence {
  std::vector<int> out_noisy;
  std::vector<int> in_noisy;

  int size() const { return static_cast<int>(out_noisy.size()); }
};

/// Real-valued bi-sequence; the solver target type (noisy or expected degrees).
struct RealBiSequence {
  std::vector<double> out;
  std::vector<double> in;

  int size() const { return static_cast<int>(out.size()); }
};

/// p0 model parameters. alpha and beta both have length n; beta[n-1] is the
/// identification constraint (beta_n = 0 in 1-indexed notation) and is kept at
/// zero by the solver.
struct P0Params {
  std::vector<double> alpha;
  std::vector<double> beta;

  int size() const { return static_cast<int>(alpha.size()); }
};

/// Out-/in-degrees of g; Sum(out) = Sum(in) = |edges|.
BiDegreeSequence degrees(const DirectedGraph& g);

/// Samples a graph from the p0 model: each ordered pair (i, j), i != j,
/// present independently with probability e^(alpha_i+beta_j)/(1+e^(alpha_i+beta_j)).
DirectedGraph sample_p0(const P0Params& params, Rng& rng);

/// Same, but with the n*n edge-probability matrix precomputed (row-major,
/// p[i*n+j]); used by the simulation harness where theta is fixed across
/// replications.
DirectedGraph sample_p0_from_probs(int n, const std::vector<double>& probs, Rng& rng);

/// Edge probability matrix for sample_p0_from_probs (diagonal entries 0).
std::vector<double> edge_probabilities(const P0Params& params);

/// max{ ||a+ - b+||_inf, ||a- - b-||_inf }.
int dist_inf(const std::vector<int>& a_out, const std::vector<int>& a_in,
             const std::vector<int>& b_out, const std::vector<int>& b_in);

/// ||a+ - b+||_1 + ||a- - b-||_1.
long long dist_l1(const std::vector<int>& a_out, const std::vector<int>& a_in,
                  const std::vector<int>& b_out, const std::vector<int>& b_in);

inline int dist_inf(const BiDegreeSequence& a, const NoisyBiSequence& b) {
  return dist_inf(a.out_deg, a.in_deg, b.out_noisy, b.in_noisy);
}
inline int dist_inf(const BiDegreeSequence& a, const BiDegreeSequence& b) {
  return dist_inf(a.out_deg, a.in_deg, b.out_deg, b.in_deg);
}
inline long long dist_l1(const NoisyBiSequence& a, const BiDegreeSequence& b) {
  return dist_l1(a.out_noisy, a.in_noisy, b.out_deg, b.in_deg);
}
inline long long dist_l1(const BiDegreeSequence& a, const BiDegreeSequence& b) {
  return dist_l1(a.out_deg, a.in_deg, b.out_deg, b.in_deg);
}

}  // namespace bidegree
