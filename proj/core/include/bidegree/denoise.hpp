#pragma once

#include <vector>

#include "bidegree/graph.hpp"

namespace bidegree {

/// Permutation placing a bi-sequence in normal order: in-degrees descending,
/// ties by descending out-degree, remaining ties by original index.
struct NormalOrderPermutation {
  std::vector<int> perm;  // perm[k] = original index of the k-th element
};

/// Star graph with k out-edges from a single center node.
struct KOutStar {
  int center = 0;
  std::vector<int> leaves;
};

/// Ordered k-out-star list whose bi-degree sequences sum to a graphical input.
struct HHDecomposition {
  std::vector<KOutStar> stars;
};

NormalOrderPermutation normal_order(const std::vector<int>& out_seq,
                                    const std::vector<int>& in_seq);

/// True iff some simple loopless directed graph on n nodes realizes the
/// integer bi-sequence exactly (directed Havel-Hakimi recursion).
bool is_bigraphical(const std::vector<int>& out_seq, const std::vector<int>& in_seq);

inline bool is_bigraphical(const BiDegreeSequence& d) {
  return is_bigraphical(d.out_deg, d.in_deg);
}

struct DenoiseResult {
  BiDegreeSequence denoised;
  DirectedGraph graph;
};

/// L1 projection of an integer bi-sequence onto the set of graphical
/// bi-degree sequences. The returned sequence minimizes
/// ||z+ - d+||_1 + ||z- - d-||_1 over all graphical d, and the returned graph
/// realizes it. Ties in the in-degree candidate selection are broken by
/// descending out-degree, then ascending node index.
DenoiseResult denoise_l1(const NoisyBiSequence& z);

/// Havel-Hakimi decomposition of a graphical bi-degree sequence into
/// k-out-stars with distinct centers; re-summing the stars reproduces the
/// input. Non-graphical input is rejected.
HHDecomposition hh_decompose(const BiDegreeSequence& d);

}  // namespace bidegree
