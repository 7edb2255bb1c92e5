#include "bidegree/denoise.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bidegree {

namespace {

// Candidate ordering for in-degree targets: largest working in-degree first,
// ties by largest working out-degree, then smallest node index.
struct TargetKey {
  int in;
  int out;
  int idx;
  bool operator<(const TargetKey& o) const {
    if (in != o.in) return in > o.in;
    if (out != o.out) return out > o.out;
    return idx < o.idx;
  }
};

}  // namespace

NormalOrderPermutation normal_order(const std::vector<int>& out_seq,
                                    const std::vector<int>& in_seq) {
  const int n = static_cast<int>(out_seq.size());
  NormalOrderPermutation p;
  p.perm.resize(n);
  std::iota(p.perm.begin(), p.perm.end(), 0);
  std::stable_sort(p.perm.begin(), p.perm.end(), [&](int a, int b) {
    if (in_seq[a] != in_seq[b]) return in_seq[a] > in_seq[b];
    return out_seq[a] > out_seq[b];
  });
  return p;
}

bool is_bigraphical(const std::vector<int>& out_seq, const std::vector<int>& in_seq) {
  const int n = static_cast<int>(out_seq.size());
  if (static_cast<int>(in_seq.size()) != n) return false;
  long long sum_out = 0, sum_in = 0;
  for (int v : out_seq) {
    if (v < 0 || v > n - 1) return false;
    sum_out += v;
  }
  for (int v : in_seq) {
    if (v < 0 || v > n - 1) return false;
    sum_in += v;
  }
  if (sum_out != sum_in) return false;

  std::vector<int> out = out_seq, in = in_seq;
  std::vector<TargetKey> cand;
  cand.reserve(n);
  for (;;) {
    int pivot = -1;
    for (int i = 0; i < n; ++i)
      if (out[i] > 0 && (pivot < 0 || out[i] > out[pivot])) pivot = i;
    if (pivot < 0) break;  // all out-degrees zero; sums match, so in is zero too
    const int k = out[pivot];
    cand.clear();
    for (int j = 0; j < n; ++j)
      if (j != pivot && in[j] > 0) cand.push_back({in[j], out[j], j});
    if (static_cast<int>(cand.size()) < k) return false;
    std::nth_element(cand.begin(), cand.begin() + (k - 1), cand.end());
    for (int t = 0; t < k; ++t) --in[cand[t].idx];
    out[pivot] = 0;
  }
  return true;
}

namespace {

// Shared greedy loop of the L1 projection: repeatedly pick the node with the
// largest remaining out-degree and connect it to the nodes with the largest
// remaining positive in-degrees. `exact` requires every out-degree to be fully
// realized (the graphical-input case used by hh_decompose).
DenoiseResult project(const std::vector<int>& zp_in, const std::vector<int>& zm_in,
                      std::vector<KOutStar>* stars) {
  const int n = static_cast<int>(zp_in.size());
  std::vector<int> zp = zp_in, zm = zm_in;
  DirectedGraph g(n);

  std::vector<char> active(n);
  for (int i = 0; i < n; ++i) active[i] = zp[i] > 0;

  std::vector<TargetKey> cand;
  cand.reserve(n);
  for (;;) {
    int pivot = -1;
    for (int i = 0; i < n; ++i)
      if (active[i] && (pivot < 0 || zp[i] > zp[pivot])) pivot = i;
    if (pivot < 0) break;

    const int k = zp[pivot];
    zp[pivot] = 0;  // processed pivots must not influence later tie-breaks
    cand.clear();
    for (int j = 0; j < n; ++j)
      if (j != pivot && zm[j] > 0) cand.push_back({zm[j], zp[j], j});
    const int h = std::min<int>(k, static_cast<int>(cand.size()));
    if (h > 0)
      std::nth_element(cand.begin(), cand.begin() + (h - 1), cand.end());

    KOutStar star;
    star.center = pivot;
    for (int t = 0; t < h; ++t) {
      const int j = cand[t].idx;
      g.add_edge(pivot, j);
      --zm[j];
      star.leaves.push_back(j);
    }
    if (stars && h > 0) {
      std::sort(star.leaves.begin(), star.leaves.end());
      stars->push_back(std::move(star));
    }
    active[pivot] = false;
  }

  // Deficit rebalancing. When the in-side supply runs out, the greedy starves
  // the last pivots, so the whole unplaced total can land on one coordinate.
  // Moving an edge k->j to i->j (j unchanged) shifts one out-unit from k to i
  // at identical L1 cost: k moves one unit below its request, i moves one unit
  // closer to its own. Repeating while the deficits differ by at least two
  // spreads the unavoidable total evenly without changing the distance.
  // Graphical inputs have zero deficit, so this is a no-op for hh_decompose.
  {
    BiDegreeSequence deg = degrees(g);
    std::vector<int> def(n);
    long long total = 0;
    for (int i = 0; i < n; ++i) {
      def[i] = std::clamp(zp_in[i], 0, n - 1) - deg.out_deg[i];
      total += def[i];
    }
    bool moved = total > 0;
    while (moved) {
      moved = false;
      int hi = 0;
      for (int i = 1; i < n; ++i)
        if (def[i] > def[hi]) hi = i;
      if (def[hi] <= 0) break;
      // Donor: smallest-deficit node with an edge whose target i can take.
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return def[a] < def[b]; });
      for (int k : order) {
        if (k == hi || def[hi] - def[k] < 2) break;
        if (deg.out_deg[k] == 0) continue;
        for (int j = 0; j < n; ++j) {
          if (j == k || j == hi) continue;
          if (g.has_edge(k, j) && !g.has_edge(hi, j)) {
            g.remove_edge(k, j);
            g.add_edge(hi, j);
            --deg.out_deg[k];
            ++deg.out_deg[hi];
            ++def[k];
            --def[hi];
            moved = true;
            break;
          }
        }
        if (moved) break;
      }
    }
  }

  DenoiseResult r{degrees(g), std::move(g)};
  return r;
}

}  // namespace

DenoiseResult denoise_l1(const NoisyBiSequence& z) {
  return project(z.out_noisy, z.in_noisy, nullptr);
}

HHDecomposition hh_decompose(const BiDegreeSequence& d) {
  if (!is_bigraphical(d))
    throw std::invalid_argument("hh_decompose: input is not bi-graphical");
  HHDecomposition hh;
  project(d.out_deg, d.in_deg, &hh.stars);
  return hh;
}

}  // namespace bidegree
