#include "bidegree/graph.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace bidegree {

std::size_t DirectedGraph::edge_count() const {
  std::size_t c = 0;
  for (auto b : adj_) c += b;
  return c;
}

std::vector<std::pair<int, int>> DirectedGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (adj_[idx(i, j)]) out.emplace_back(i, j);
  return out;
}

BiDegreeSequence DirectedGraph::degrees() const { return bidegree::degrees(*this); }

BiDegreeSequence degrees(const DirectedGraph& g) {
  const int n = g.node_count();
  BiDegreeSequence d;
  d.out_deg.assign(n, 0);
  d.in_deg.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && g.has_edge(i, j)) {
        ++d.out_deg[i];
        ++d.in_deg[j];
      }
  return d;
}

std::vector<double> edge_probabilities(const P0Params& params) {
  const int n = params.size();
  std::vector<double> p(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) {
        const double x = params.alpha[i] + params.beta[j];
        p[static_cast<std::size_t>(i) * n + j] = 1.0 / (1.0 + std::exp(-x));
      }
  return p;
}

DirectedGraph sample_p0_from_probs(int n, const std::vector<double>& probs, Rng& rng) {
  DirectedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rng.next_half_open01() < probs[static_cast<std::size_t>(i) * n + j])
        g.add_edge(i, j);
  return g;
}

DirectedGraph sample_p0(const P0Params& params, Rng& rng) {
  return sample_p0_from_probs(params.size(), edge_probabilities(params), rng);
}

int dist_inf(const std::vector<int>& a_out, const std::vector<int>& a_in,
             const std::vector<int>& b_out, const std::vector<int>& b_in) {
  if (a_out.size() != b_out.size() || a_in.size() != b_in.size())
    throw std::invalid_argument("dist_inf: length mismatch");
  int m = 0;
  for (std::size_t i = 0; i < a_out.size(); ++i)
    m = std::max(m, std::abs(a_out[i] - b_out[i]));
  for (std::size_t i = 0; i < a_in.size(); ++i)
    m = std::max(m, std::abs(a_in[i] - b_in[i]));
  return m;
}

long long dist_l1(const std::vector<int>& a_out, const std::vector<int>& a_in,
                  const std::vector<int>& b_out, const std::vector<int>& b_in) {
  if (a_out.size() != b_out.size() || a_in.size() != b_in.size())
    throw std::invalid_argument("dist_l1: length mismatch");
  long long s = 0;
  for (std::size_t i = 0; i < a_out.size(); ++i)
    s += std::abs(static_cast<long long>(a_out[i]) - b_out[i]);
  for (std::size_t i = 0; i < a_in.size(); ++i)
    s += std::abs(static_cast<long long>(a_in[i]) - b_in[i]);
  return s;
}

}  // namespace bidegree
