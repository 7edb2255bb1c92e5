#pragma once

#include <iosfwd>
#include <string>

#include "bidegree/estimation.hpp"
#include "bidegree/graph.hpp"
#include "bidegree/noise.hpp"
#include "bidegree/simulation.hpp"

namespace bidegree {

/// Edge-list text format: one edge per line, "i<TAB>j", 1-indexed; blank
/// lines and lines starting with '#' are ignored. Node count is the largest
/// label seen unless n_hint is larger.
DirectedGraph read_edge_list(std::istream& in, int n_hint = 0);
DirectedGraph read_edge_list_file(const std::string& path, int n_hint = 0);
void write_edge_list(std::ostream& out, const DirectedGraph& g);

/// Degree-sequence CSV, header "node,out,in".
void write_degree_csv(std::ostream& out, const BiDegreeSequence& d);
BiDegreeSequence read_degree_csv(std::istream& in);

/// Noisy-sequence CSV, header "node,out_noisy,in_noisy".
void write_noisy_csv(std::ostream& out, const NoisyBiSequence& z);
NoisyBiSequence read_noisy_csv(std::istream& in);

/// Parameter CSV, header "node,alpha,beta".
void write_theta_csv(std::ostream& out, const P0Params& theta);
P0Params read_theta_csv(std::istream& in);

/// PrivacyConfig JSON: {"epsilon": 2.0, "mechanism": "discrete_laplace",
/// "seed": 12345} with optional "positive_only".
PrivacyConfig parse_privacy_config(const std::string& json_text);
PrivacyConfig read_privacy_config_file(const std::string& path);

/// ExperimentConfig JSON for the simulate subcommand.
ExperimentConfig parse_experiment_config(const std::string& json_text);
ExperimentConfig read_experiment_config_file(const std::string& path);

/// Locale-independent decimal formatting (period separator, shortest
/// round-trip representation).
std::string format_double(double v);

}  // namespace bidegree
