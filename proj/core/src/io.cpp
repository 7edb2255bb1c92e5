#include "bidegree/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bidegree {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

int parse_int(const std::string& s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw std::runtime_error("bad integer field: '" + s + "'");
  return v;
}

double parse_double(const std::string& s) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw std::runtime_error("bad numeric field: '" + s + "'");
  return v;
}

Mechanism parse_mechanism(const std::string& name) {
  if (name == "none") return Mechanism::None;
  if (name == "discrete_laplace") return Mechanism::DiscreteLaplace;
  if (name == "continuous_laplace") return Mechanism::ContinuousLaplace;
  throw std::runtime_error("unknown mechanism: " + name);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, p);
}

DirectedGraph read_edge_list(std::istream& in, int n_hint) {
  std::vector<std::pair<int, int>> edges;
  int n = n_hint;
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    int i = 0, j = 0;
    if (!(ls >> i >> j)) throw std::runtime_error("bad edge line: '" + line + "'");
    if (i < 1 || j < 1) throw std::runtime_error("edge labels are 1-indexed");
    edges.emplace_back(i - 1, j - 1);
    n = std::max({n, i, j});
  }
  DirectedGraph g(std::max(n, 2));
  for (auto [i, j] : edges) g.add_edge(i, j);
  return g;
}

DirectedGraph read_edge_list_file(const std::string& path, int n_hint) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in, n_hint);
}

void write_edge_list(std::ostream& out, const DirectedGraph& g) {
  for (auto [i, j] : g.edges()) out << (i + 1) << '\t' << (j + 1) << '\n';
}

void write_degree_csv(std::ostream& out, const BiDegreeSequence& d) {
  out << "node,out,in\n";
  for (int i = 0; i < d.size(); ++i)
    out << (i + 1) << ',' << d.out_deg[i] << ',' << d.in_deg[i] << '\n';
}

namespace {

template <typename T, typename Parse>
void read_three_column_csv(std::istream& in, const std::string& expected_header,
                           std::vector<T>& col2, std::vector<T>& col3,
                           const Parse& parse) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
  if (split_csv_line(line) != split_csv_line(expected_header))
    throw std::runtime_error("expected header '" + expected_header + "'");
  int expect_node = 1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 3) throw std::runtime_error("bad CSV row: '" + line + "'");
    if (parse_int(f[0]) != expect_node)
      throw std::runtime_error("CSV rows must be node 1..n in order");
    col2.push_back(parse(f[1]));
    col3.push_back(parse(f[2]));
    ++expect_node;
  }
}

}  // namespace

BiDegreeSequence read_degree_csv(std::istream& in) {
  BiDegreeSequence d;
  read_three_column_csv(in, "node,out,in", d.out_deg, d.in_deg, parse_int);
  return d;
}

void write_noisy_csv(std::ostream& out, const NoisyBiSequence& z) {
  out << "node,out_noisy,in_noisy\n";
  for (int i = 0; i < z.size(); ++i)
    out << (i + 1) << ',' << z.out_noisy[i] << ',' << z.in_noisy[i] << '\n';
}

NoisyBiSequence read_noisy_csv(std::istream& in) {
  NoisyBiSequence z;
  read_three_column_csv(in, "node,out_noisy,in_noisy", z.out_noisy, z.in_noisy, parse_int);
  return z;
}

void write_theta_csv(std::ostream& out, const P0Params& theta) {
  out << "node,alpha,beta\n";
  for (int i = 0; i < theta.size(); ++i)
    out << (i + 1) << ',' << format_double(theta.alpha[i]) << ','
        << format_double(theta.beta[i]) << '\n';
}

P0Params read_theta_csv(std::istream& in) {
  P0Params p;
  read_three_column_csv(in, "node,alpha,beta", p.alpha, p.beta, parse_double);
  return p;
}

PrivacyConfig parse_privacy_config(const std::string& json_text) {
  const json j = json::parse(json_text);
  PrivacyConfig cfg;
  cfg.epsilon = j.at("epsilon").get<double>();
  if (cfg.epsilon <= 0) throw std::runtime_error("epsilon must be positive");
  cfg.mechanism = parse_mechanism(j.value("mechanism", std::string("discrete_laplace")));
  cfg.seed = j.value("seed", std::uint64_t{0});
  cfg.positive_only = j.value("positive_only", false);
  return cfg;
}

PrivacyConfig read_privacy_config_file(const std::string& path) {
  return parse_privacy_config(read_file(path));
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  const json j = json::parse(json_text);
  ExperimentConfig cfg;
  cfg.n = j.at("n").get<int>();
  if (j.contains("L")) {
    const auto& L = j.at("L");
    if (L.is_string()) {
      const std::string s = L.get<std::string>();
      ParamSchedule sched;
      if (s == "zero") sched = ParamSchedule::Zero;
      else if (s == "loglog") sched = ParamSchedule::LogLog;
      else if (s == "sqrtlog") sched = ParamSchedule::SqrtLog;
      else if (s == "log") sched = ParamSchedule::Log;
      else throw std::runtime_error("unknown L schedule: " + s);
      cfg.L = schedule_value(sched, cfg.n);
    } else {
      cfg.L = L.get<double>();
    }
  }
  if (j.contains("epsilon")) {
    const auto& e = j.at("epsilon");
    if (e.is_string()) {
      const std::string s = e.get<std::string>();
      if (s == "logn4") cfg.epsilon_rule = EpsilonRule::LogOverN4;
      else if (s == "logn2") cfg.epsilon_rule = EpsilonRule::LogOverN2;
      else throw std::runtime_error("unknown epsilon rule: " + s);
    } else {
      cfg.epsilon_rule = EpsilonRule::Fixed;
      cfg.epsilon_value = e.get<double>();
    }
  }
  if (j.contains("mechanism"))
    cfg.mechanism = parse_mechanism(j.at("mechanism").get<std::string>());
  cfg.replications = j.value("replications", 10000);
  if (j.contains("estimator")) {
    const std::string s = j.at("estimator").get<std::string>();
    if (s == "non_denoised") cfg.estimator = EstimatorType::NonDenoised;
    else if (s == "denoised") cfg.estimator = EstimatorType::Denoised;
    else throw std::runtime_error("unknown estimator: " + s);
  }
  if (j.contains("pairs"))
    for (const auto& p : j.at("pairs"))
      cfg.pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  cfg.level = j.value("level", 0.95);
  cfg.seed = j.value("seed", std::uint64_t{1});
  return cfg;
}

ExperimentConfig read_experiment_config_file(const std::string& path) {
  return parse_experiment_config(read_file(path));
}

}  // namespace bidegree
