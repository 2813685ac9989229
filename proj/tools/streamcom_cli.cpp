#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "streamcom/clustering_engine.hpp"
#include "streamcom/edge_stream.hpp"
#include "streamcom/evaluation.hpp"
#include "streamcom/modularity_analysis.hpp"
#include "streamcom/selection_metrics.hpp"

namespace {

using namespace streamcom;

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

struct TieOption {
  TieBreak tie;
  std::string text = "pseudocode";
};

TieOption parse_tie(const std::string& text) {
  TieOption option;
  option.text = text;
  if (text == "pseudocode") return option;
  if (text.rfind("random:", 0) == 0) {
    option.tie = TieBreak::random(std::stoull(text.substr(7)));
    return option;
  }
  throw CLI::ValidationError("--tie", "expected 'pseudocode' or 'random:<seed>'");
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void write_assignment(const std::string& path, const CommunityAssignment& result) {
  std::vector<std::pair<NodeId, Label>> rows(result.labels.begin(),
                                             result.labels.end());
  std::sort(rows.begin(), rows.end());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write output file: " + path);
  for (const auto& [node, label] : rows) out << node << ' ' << label << '\n';
}

std::unordered_map<NodeId, Label> load_partition(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open partition file: " + path);
  std::unordered_map<NodeId, Label> labels;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(file, line)) {
    ++line_number;
    auto parsed = parse_edge_line(line, line_number);
    if (!parsed) {
      // "node node" lines would be dropped as self-loops by the edge
      // parser; for partitions they are valid rows.
      std::istringstream in(line);
      NodeId node;
      Label label;
      if (in >> node >> label) labels[node] = label;
      continue;
    }
    labels[parsed->u] = parsed->v;
  }
  return labels;
}

std::vector<Edge> load_edges(const std::string& path) {
  EdgeStream stream = EdgeStream::from_file(path);
  std::vector<Edge> edges;
  while (auto e = stream.next()) edges.push_back(*e);
  return edges;
}

struct OrderingOption {
  Ordering order = Ordering::AsIs;
  std::uint64_t seed = 0;
  bool shuffled = false;
};

void write_manifest(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest: " + path);
  for (const auto& [key, value] : rows) out << key << '=' << value << '\n';
}

int cmd_cluster(const std::string& input, std::int64_t v_max,
                const OrderingOption& ordering, const TieOption& tie,
                const std::string& output) {
  const auto start = std::chrono::steady_clock::now();
  EdgeStream stream = EdgeStream::from_file(
      input, ordering.shuffled ? Ordering::Shuffled : Ordering::AsIs,
      ordering.seed);
  CommunityAssignment result = run(stream, v_max, tie.tie);
  const double cluster_ms = elapsed_ms(start);

  write_assignment(output, result);

  write_manifest(
      output + ".manifest",
      {{"command", "cluster"},
       {"input", input},
       {"order", ordering.shuffled ? "shuffled" : "as-is"},
       {"shuffle_seed", ordering.shuffled ? std::to_string(ordering.seed) : ""},
       {"vmax", std::to_string(v_max)},
       {"tie", tie.text},
       {"edges_processed", std::to_string(stream.count())},
       {"self_loops_skipped", std::to_string(stream.self_loops_skipped())},
       {"distinct_nodes", std::to_string(result.labels.size())},
       {"communities", std::to_string(result.volumes.size())},
       {"cluster_ms", std::to_string(cluster_ms)},
       {"output", output}});

  std::cout << "edges " << stream.count() << "\n"
            << "nodes " << result.labels.size() << "\n"
            << "communities " << result.volumes.size() << "\n"
            << "elapsed_ms " << cluster_ms << "\n";
  if (stream.self_loops_skipped() > 0)
    std::cerr << "warning: skipped " << stream.self_loops_skipped()
              << " self-loop line(s)\n";
  return 0;
}

int cmd_sweep(const std::string& input, const std::vector<std::int64_t>& v_max_list,
              const std::string& select, const std::string& direction,
              const OrderingOption& ordering, const TieOption& tie,
              const std::string& output_prefix) {
  const auto start = std::chrono::steady_clock::now();
  EdgeStream stream = EdgeStream::from_file(
      input, ordering.shuffled ? Ordering::Shuffled : Ordering::AsIs,
      ordering.seed);
  SweepOutcome outcome = run_sweep(stream, v_max_list, tie.tie);
  const double sweep_ms = elapsed_ms(start);

  const std::int64_t total_weight =
      std::accumulate(outcome.degrees.begin(), outcome.degrees.end(),
                      std::int64_t{0},
                      [](std::int64_t acc, const auto& kv) { return acc + kv.second; });

  std::vector<SweepResult> results;
  for (std::size_t idx = 0; idx < v_max_list.size(); ++idx) {
    const std::string path = output_prefix + "." + std::to_string(idx) + ".vmax" +
                             std::to_string(v_max_list[idx]) + ".txt";
    write_assignment(path, outcome.assignments[idx]);
    results.push_back(
        SweepResult{outcome.assignments[idx], v_max_list[idx], total_weight});
  }

  const Criterion criterion =
      select == "entropy" ? Criterion::Entropy : Criterion::Density;
  const Direction dir = direction == "min" ? Direction::Min : Direction::Max;
  const std::size_t best = select_best(results, criterion, dir);

  std::cout << "criterion " << select << "\n"
            << "direction " << direction << "\n"
            << "elapsed_ms " << sweep_ms << "\n";
  for (std::size_t idx = 0; idx < results.size(); ++idx) {
    std::cout << "result " << idx << " vmax " << v_max_list[idx] << " entropy "
              << entropy(results[idx].assignment.volumes, total_weight)
              << " density " << average_density(results[idx].assignment)
              << " communities " << results[idx].assignment.volumes.size() << "\n";
  }
  std::cout << "selected " << best << "\n";
  return 0;
}

int cmd_modularity(const std::string& input, const std::string& partition_path) {
  const std::vector<Edge> edges = load_edges(input);
  modularity::Partition partition;
  partition.labels = load_partition(partition_path);

  const modularity::ObjectiveValue scaled =
      modularity::modularity_scaled(edges, partition);
  const double q = static_cast<double>(scaled.scaled) /
                   (static_cast<double>(scaled.w) * static_cast<double>(scaled.w));
  std::cout << "Q " << q << "\n"
            << "Q_exact " << scaled.scaled << "/" << scaled.w << "^2\n";
  return 0;
}

int cmd_evaluate(const std::string& pred_path, const std::string& truth_path,
                 const std::string& metric) {
  const auto pred = load_partition(pred_path);
  const eval::GroundTruthCover cover = eval::load_cover(truth_path);
  if (cover.skipped_lines > 0)
    std::cerr << "warning: skipped " << cover.skipped_lines
              << " empty line(s) in " << truth_path << "\n";
  if (cover.communities.empty())
    throw std::runtime_error("ground-truth cover is empty");

  const eval::NodeSet universe = eval::cover_universe(cover);

  // Restrict the detected assignment to the ground-truth node universe.
  std::unordered_map<NodeId, Label> pred_restricted;
  for (const auto& [node, label] : pred)
    if (universe.count(node)) pred_restricted.emplace(node, label);
  if (pred_restricted.empty())
    throw std::runtime_error(
        "no predicted node appears in the ground-truth universe");

  std::cout << "restriction ground-truth-universe\n";
  if (metric == "f1" || metric == "both") {
    const auto detected = eval::family_from_labels(pred_restricted);
    std::cout << "f1 " << eval::average_f1(detected, cover.communities) << "\n";
  }
  if (metric == "nmi" || metric == "both") {
    std::cout << "nmi_variant partition-arithmetic-mean\n";
    const auto truth_partition = eval::cover_to_partition(cover);
    std::cout << "nmi " << eval::nmi(pred_restricted, truth_partition) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-pass edge-streaming graph clustering"};
  app.require_subcommand(1);

  // cluster
  auto* cluster = app.add_subcommand("cluster", "Cluster an edge-list file");
  std::string cl_input, cl_output = "communities.out", cl_tie = "pseudocode";
  std::int64_t cl_vmax = 0;
  std::uint64_t cl_seed = 0;
  cluster->add_option("--input", cl_input, "edge-list file")->required();
  cluster->add_option("--vmax", cl_vmax, "volume threshold (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* seed_opt =
      cluster->add_option("--shuffle-seed", cl_seed, "shuffle the stream with this seed");
  cluster->add_option("--tie", cl_tie, "pseudocode | random:<seed>");
  cluster->add_option("--output", cl_output, "assignment output path");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run several vmax values in one pass");
  std::string sw_input, sw_select = "density", sw_direction = "max",
              sw_prefix = "sweep", sw_tie = "pseudocode";
  std::vector<std::int64_t> sw_vmax_list;
  std::uint64_t sw_seed = 0;
  sweep->add_option("--input", sw_input, "edge-list file")->required();
  sweep->add_option("--vmax-list", sw_vmax_list, "comma-separated vmax values")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  sweep->add_option("--select", sw_select, "entropy | density")
      ->check(CLI::IsMember({"entropy", "density"}));
  sweep->add_option("--direction", sw_direction, "max | min")
      ->check(CLI::IsMember({"max", "min"}));
  auto* sw_seed_opt =
      sweep->add_option("--shuffle-seed", sw_seed, "shuffle the stream with this seed");
  sweep->add_option("--tie", sw_tie, "pseudocode | random:<seed>");
  sweep->add_option("--output-prefix", sw_prefix, "per-parameter output prefix");

  // modularity
  auto* mod = app.add_subcommand("modularity", "Modularity of a partition");
  std::string mo_input, mo_partition;
  mod->add_option("--input", mo_input, "edge-list file")->required();
  mod->add_option("--partition", mo_partition, "node_id community_id file")->required();

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Score against ground truth");
  std::string ev_pred, ev_truth, ev_metric = "both";
  evaluate->add_option("--pred", ev_pred, "detected assignment file")->required();
  evaluate->add_option("--truth", ev_truth, "ground-truth cover file")->required();
  evaluate->add_option("--metric", ev_metric, "f1 | nmi | both")
      ->check(CLI::IsMember({"f1", "nmi", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (cluster->parsed()) {
      OrderingOption ordering;
      ordering.shuffled = seed_opt->count() > 0;
      ordering.seed = cl_seed;
      return cmd_cluster(cl_input, cl_vmax, ordering, parse_tie(cl_tie), cl_output);
    }
    if (sweep->parsed()) {
      OrderingOption ordering;
      ordering.shuffled = sw_seed_opt->count() > 0;
      ordering.seed = sw_seed;
      return cmd_sweep(sw_input, sw_vmax_list, sw_select, sw_direction, ordering,
                       parse_tie(sw_tie), sw_prefix);
    }
    if (mod->parsed()) return cmd_modularity(mo_input, mo_partition);
    if (evaluate->parsed()) return cmd_evaluate(ev_pred, ev_truth, ev_metric);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return 0;
}
