// Acceptance gate: one line per criterion, nonzero exit when any
// required criterion fails. Criterion 10 needs an external dataset and
// is reported as skipped.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "streamcom/clustering_engine.hpp"
#include "streamcom/edge_stream.hpp"
#include "streamcom/evaluation.hpp"
#include "streamcom/modularity_analysis.hpp"
#include "support/random_instances.hpp"

using namespace streamcom;
namespace mod = streamcom::modularity;

namespace {

int failures = 0;

void report(int index, bool ok, const std::string& title,
            const std::string& detail = "") {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << index << ": "
            << title;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

// 1. Folding the incremental objective update from zero must reproduce
// the direct summation at every prefix length, exactly.
void criterion_incremental_objective() {
  std::mt19937_64 rng(101);
  bool ok = true;
  for (int trial = 0; trial < 200 && ok; ++trial) {
    auto edges = testing::random_stream(rng, 30, 100);
    auto partition = testing::random_partition(rng, edges, 6);
    const std::int64_t w = 2 * static_cast<std::int64_t>(edges.size());

    mod::ObjectiveValue folded{0, w};
    mod::StreamPrefix prefix;
    for (const Edge& e : edges) {
      auto volumes = mod::prefix_volumes(prefix, partition);
      folded = mod::objective_step(folded, e, partition, volumes);
      prefix.edges.push_back(e);
      auto direct = mod::streaming_objective(prefix, partition, w);
      if (folded.scaled != direct.scaled) {
        ok = false;
        break;
      }
    }
  }
  report(1, ok, "incremental objective equals direct summation",
         "200 random streams, every prefix");
}

// 2. The closed-form move delta must equal the before/after objective
// difference, exactly.
void criterion_move_delta() {
  std::mt19937_64 rng(202);
  int checked = 0;
  bool ok = true;
  while (checked < 200 && ok) {
    auto edges = testing::random_stream(rng, 20, 60);
    auto partition = testing::random_partition(rng, edges, 5);
    const std::int64_t w = 2 * static_cast<std::int64_t>(edges.size());
    mod::StreamPrefix prefix{edges};

    auto nodes = testing::nodes_of(edges);
    std::vector<NodeId> node_list(nodes.begin(), nodes.end());
    std::uniform_int_distribution<std::size_t> pick(0, node_list.size() - 1);
    const NodeId i = node_list[pick(rng)];
    std::uniform_int_distribution<Label> target_dist(1, 5);
    const Label target = target_dist(rng);
    if (partition.at(i) == target) continue;

    const std::int64_t closed = mod::delta_q_move(prefix, i, partition, target, w);
    mod::Partition moved = partition;
    moved.labels[i] = target;
    const std::int64_t direct =
        mod::streaming_objective(prefix, moved, w).scaled -
        mod::streaming_objective(prefix, partition, w).scaled;
    if (closed != direct) ok = false;
    ++checked;
  }
  report(2, ok, "closed-form move delta equals direct difference",
         std::to_string(checked) + " instances");
}

// 3. Volume-threshold guarantee as stated: whenever
// Vol(C(i)) <= Vol(C(j)) and Vol(C(j)) <= v_t(i,j), the guarded join
// must not decrease the objective.
void criterion_volume_threshold() {
  std::mt19937_64 rng(303);
  const int wanted = 10000;
  int satisfied = 0;
  int counterexamples = 0;
  std::string first_detail;
  long long attempts = 0;
  const long long max_attempts = 20'000'000;

  while (satisfied < wanted && attempts < max_attempts) {
    ++attempts;
    auto edges = testing::random_stream(rng, 12, 30);
    auto partition = testing::random_partition(rng, edges, 4);
    const std::int64_t w = 2 * static_cast<std::int64_t>(edges.size() + 1);
    mod::StreamPrefix prefix{edges};

    auto nodes = testing::nodes_of(edges);
    std::vector<NodeId> node_list(nodes.begin(), nodes.end());
    std::uniform_int_distribution<std::size_t> pick(0, node_list.size() - 1);
    Edge next{node_list[pick(rng)], node_list[pick(rng)]};
    if (next.u == next.v) continue;
    if (partition.at(next.u) == partition.at(next.v)) continue;

    auto volumes = mod::prefix_volumes(prefix, partition);
    auto vol_of = [&](Label c) {
      auto it = volumes.find(c);
      return it == volumes.end() ? std::int64_t{0} : it->second;
    };
    NodeId i = next.u, j = next.v;
    if (vol_of(partition.at(i)) > vol_of(partition.at(j))) std::swap(i, j);
    const std::int64_t vol_j = vol_of(partition.at(j));

    const auto threshold = mod::volume_threshold(prefix, {i, j}, partition, w);
    bool premise = false;
    if (threshold.kind == mod::VolumeThreshold::Kind::Infinite) {
      premise = true;
    } else if (threshold.kind == mod::VolumeThreshold::Kind::Finite) {
      premise = mod::Rational(vol_j) <= threshold.value;
    }
    if (!premise) continue;

    ++satisfied;
    const std::int64_t delta = mod::delta_q_next(prefix, {i, j}, partition, w);
    if (delta < 0) {
      ++counterexamples;
      if (first_detail.empty()) {
        std::ostringstream os;
        os << "first counterexample: t=" << prefix.t() << " w=" << w
           << " scaled delta=" << delta;
        first_detail = os.str();
      }
    }
  }

  std::ostringstream detail;
  detail << satisfied << " premise-satisfying instances, " << counterexamples
         << " counterexamples";
  if (!first_detail.empty()) detail << "; " << first_detail;
  report(3, satisfied >= wanted && counterexamples == 0,
         "guarded join below the volume threshold never decreases the objective",
         detail.str());
}

// 4. After every processed edge the volume mass and degree mass both
// equal twice the number of edges seen.
void criterion_conservation() {
  std::mt19937_64 rng(404);
  bool ok = true;
  for (int trial = 0; trial < 100 && ok; ++trial) {
    auto edges = testing::random_stream(rng, 25, 120);
    std::uniform_int_distribution<std::int64_t> vmax_dist(1, 40);
    ClusteringEngine engine(vmax_dist(rng));
    std::int64_t t = 0;
    for (const Edge& e : edges) {
      engine.process_edge(e);
      ++t;
      const auto& s = engine.state();
      std::int64_t degree_sum = 0, volume_sum = 0;
      for (const auto& [node, degree] : s.degrees) degree_sum += degree;
      for (const auto& [label, volume] : s.volumes) volume_sum += volume;
      if (degree_sum != 2 * t || volume_sum != 2 * t) {
        ok = false;
        break;
      }
    }
  }
  report(4, ok, "volume and degree mass both equal 2t after every edge",
         "100 random streams");
}

// 5. The fixed seven-edge stream must produce the documented
// communities at both parameter values.
void criterion_fixture() {
  const std::vector<Edge> fixture = {{1, 2}, {2, 3}, {1, 3}, {4, 5},
                                     {5, 6}, {4, 6}, {3, 4}};
  auto communities_of = [](const CommunityAssignment& a) {
    std::map<Label, std::set<NodeId>> by_label;
    for (const auto& [node, label] : a.labels) by_label[label].insert(node);
    std::set<std::set<NodeId>> result;
    for (auto& [label, nodes] : by_label) result.insert(nodes);
    return result;
  };

  auto stream5 = EdgeStream::from_edges(fixture);
  auto at5 = run(stream5, 5);
  std::multiset<std::int64_t> volumes5;
  for (const auto& [label, volume] : at5.volumes) volumes5.insert(volume);
  const bool ok5 =
      communities_of(at5) == std::set<std::set<NodeId>>{{1, 2, 3}, {4, 5, 6}} &&
      volumes5 == std::multiset<std::int64_t>{7, 7};
  report(5, ok5, "fixture with threshold 5 splits into {1,2,3} / {4,5,6}",
         "volumes 7 and 7");

  auto stream100 = EdgeStream::from_edges(fixture);
  auto at100 = run(stream100, 100);
  const bool ok100 = communities_of(at100) ==
                     std::set<std::set<NodeId>>{{1, 2, 3, 4, 5, 6}};
  std::ostringstream got;
  got << "required: one community of all six; actual communities:";
  for (const auto& community : communities_of(at100)) {
    got << " {";
    for (NodeId node : community) got << node << ",";
    got << "}";
  }
  report(5, ok100, "fixture with threshold 100 forms a single community",
         got.str());
}

// 6. The multi-parameter sweep must reproduce independent runs exactly
// and keep a single degree map shared by all parameter tracks.
void criterion_sweep() {
  std::mt19937_64 rng(606);
  bool ok = true;
  for (int trial = 0; trial < 50 && ok; ++trial) {
    auto edges = testing::random_stream(rng, 50, 300);
    std::uniform_int_distribution<int> len_dist(1, 6);
    std::uniform_int_distribution<std::int64_t> vmax_dist(1, 80);
    std::vector<std::int64_t> v_max_list;
    for (int a = len_dist(rng); a > 0; --a) v_max_list.push_back(vmax_dist(rng));

    auto stream = EdgeStream::from_edges(edges);
    auto outcome = run_sweep(stream, v_max_list);
    if (outcome.assignments.size() != v_max_list.size()) {
      ok = false;
      break;
    }
    for (std::size_t idx = 0; idx < v_max_list.size(); ++idx) {
      auto independent_stream = EdgeStream::from_edges(edges);
      auto independent = run(independent_stream, v_max_list[idx]);
      if (outcome.assignments[idx].labels != independent.labels ||
          outcome.assignments[idx].volumes != independent.volumes) {
        ok = false;
        break;
      }
    }
    // Structural check on the shared degree map: one entry per distinct
    // node regardless of how many parameters were swept.
    if (outcome.degrees.size() != testing::nodes_of(edges).size()) ok = false;
  }
  report(6, ok, "sweep equals independent runs and shares one degree map",
         "50 random parameter lists");
}

// 7. The streaming objective over the complete stream, divided by w,
// must equal full-graph modularity as exact rationals.
void criterion_consistency_bridge() {
  std::mt19937_64 rng(707);
  bool ok = true;
  for (int trial = 0; trial < 100 && ok; ++trial) {
    auto edges = testing::random_stream(rng, 25, 90);
    auto partition = testing::random_partition(rng, edges, 5);
    const std::int64_t w = 2 * static_cast<std::int64_t>(edges.size());
    mod::StreamPrefix prefix{edges};

    const auto objective = mod::streaming_objective(prefix, partition, w);
    const auto exact = mod::modularity_scaled(edges, partition);
    const mod::Rational lhs(objective.scaled, w * w);
    const mod::Rational rhs(exact.scaled, exact.w * exact.w);
    if (lhs != rhs) ok = false;
  }
  report(7, ok, "final streaming objective over w equals graph modularity",
         "100 instances, exact rationals");
}

// 8. Evaluation metric sanity values.
void criterion_evaluation() {
  using namespace streamcom::eval;
  bool ok = true;

  std::unordered_map<NodeId, Label> partition = {
      {1, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 3}};
  auto family = family_from_labels(partition);
  if (std::abs(average_f1(family, family) - 1.0) > 1e-12) ok = false;
  if (std::abs(nmi(partition, partition) - 1.0) > 1e-12) ok = false;

  std::unordered_map<NodeId, Label> all_in_one = {
      {1, 9}, {2, 9}, {3, 9}, {4, 9}, {5, 9}};
  if (std::abs(nmi(all_in_one, partition)) > 1e-12) ok = false;

  if (std::abs(f1_pair({1, 2, 3}, {2, 3, 4}) - 2.0 / 3.0) > 1e-12) ok = false;

  report(8, ok, "evaluation sanity values (perfect, uninformative, 2/3 pair)");
}

// 9. Runtime must scale close to linearly in the stream length and the
// retained state must scale with distinct nodes, not edges.
void criterion_scaling() {
  const std::int64_t universe = 100'000;
  const std::int64_t m = 1'000'000;

  auto synth = [&](std::int64_t edges_wanted) {
    std::mt19937_64 rng(909);
    std::uniform_int_distribution<NodeId> node_dist(0, universe - 1);
    std::vector<Edge> edges;
    edges.reserve(edges_wanted);
    for (std::int64_t e = 0; e < edges_wanted; ++e) {
      NodeId u = node_dist(rng);
      NodeId v = node_dist(rng);
      while (v == u) v = node_dist(rng);
      edges.push_back({u, v});
    }
    return edges;
  };

  auto timed_run = [](const std::vector<Edge>& edges) {
    ClusteringEngine engine(64);
    const auto start = std::chrono::steady_clock::now();
    for (const Edge& e : edges) engine.process_edge(e);
    const auto stop = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(stop - start).count();
    return std::pair<double, std::size_t>{seconds, engine.state().degrees.size()};
  };

  auto small = synth(m);
  auto large = synth(2 * m);
  // Warm-up pass so allocator effects do not distort the first timing.
  timed_run(small);
  auto [time_small, state_small] = timed_run(small);
  auto [time_large, state_large] = timed_run(large);

  const double ratio = time_large / time_small;
  const bool time_ok = ratio <= 3.0;
  // State growth must track distinct nodes: doubling the edge count over
  // a fixed node universe must not double the retained state.
  const bool memory_ok =
      state_small <= static_cast<std::size_t>(universe) &&
      state_large <= static_cast<std::size_t>(universe) &&
      state_large < static_cast<std::size_t>(state_small) * 3 / 2;

  std::ostringstream detail;
  detail.precision(3);
  detail << "1M edges: " << time_small << " s, 2M edges: " << time_large
         << " s, ratio " << ratio << "; state " << state_small << " -> "
         << state_large << " entries over " << universe << " nodes";
  report(9, time_ok && memory_ok,
         "doubling the stream stays within 3x time and node-bounded state",
         detail.str());
}

}  // namespace

int main() {
  criterion_incremental_objective();
  criterion_move_delta();
  criterion_volume_threshold();
  criterion_conservation();
  criterion_fixture();
  criterion_sweep();
  criterion_consistency_bridge();
  criterion_evaluation();
  criterion_scaling();
  std::cout << "[SKIP] criterion 10: large-scale ground-truth reproduction "
               "(optional, requires an external dataset; see README)\n";

  if (failures > 0) {
    std::cout << failures << " criterion check(s) failed\n";
    return 1;
  }
  std::cout << "all required criteria passed\n";
  return 0;
}
