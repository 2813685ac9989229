#pragma once

#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "streamcom/edge_stream.hpp"

namespace streamcom {

using Label = std::int64_t;

/// On equal community volumes the normative rule is that the first
/// endpoint joins the second (the pseudocode branch). The randomized
/// mode flips a seeded coin instead.
struct TieBreak {
  enum class Mode { Pseudocode, Random };
  Mode mode = Mode::Pseudocode;
  std::uint64_t seed = 0;

  static TieBreak pseudocode() { return {}; }
  static TieBreak random(std::uint64_t seed) {
    return {Mode::Random, seed};
  }
};

/// The algorithm's entire memory: three integer maps plus two scalars.
/// A node absent from `communities` is unassigned (label 0).
struct ClusterState {
  std::unordered_map<NodeId, std::int64_t> degrees;    // d
  std::unordered_map<NodeId, Label> communities;       // c
  std::unordered_map<Label, std::int64_t> volumes;     // v
  Label next_label = 1;                                // k
  std::int64_t v_max = 1;
};

struct CommunityAssignment {
  std::unordered_map<NodeId, Label> labels;
  std::unordered_map<Label, std::int64_t> volumes;  // nonzero entries only
};

class ClusteringEngine {
 public:
  explicit ClusteringEngine(std::int64_t v_max,
                            TieBreak tie = TieBreak::pseudocode());

  /// One loop body of the streaming algorithm. Requires e.u != e.v.
  void process_edge(const Edge& e);

  const ClusterState& state() const { return state_; }
  CommunityAssignment finish() const;

 private:
  bool first_joins_second(std::int64_t vol_first, std::int64_t vol_second);

  ClusterState state_;
  TieBreak tie_;
  std::mt19937_64 rng_;
};

/// Folds process_edge over the whole stream. Deterministic for a fixed
/// stream order and tie configuration.
CommunityAssignment run(EdgeStream& stream, std::int64_t v_max,
                        TieBreak tie = TieBreak::pseudocode());

/// Multi-parameter result: one degree map shared by every parameter
/// track, one assignment per parameter in input order.
struct SweepOutcome {
  std::unordered_map<NodeId, std::int64_t> degrees;
  std::vector<CommunityAssignment> assignments;
};

/// Single pass over the stream for all parameters at once. Only the
/// community and volume maps are duplicated per parameter; the result
/// at index a is identical to run(stream, v_max_list[a]) on the same
/// stream order.
SweepOutcome run_sweep(EdgeStream& stream,
                       const std::vector<std::int64_t>& v_max_list,
                       TieBreak tie = TieBreak::pseudocode());

}  // namespace streamcom
