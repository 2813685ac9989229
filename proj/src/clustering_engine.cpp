#include "streamcom/clustering_engine.hpp"

#include <cassert>
#include <stdexcept>

namespace streamcom {

ClusteringEngine::ClusteringEngine(std::int64_t v_max, TieBreak tie)
    : tie_(tie), rng_(tie.seed) {
  if (v_max < 1) throw std::invalid_argument("v_max must be >= 1");
  state_.v_max = v_max;
}

bool ClusteringEngine::first_joins_second(std::int64_t vol_first,
                                          std::int64_t vol_second) {
  if (vol_first != vol_second) return vol_first < vol_second;
  if (tie_.mode == TieBreak::Mode::Random) return (rng_() & 1u) != 0;
  return true;  // pseudocode branch: i joins j on equality
}

void ClusteringEngine::process_edge(const Edge& e) {
  assert(e.u != e.v);
  ClusterState& s = state_;

  Label& ci = s.communities[e.u];
  if (ci == 0) ci = s.next_label++;
  Label& cj = s.communities[e.v];
  if (cj == 0) cj = s.next_label++;

  s.degrees[e.u]++;
  s.degrees[e.v]++;

  // The two increments hit the same entry when ci == cj; the guard then
  // reads the fully updated volume.
  s.volumes[ci]++;
  s.volumes[cj]++;

  const std::int64_t vol_i = s.volumes[ci];
  const std::int64_t vol_j = s.volumes[cj];
  if (vol_i > s.v_max || vol_j > s.v_max) return;

  if (first_joins_second(vol_i, vol_j)) {
    s.volumes[cj] += s.degrees[e.u];
    s.volumes[ci] -= s.degrees[e.u];
    ci = cj;
  } else {
    s.volumes[ci] += s.degrees[e.v];
    s.volumes[cj] -= s.degrees[e.v];
    cj = ci;
  }
}

CommunityAssignment ClusteringEngine::finish() const {
  CommunityAssignment result;
  result.labels = state_.communities;
  for (const auto& [label, volume] : state_.volumes)
    if (volume != 0) result.volumes.emplace(label, volume);
  return result;
}

CommunityAssignment run(EdgeStream& stream, std::int64_t v_max, TieBreak tie) {
  ClusteringEngine engine(v_max, tie);
  while (auto e = stream.next()) engine.process_edge(*e);
  return engine.finish();
}

SweepOutcome run_sweep(EdgeStream& stream,
                       const std::vector<std::int64_t>& v_max_list,
                       TieBreak tie) {
  if (v_max_list.empty())
    throw std::invalid_argument("v_max list must be non-empty");

  // One track per parameter: its own c, v, k and tie RNG. The degree
  // map is instantiated once and shared.
  struct Track {
    std::unordered_map<NodeId, Label> communities;
    std::unordered_map<Label, std::int64_t> volumes;
    Label next_label = 1;
    std::int64_t v_max;
    std::mt19937_64 rng;
  };

  SweepOutcome outcome;
  std::vector<Track> tracks;
  tracks.reserve(v_max_list.size());
  for (std::int64_t v_max : v_max_list) {
    if (v_max < 1) throw std::invalid_argument("v_max must be >= 1");
    tracks.push_back(Track{{}, {}, 1, v_max, std::mt19937_64(tie.seed)});
  }

  auto& degrees = outcome.degrees;
  const bool random_tie = tie.mode == TieBreak::Mode::Random;

  while (auto edge = stream.next()) {
    const Edge e = *edge;
    degrees[e.u]++;
    degrees[e.v]++;
    for (Track& track : tracks) {
      Label& ci = track.communities[e.u];
      if (ci == 0) ci = track.next_label++;
      Label& cj = track.communities[e.v];
      if (cj == 0) cj = track.next_label++;

      track.volumes[ci]++;
      track.volumes[cj]++;
      const std::int64_t vol_i = track.volumes[ci];
      const std::int64_t vol_j = track.volumes[cj];
      if (vol_i > track.v_max || vol_j > track.v_max) continue;

      bool i_joins_j = vol_i < vol_j ||
                       (vol_i == vol_j &&
                        (!random_tie || (track.rng() & 1u) != 0));
      if (i_joins_j) {
        track.volumes[cj] += degrees[e.u];
        track.volumes[ci] -= degrees[e.u];
        ci = cj;
      } else {
        track.volumes[ci] += degrees[e.v];
        track.volumes[cj] -= degrees[e.v];
        cj = ci;
      }
    }
  }

  outcome.assignments.reserve(tracks.size());
  for (Track& track : tracks) {
    CommunityAssignment assignment;
    assignment.labels = std::move(track.communities);
    for (const auto& [label, volume] : track.volumes)
      if (volume != 0) assignment.volumes.emplace(label, volume);
    outcome.assignments.push_back(std::move(assignment));
  }
  return outcome;
}

}  // namespace streamcom
