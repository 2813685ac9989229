#include "streamcom/selection_metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace streamcom {

double entropy(const std::unordered_map<Label, std::int64_t>& volumes,
               std::int64_t total_weight) {
  if (total_weight <= 0)
    throw std::invalid_argument("entropy requires a positive total weight");
  double h = 0.0;
  for (const auto& [label, volume] : volumes) {
    if (volume == 0) continue;
    const double p = static_cast<double>(volume) / static_cast<double>(total_weight);
    h -= p * std::log(p);
  }
  return h;
}

double average_density(const CommunityAssignment& assignment) {
  if (assignment.labels.empty())
    throw std::invalid_argument("average density of an empty assignment");

  std::unordered_map<Label, std::int64_t> sizes;
  for (const auto& [node, label] : assignment.labels) sizes[label]++;

  double sum = 0.0;
  for (const auto& [label, size] : sizes) {
    if (size < 2) continue;  // singletons have no internal pairs
    auto it = assignment.volumes.find(label);
    const std::int64_t volume = it == assignment.volumes.end() ? 0 : it->second;
    sum += static_cast<double>(volume) /
           (static_cast<double>(size) * static_cast<double>(size - 1));
  }
  return sum / static_cast<double>(sizes.size());
}

std::size_t select_best(const std::vector<SweepResult>& results,
                        Criterion criterion, Direction direction) {
  if (results.empty())
    throw std::invalid_argument("select_best on an empty result list");

  auto score = [&](const SweepResult& r) {
    return criterion == Criterion::Entropy
               ? entropy(r.assignment.volumes, r.total_weight)
               : average_density(r.assignment);
  };

  std::size_t best = 0;
  double best_score = score(results[0]);
  for (std::size_t idx = 1; idx < results.size(); ++idx) {
    const double s = score(results[idx]);
    const bool better = direction == Direction::Max ? s > best_score : s < best_score;
    const bool tie_wins =
        s == best_score && results[idx].parameter < results[best].parameter;
    if (better || tie_wins) {
      best = idx;
      best_score = s;
    }
  }
  return best;
}

}  // namespace streamcom
