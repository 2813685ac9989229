#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "streamcom/clustering_engine.hpp"

namespace streamcom {

/// One entry of a parameter sweep. total_weight is 2m, known only once
/// the pass has ended; it always equals the sum of the volumes.
struct SweepResult {
  CommunityAssignment assignment;
  std::int64_t parameter = 0;     // v_max
  std::int64_t total_weight = 0;  // w = 2m
};

/// H(v) = -sum_k (v_k/w) log(v_k/w), natural log, zero-volume terms
/// contribute 0. Throws std::invalid_argument when w <= 0.
double entropy(const std::unordered_map<Label, std::int64_t>& volumes,
               std::int64_t total_weight);

/// Mean over non-empty communities of v_k / (|C_k| (|C_k| - 1)).
/// Singleton communities contribute 0 (they have no internal pairs).
/// Throws std::invalid_argument on an empty assignment.
double average_density(const CommunityAssignment& assignment);

enum class Criterion { Entropy, Density };
enum class Direction { Max, Min };

/// Index of the result with the best criterion value; ties are broken
/// by smallest v_max. Throws std::invalid_argument on an empty list.
std::size_t select_best(const std::vector<SweepResult>& results,
                        Criterion criterion,
                        Direction direction = Direction::Max);

}  // namespace streamcom
