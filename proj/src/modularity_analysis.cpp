#include "streamcom/modularity_analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace streamcom::modularity {

namespace {

std::int64_t volume_or_zero(const std::unordered_map<Label, std::int64_t>& volumes,
                            Label label) {
  auto it = volumes.find(label);
  return it == volumes.end() ? 0 : it->second;
}

// w * L_t(node, C), by literal summation over the prefix.
std::int64_t scaled_attachment(const StreamPrefix& prefix, NodeId node,
                               Label community, const Partition& partition,
                               std::int64_t w, std::int64_t node_degree) {
  std::int64_t scaled = 0;
  for (const Edge& e : prefix.edges) {
    if (partition.at(e.u) == community)
      scaled += (e.v == node ? w : 0) - node_degree;
    if (partition.at(e.v) == community)
      scaled += (e.u == node ? w : 0) - node_degree;
  }
  return scaled;
}

}  // namespace

std::unordered_map<NodeId, std::int64_t> prefix_degrees(const StreamPrefix& prefix) {
  std::unordered_map<NodeId, std::int64_t> degrees;
  for (const Edge& e : prefix.edges) {
    degrees[e.u]++;
    degrees[e.v]++;
  }
  return degrees;
}

std::unordered_map<Label, std::int64_t> prefix_volumes(const StreamPrefix& prefix,
                                                       const Partition& partition) {
  std::unordered_map<Label, std::int64_t> volumes;
  for (const Edge& e : prefix.edges) {
    volumes[partition.at(e.u)]++;
    volumes[partition.at(e.v)]++;
  }
  return volumes;
}

ObjectiveValue streaming_objective(const StreamPrefix& prefix,
                                   const Partition& partition, std::int64_t w) {
  if (w <= 0) throw std::invalid_argument("total weight must be positive");

  std::unordered_map<Label, std::int64_t> intra;
  std::unordered_map<Label, std::int64_t> volumes;
  for (const Edge& e : prefix.edges) {
    const Label cu = partition.at(e.u);
    const Label cv = partition.at(e.v);
    if (cu == cv) intra[cu]++;
    volumes[cu]++;
    volumes[cv]++;
  }

  ObjectiveValue result;
  result.w = w;
  for (const auto& [label, volume] : volumes) {
    auto it = intra.find(label);
    result.scaled += 2 * w * (it == intra.end() ? 0 : it->second) - volume * volume;
  }
  return result;
}

ObjectiveValue modularity_scaled(const std::vector<Edge>& edges,
                                 const Partition& partition) {
  if (edges.empty()) throw std::invalid_argument("modularity of an empty graph");
  const std::int64_t w = 2 * static_cast<std::int64_t>(edges.size());
  return streaming_objective(StreamPrefix{edges}, partition, w);
}

double modularity(const std::vector<Edge>& edges, const Partition& partition) {
  const ObjectiveValue scaled = modularity_scaled(edges, partition);
  return static_cast<double>(scaled.scaled) /
         (static_cast<double>(scaled.w) * static_cast<double>(scaled.w));
}

ObjectiveValue objective_step(
    const ObjectiveValue& current, const Edge& next, const Partition& partition,
    const std::unordered_map<Label, std::int64_t>& volumes_at_t) {
  const Label ci = partition.at(next.u);
  const Label cj = partition.at(next.v);
  const std::int64_t delta = ci == cj ? 1 : 0;
  const std::int64_t vol_i = volume_or_zero(volumes_at_t, ci);
  const std::int64_t vol_j = volume_or_zero(volumes_at_t, cj);

  ObjectiveValue result = current;
  result.scaled += 2 * (current.w * delta - (vol_i + vol_j + 1 + delta));
  return result;
}

Attachment attachment(const StreamPrefix& prefix, NodeId node, Label community,
                      const Partition& partition, std::int64_t w) {
  const auto degrees = prefix_degrees(prefix);
  const std::int64_t node_degree =
      degrees.count(node) ? degrees.at(node) : 0;
  const std::int64_t scaled =
      scaled_attachment(prefix, node, community, partition, w, node_degree);
  const std::int64_t volume =
      volume_or_zero(prefix_volumes(prefix, partition), community);

  Attachment result;
  result.raw = Rational(scaled, w);
  if (volume > 0) result.normalized = Rational(scaled, w * volume);
  return result;
}

std::int64_t delta_q_move(const StreamPrefix& prefix, NodeId i,
                          const Partition& partition, Label target,
                          std::int64_t w) {
  const Label current = partition.at(i);
  if (target == current)
    throw std::invalid_argument("target community equals the current one");

  const auto degrees = prefix_degrees(prefix);
  const std::int64_t degree = degrees.count(i) ? degrees.at(i) : 0;
  const std::int64_t to_target =
      scaled_attachment(prefix, i, target, partition, w, degree);
  const std::int64_t from_current =
      scaled_attachment(prefix, i, current, partition, w, degree);
  return 2 * (to_target - from_current - degree * degree);
}

std::int64_t delta_q_next(const StreamPrefix& prefix, const Edge& next,
                          const Partition& partition, std::int64_t w) {
  NodeId i = next.u;
  NodeId j = next.v;
  const Label label_i = partition.at(i);
  const Label label_j = partition.at(j);
  if (label_i == label_j)
    throw std::invalid_argument(
        "endpoints share a community; all actions are identical");

  const auto volumes = prefix_volumes(prefix, partition);
  std::int64_t vol_i = volume_or_zero(volumes, label_i);
  std::int64_t vol_j = volume_or_zero(volumes, label_j);
  if (vol_i > vol_j) {
    std::swap(i, j);
    std::swap(vol_i, vol_j);
  }

  const auto degrees = prefix_degrees(prefix);
  const std::int64_t degree = degrees.count(i) ? degrees.at(i) : 0;
  const std::int64_t move = delta_q_move(prefix, i, partition, partition.at(j), w);
  return move + 2 * (w - (vol_j - vol_i + 2 * degree + 1));
}

VolumeThreshold volume_threshold(const StreamPrefix& prefix, const Edge& next,
                                 const Partition& partition, std::int64_t w) {
  NodeId i = next.u;
  NodeId j = next.v;
  const Label label_i = partition.at(i);
  const Label label_j = partition.at(j);
  if (label_i == label_j)
    throw std::invalid_argument(
        "endpoints share a community; the threshold is not defined");

  const auto volumes = prefix_volumes(prefix, partition);
  std::int64_t vol_i = volume_or_zero(volumes, label_i);
  std::int64_t vol_j = volume_or_zero(volumes, label_j);
  if (vol_i > vol_j) std::swap(i, j);

  const Attachment own = attachment(prefix, i, partition.at(i), partition, w);
  const Attachment other = attachment(prefix, i, partition.at(j), partition, w);

  VolumeThreshold result;
  if (!own.normalized || !other.normalized) {
    // A zero-volume community has a vacuously zero attachment, in which
    // case the threshold degenerates to the unconditional case.
    const bool inconsistent =
        (!own.normalized && own.raw != Rational(0)) ||
        (!other.normalized && other.raw != Rational(0));
    result.kind = inconsistent ? VolumeThreshold::Kind::Undefined
                               : VolumeThreshold::Kind::Infinite;
    return result;
  }

  const Rational difference = *own.normalized - *other.normalized;
  if (difference == Rational(0)) {
    result.kind = VolumeThreshold::Kind::Infinite;
    return result;
  }

  const auto degrees = prefix_degrees(prefix);
  const std::int64_t degree = degrees.count(i) ? degrees.at(i) : 0;
  const Rational numerator(w - (degree + 1) * (degree + 1), w);
  result.kind = VolumeThreshold::Kind::Finite;
  result.value = numerator / difference;
  return result;
}

}  // namespace streamcom::modularity
