#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "streamcom/clustering_engine.hpp"
#include "streamcom/edge_stream.hpp"

// Exact analysis of the streaming modularity objective. Everything here
// works on a retained edge prefix and is used for validation only; the
// clustering engine never calls into this module.
namespace streamcom::modularity {

using Rational = boost::rational<std::int64_t>;

/// Retained edge prefix S_t = (e_1, ..., e_t), order preserved.
struct StreamPrefix {
  std::vector<Edge> edges;
  std::int64_t t() const { return static_cast<std::int64_t>(edges.size()); }
};

class MissingLabelError : public std::runtime_error {
 public:
  explicit MissingLabelError(NodeId node)
      : std::runtime_error("node " + std::to_string(node) +
                           " has no community label"),
        node_(node) {}
  NodeId node() const { return node_; }

 private:
  NodeId node_;
};

struct Partition {
  std::unordered_map<NodeId, Label> labels;

  Label at(NodeId node) const {
    auto it = labels.find(node);
    if (it == labels.end()) throw MissingLabelError(node);
    return it->second;
  }
};

/// Scaled streaming objective: scaled = w * Q_t, an exact integer.
struct ObjectiveValue {
  std::int64_t scaled = 0;
  std::int64_t w = 0;

  double value() const { return static_cast<double>(scaled) / static_cast<double>(w); }
};

/// Degrees w_t(i) over the prefix.
std::unordered_map<NodeId, std::int64_t> prefix_degrees(const StreamPrefix& prefix);

/// Volumes Vol_t(C) over the prefix.
std::unordered_map<Label, std::int64_t> prefix_volumes(const StreamPrefix& prefix,
                                                       const Partition& partition);

/// Direct summation of Q_t = sum_C [2 Int_t(C) - Vol_t(C)^2 / w],
/// returned scaled by w. This is the oracle route the incremental
/// operations are checked against.
ObjectiveValue streaming_objective(const StreamPrefix& prefix,
                                   const Partition& partition, std::int64_t w);

/// Full-graph modularity Q = (streaming objective at t = m) / w^2.
double modularity(const std::vector<Edge>& edges, const Partition& partition);

/// Same value kept exact: scaled / w with w = 2m, so Q = scaled / w^2.
ObjectiveValue modularity_scaled(const std::vector<Edge>& edges,
                                 const Partition& partition);

/// One incremental update of the objective when edge `next` arrives and
/// no membership changes. volumes_at_t are the pre-update volumes; a
/// label absent from the map has volume 0.
ObjectiveValue objective_step(
    const ObjectiveValue& current, const Edge& next, const Partition& partition,
    const std::unordered_map<Label, std::int64_t>& volumes_at_t);

/// Degree of attachment of a node to a community over the prefix.
/// normalized = raw / Vol_t(C), absent when the community has volume 0.
struct Attachment {
  Rational raw;                        // L_t(i, C)
  std::optional<Rational> normalized;  // l_t(i, C), in [-1, 1]
};

Attachment attachment(const StreamPrefix& prefix, NodeId node, Label community,
                      const Partition& partition, std::int64_t w);

/// Scaled objective change w * dQ_t when node i leaves its community
/// for `target` at fixed prefix. Equals the direct before/after
/// difference of streaming_objective, exactly.
std::int64_t delta_q_move(const StreamPrefix& prefix, NodeId i,
                          const Partition& partition, Label target,
                          std::int64_t w);

/// Scaled w * dQ_{t+1} for the action "the smaller-volume endpoint of
/// `next` joins the other endpoint's community" versus no action.
/// Endpoints are swapped internally so that Vol_t(C(i)) <= Vol_t(C(j)).
/// Throws std::invalid_argument when both endpoints share a community
/// (all actions coincide there).
std::int64_t delta_q_next(const StreamPrefix& prefix, const Edge& next,
                          const Partition& partition, std::int64_t w);

/// Volume threshold v_t(i,j): whenever Vol_t(C(j)) stays below it, the
/// join performed on edge (i,j) cannot decrease the objective.
struct VolumeThreshold {
  enum class Kind { Finite, Infinite, Undefined };
  Kind kind = Kind::Infinite;
  Rational value{};  // meaningful only when kind == Finite
};

VolumeThreshold volume_threshold(const StreamPrefix& prefix, const Edge& next,
                                 const Partition& partition, std::int64_t w);

}  // namespace streamcom::modularity
