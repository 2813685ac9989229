#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "streamcom/clustering_engine.hpp"
#include "streamcom/edge_stream.hpp"

namespace streamcom::eval {

using NodeSet = std::set<NodeId>;

/// Ground-truth communities, one node set per line of a cover file.
/// Overlaps and partial node coverage are allowed.
struct GroundTruthCover {
  std::vector<NodeSet> communities;
  std::size_t skipped_lines = 0;  // blank lines in the input
};

GroundTruthCover load_cover(const std::string& path);

/// 2 |a n b| / (|a| + |b|). Throws std::invalid_argument on empty sets.
double f1_pair(const NodeSet& a, const NodeSet& b);

/// Bidirectional best-match mean:
/// (1/2) [ mean_d max_g F1(d,g) + mean_g max_d F1(g,d) ].
double average_f1(const std::vector<NodeSet>& detected,
                  const std::vector<NodeSet>& truth);

/// Partition NMI with arithmetic-mean normalization, computed over the
/// common node domain. Returns 0 when either labeling carries no
/// information. Throws std::invalid_argument when the domains are
/// disjoint.
double nmi(const std::unordered_map<NodeId, Label>& a,
           const std::unordered_map<NodeId, Label>& b);

// Restriction helpers: scoring happens over the nodes that appear in at
// least one ground-truth community.
NodeSet cover_universe(const GroundTruthCover& cover);
std::vector<NodeSet> restrict_family(const std::vector<NodeSet>& family,
                                     const NodeSet& universe);

/// Collapses an overlapping cover into a partition: each node keeps its
/// first-listed community.
std::unordered_map<NodeId, Label> cover_to_partition(const GroundTruthCover& cover);

std::vector<NodeSet> family_from_labels(
    const std::unordered_map<NodeId, Label>& labels);

}  // namespace streamcom::eval
