#include "streamcom/evaluation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>

namespace streamcom::eval {

GroundTruthCover load_cover(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open cover file: " + path);

  GroundTruthCover cover;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(file, line)) {
    ++line_number;
    NodeSet community;
    std::size_t pos = 0;
    bool comment = false;
    while (pos < line.size()) {
      while (pos < line.size() &&
             (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
        ++pos;
      std::size_t start = pos;
      while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' &&
             line[pos] != '\r')
        ++pos;
      if (pos == start) continue;
      if (line[start] == '#') {
        comment = true;
        break;
      }
      NodeId node;
      auto [ptr, ec] = std::from_chars(line.data() + start, line.data() + pos, node);
      if (ec != std::errc{} || ptr != line.data() + pos || node < 0)
        throw std::runtime_error("cover file " + path + ", line " +
                                 std::to_string(line_number) +
                                 ": non-integer node id");
      community.insert(node);
    }
    if (comment) continue;
    if (community.empty()) {
      ++cover.skipped_lines;
      continue;
    }
    cover.communities.push_back(std::move(community));
  }
  return cover;
}

double f1_pair(const NodeSet& a, const NodeSet& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("f1_pair on an empty set");
  std::size_t common = 0;
  for (NodeId node : a) common += b.count(node);
  return 2.0 * static_cast<double>(common) /
         static_cast<double>(a.size() + b.size());
}

namespace {

double best_match_mean(const std::vector<NodeSet>& from,
                       const std::vector<NodeSet>& to) {
  double sum = 0.0;
  for (const NodeSet& f : from) {
    double best = 0.0;
    for (const NodeSet& t : to) best = std::max(best, f1_pair(f, t));
    sum += best;
  }
  return sum / static_cast<double>(from.size());
}

}  // namespace

double average_f1(const std::vector<NodeSet>& detected,
                  const std::vector<NodeSet>& truth) {
  if (detected.empty() || truth.empty())
    throw std::invalid_argument("average_f1 on an empty community family");
  return 0.5 * (best_match_mean(detected, truth) + best_match_mean(truth, detected));
}

double nmi(const std::unordered_map<NodeId, Label>& a,
           const std::unordered_map<NodeId, Label>& b) {
  std::map<Label, std::int64_t> count_a;
  std::map<Label, std::int64_t> count_b;
  std::map<std::pair<Label, Label>, std::int64_t> joint;
  std::int64_t n = 0;
  for (const auto& [node, label_a] : a) {
    auto it = b.find(node);
    if (it == b.end()) continue;
    ++n;
    count_a[label_a]++;
    count_b[it->second]++;
    joint[{label_a, it->second}]++;
  }
  if (n == 0)
    throw std::invalid_argument("nmi: the node domains are disjoint");

  const double total = static_cast<double>(n);
  double mutual = 0.0;
  for (const auto& [labels, count] : joint) {
    const double pxy = count / total;
    const double px = count_a[labels.first] / total;
    const double py = count_b[labels.second] / total;
    mutual += pxy * std::log(pxy / (px * py));
  }

  auto entropy_of = [total](const std::map<Label, std::int64_t>& counts) {
    double h = 0.0;
    for (const auto& [label, count] : counts) {
      const double p = count / total;
      h -= p * std::log(p);
    }
    return h;
  };

  const double h_a = entropy_of(count_a);
  const double h_b = entropy_of(count_b);
  if (mutual <= 0.0 || h_a + h_b == 0.0) return 0.0;
  return 2.0 * mutual / (h_a + h_b);
}

NodeSet cover_universe(const GroundTruthCover& cover) {
  NodeSet universe;
  for (const NodeSet& community : cover.communities)
    universe.insert(community.begin(), community.end());
  return universe;
}

std::vector<NodeSet> restrict_family(const std::vector<NodeSet>& family,
                                     const NodeSet& universe) {
  std::vector<NodeSet> restricted;
  for (const NodeSet& community : family) {
    NodeSet kept;
    std::set_intersection(community.begin(), community.end(), universe.begin(),
                          universe.end(), std::inserter(kept, kept.begin()));
    if (!kept.empty()) restricted.push_back(std::move(kept));
  }
  return restricted;
}

std::unordered_map<NodeId, Label> cover_to_partition(const GroundTruthCover& cover) {
  std::unordered_map<NodeId, Label> labels;
  Label next = 1;
  for (const NodeSet& community : cover.communities) {
    for (NodeId node : community) labels.try_emplace(node, next);
    ++next;
  }
  return labels;
}

std::vector<NodeSet> family_from_labels(
    const std::unordered_map<NodeId, Label>& labels) {
  std::map<Label, NodeSet> by_label;
  for (const auto& [node, label] : labels) by_label[label].insert(node);
  std::vector<NodeSet> family;
  family.reserve(by_label.size());
  for (auto& [label, community] : by_label)
    family.push_back(std::move(community));
  return family;
}

}  // namespace streamcom::eval
