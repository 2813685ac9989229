#pragma once

#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace streamcom {

using NodeId = std::int64_t;

/// Undirected edge. Endpoint order is preserved as read because the
/// engine's tie rule depends on which endpoint arrives first.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line_number)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + msg),
        line_number_(line_number) {}
  std::size_t line_number() const { return line_number_; }

 private:
  std::size_t line_number_;
};

/// Parses one line of an edge-list file: two whitespace-separated
/// non-negative integers. Returns nullopt for blank lines, '#' comment
/// lines and self-loops. Throws ParseError on anything else.
std::optional<Edge> parse_edge_line(std::string_view line,
                                    std::size_t line_number = 0);

enum class Ordering { AsIs, Shuffled };

/// Single-consumer edge sequence. Each edge is delivered exactly once;
/// there is no rewind. In Shuffled mode the full edge list is buffered
/// and permuted with a seeded RNG (the one documented exception to the
/// streaming memory contract; the engine itself stays single-pass).
class EdgeStream {
 public:
  static EdgeStream from_file(const std::string& path,
                              Ordering order = Ordering::AsIs,
                              std::uint64_t seed = 0);
  static EdgeStream from_edges(std::vector<Edge> edges);

  std::optional<Edge> next();

  /// Number of edges yielded so far (t).
  std::uint64_t count() const { return yielded_; }
  std::uint64_t self_loops_skipped() const { return self_loops_; }

 private:
  EdgeStream() = default;

  std::unique_ptr<std::ifstream> file_;
  std::vector<Edge> buffer_;
  std::size_t pos_ = 0;
  bool buffered_ = false;
  std::size_t line_number_ = 0;
  std::uint64_t yielded_ = 0;
  std::uint64_t self_loops_ = 0;
};

}  // namespace streamcom
