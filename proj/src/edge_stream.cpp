#include "streamcom/edge_stream.hpp"

#include <algorithm>
#include <charconv>
#include <random>

namespace streamcom {

namespace {

bool parse_node_id(std::string_view token, NodeId& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size() && out >= 0;
}

// A skipped line is a self-loop iff it is neither blank nor a comment
// (anything else malformed would have thrown).
bool is_self_loop_line(std::string_view line) {
  std::size_t first = line.find_first_not_of(" \t\r");
  return first != std::string_view::npos && line[first] != '#';
}

}  // namespace

std::optional<Edge> parse_edge_line(std::string_view line, std::size_t line_number) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                 line[pos] == '\r'))
      ++pos;
    std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' &&
           line[pos] != '\r')
      ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }

  if (tokens.empty()) return std::nullopt;
  if (tokens.front().front() == '#') return std::nullopt;
  if (tokens.size() != 2)
    throw ParseError("expected two tokens, found " + std::to_string(tokens.size()),
                     line_number);

  Edge e;
  if (!parse_node_id(tokens[0], e.u) || !parse_node_id(tokens[1], e.v))
    throw ParseError("non-integer node id", line_number);
  if (e.u == e.v) return std::nullopt;  // self-loop, dropped
  return e;
}

EdgeStream EdgeStream::from_file(const std::string& path, Ordering order,
                                 std::uint64_t seed) {
  EdgeStream stream;
  auto file = std::make_unique<std::ifstream>(path);
  if (!*file) throw std::runtime_error("cannot open edge file: " + path);

  if (order == Ordering::AsIs) {
    stream.file_ = std::move(file);
    return stream;
  }

  // Shuffled mode buffers the full list; the engine stays single-pass.
  stream.buffered_ = true;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(*file, line)) {
    ++line_number;
    auto parsed = parse_edge_line(line, line_number);
    if (parsed)
      stream.buffer_.push_back(*parsed);
    else if (is_self_loop_line(line))
      ++stream.self_loops_;
  }
  std::mt19937_64 rng(seed);
  std::shuffle(stream.buffer_.begin(), stream.buffer_.end(), rng);
  return stream;
}

EdgeStream EdgeStream::from_edges(std::vector<Edge> edges) {
  EdgeStream stream;
  stream.buffered_ = true;
  stream.buffer_ = std::move(edges);
  return stream;
}

std::optional<Edge> EdgeStream::next() {
  if (buffered_) {
    if (pos_ >= buffer_.size()) return std::nullopt;
    ++yielded_;
    return buffer_[pos_++];
  }

  std::string line;
  while (std::getline(*file_, line)) {
    ++line_number_;
    auto parsed = parse_edge_line(line, line_number_);
    if (parsed) {
      ++yielded_;
      return parsed;
    }
    if (is_self_loop_line(line)) ++self_loops_;
  }
  return std::nullopt;
}

}  // namespace streamcom
