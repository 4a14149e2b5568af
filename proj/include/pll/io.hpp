#pragma once

#include <string>
#include <variant>

#include "pll/builders.hpp"

namespace pll {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};
struct InconsistentDimension : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class InputKind { Points, Graph };

using Input = std::variant<PointCloud, WeightedGraph>;

/// Points: CSV or whitespace rows of coordinates. Graph: "u v w" edge
/// lines. Lines starting with '#' are ignored in both formats.
Input ingest(const std::string& path, InputKind kind);

PointCloud parse_points(std::istream& in);
WeightedGraph parse_graph(std::istream& in);

}  // namespace pll
