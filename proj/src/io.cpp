#include "pll/io.hpp"

#include <fstream>
#include <sstream>

namespace pll {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string normalized = line;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream ss(normalized);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

bool skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;  // blank
}

}  // namespace

PointCloud parse_points(std::istream& in) {
  std::vector<Vector> points;
  std::string line;
  int lineno = 0;
  std::size_t ambient = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    std::vector<std::string> toks = tokenize(line);
    Vector p(toks.size());
    for (std::size_t i = 0; i < toks.size(); ++i) {
      try {
        std::size_t used = 0;
        p(i) = std::stod(toks[i], &used);
        if (used != toks[i].size()) throw std::invalid_argument(toks[i]);
      } catch (const std::exception&) {
        throw ParseError("bad coordinate '" + toks[i] + "'", lineno);
      }
    }
    if (points.empty()) {
      ambient = toks.size();
    } else if (toks.size() != ambient) {
      throw InconsistentDimension("line " + std::to_string(lineno) + ": expected " +
                                  std::to_string(ambient) + " coordinates, got " +
                                  std::to_string(toks.size()));
    }
    points.push_back(std::move(p));
  }
  return PointCloud::from_points(std::move(points));
}

WeightedGraph parse_graph(std::istream& in) {
  WeightedGraph g;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    std::vector<std::string> toks = tokenize(line);
    if (toks.size() != 3) throw ParseError("expected 'u v w'", lineno);
    int u = 0, v = 0;
    double w = 0.0;
    try {
      u = std::stoi(toks[0]);
      v = std::stoi(toks[1]);
      w = std::stod(toks[2]);
    } catch (const std::exception&) {
      throw ParseError("bad edge entry", lineno);
    }
    if (u < 0 || v < 0) throw ParseError("vertex ids must be non-negative", lineno);
    try {
      g.add_edge(u, v, w);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return g;
}

Input ingest(const std::string& path, InputKind kind) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  if (kind == InputKind::Points) return parse_points(in);
  return parse_graph(in);
}

}  // namespace pll
