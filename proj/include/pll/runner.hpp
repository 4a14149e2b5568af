#pragma once

#include <optional>
#include <string>

#include "pll/io.hpp"

namespace pll {

enum class PairMode { Diagonal, Adjacent, All, Explicit };
enum class OutputFormat { Csv, Json };

struct JobConfig {
  std::vector<double> scales;           // explicit grid, or empty with auto_scales set
  std::optional<int> auto_scales;       // evenly spaced grid over the data range
  int max_dim = kDefaultMaxDim;
  std::vector<int> dimensions = {1};    // n values to analyze
  std::vector<int> vertices;            // empty = all
  PairMode pair_mode = PairMode::Adjacent;  // Adjacent = diagonal + (i, i+1)
  std::vector<std::pair<int, int>> explicit_pairs;
  Tolerance tolerance;
  int jobs = 1;
  bool strict = false;  // abort on the first task error instead of emitting error rows
};

struct ResultRow {
  int vertex = 0;
  int n = 0;
  int i = 0;
  int j = 0;
  double r_i = 0.0;
  double r_j = 0.0;
  std::size_t size = 0;
  int zero_mult = 0;
  std::optional<double> gap;
  std::vector<double> eigenvalues;
  double seconds = 0.0;
  std::string error;  // empty on success
};

/// Resolves auto scales against the input's distance/weight range.
std::vector<double> resolve_scales(const Input& input, const JobConfig& job);

/// Runs the persistent local spectral analysis for every requested
/// (vertex, n, i, j). Results are sorted by (vertex, n, i, j) regardless of
/// the execution schedule.
std::vector<ResultRow> run(const Input& input, const JobConfig& job);

/// Global Laplacian spectra of the complex at each scale, for each
/// requested dimension. Reuses ResultRow with vertex = -1 and i = j.
std::vector<ResultRow> global_spectra(const Input& input, const JobConfig& job);

std::string to_csv(const std::vector<ResultRow>& rows, const JobConfig& job,
                   const std::vector<double>& scales);
std::string to_json(const std::vector<ResultRow>& rows, const JobConfig& job,
                    const std::vector<double>& scales);

struct ValidationCheck {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_pass() const;
};

/// Runs the library's invariant suite against the actual input at small
/// scale: boundary composition, Hodge checks, and link identities.
ValidationReport validate_input(const Input& input, const JobConfig& job);

}  // namespace pll
