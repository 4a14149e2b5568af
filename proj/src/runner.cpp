#include "pll/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace pll {

namespace {

constexpr const char* kVersion = "1.0.0";

std::vector<int> all_vertex_ids(const Input& input) {
  if (std::holds_alternative<PointCloud>(input)) {
    const auto& pc = std::get<PointCloud>(input);
    std::vector<int> out(pc.size());
    for (std::size_t i = 0; i < pc.size(); ++i) out[i] = static_cast<int>(i);
    return out;
  }
  return std::get<WeightedGraph>(input).vertices;
}

Filtration link_filtration_for(const Input& input, int v, const std::vector<double>& scales,
                               int max_dim) {
  if (std::holds_alternative<PointCloud>(input)) {
    return neighborhood_link_filtration(std::get<PointCloud>(input), v, scales, max_dim);
  }
  return graph_link_filtration(std::get<WeightedGraph>(input), v, scales, max_dim);
}

std::vector<std::pair<int, int>> resolve_pairs(const JobConfig& job, int num_steps) {
  std::vector<std::pair<int, int>> pairs;
  switch (job.pair_mode) {
    case PairMode::Diagonal:
      for (int i = 0; i < num_steps; ++i) pairs.emplace_back(i, i);
      break;
    case PairMode::Adjacent:
      for (int i = 0; i < num_steps; ++i) {
        pairs.emplace_back(i, i);
        if (i + 1 < num_steps) pairs.emplace_back(i, i + 1);
      }
      break;
    case PairMode::All:
      for (int i = 0; i < num_steps; ++i)
        for (int j = i; j < num_steps; ++j) pairs.emplace_back(i, j);
      break;
    case PairMode::Explicit:
      pairs = job.explicit_pairs;
      for (auto [i, j] : pairs) {
        if (i < 0 || j >= num_steps || i > j) {
          throw IndexOutOfRange("pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
      break;
  }
  return pairs;
}

void fill_spectrum(ResultRow& row, const Matrix& op, const Tolerance& tol) {
  Spectrum spec = symmetric_eigenvalues(op, tol);
  row.size = static_cast<std::size_t>(op.rows());
  row.zero_mult = static_cast<int>(spec.zero_multiplicity);
  row.gap = spec.spectral_gap;
  row.eigenvalues = std::move(spec.eigenvalues);
}

std::string format_value(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

}  // namespace

std::vector<double> resolve_scales(const Input& input, const JobConfig& job) {
  if (!job.scales.empty()) {
    for (std::size_t i = 1; i < job.scales.size(); ++i) {
      if (!(job.scales[i - 1] < job.scales[i])) {
        throw NonMonotoneScales("scales must be strictly ascending");
      }
    }
    return job.scales;
  }
  if (!job.auto_scales || *job.auto_scales < 1) {
    throw NonMonotoneScales("either explicit scales or --auto-scales N is required");
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  if (std::holds_alternative<PointCloud>(input)) {
    const auto& pc = std::get<PointCloud>(input);
    for (std::size_t a = 0; a < pc.size(); ++a)
      for (std::size_t b = a + 1; b < pc.size(); ++b) {
        const double d = pc.distance(static_cast<int>(a), static_cast<int>(b));
        lo = std::min(lo, d);
        hi = std::max(hi, d);
      }
  } else {
    for (const auto& e : std::get<WeightedGraph>(input).edges) {
      lo = std::min(lo, e.w);
      hi = std::max(hi, e.w);
    }
  }
  if (!std::isfinite(lo)) throw NonMonotoneScales("input has no distances to derive scales from");
  const int n = *job.auto_scales;
  std::vector<double> scales;
  if (n == 1) {
    scales.push_back(hi);
  } else {
    for (int k = 0; k < n; ++k) scales.push_back(lo + (hi - lo) * k / (n - 1));
  }
  return scales;
}

std::vector<ResultRow> run(const Input& input, const JobConfig& job) {
  const std::vector<double> scales = resolve_scales(input, job);
  std::vector<int> verts = job.vertices.empty() ? all_vertex_ids(input) : job.vertices;
  const std::vector<std::pair<int, int>> pairs =
      resolve_pairs(job, static_cast<int>(scales.size()));

  struct Task {
    int v, n, i, j;
  };
  std::vector<Task> tasks;
  for (int v : verts)
    for (int n : job.dimensions)
      for (auto [i, j] : pairs) tasks.push_back({v, n, i, j});

  std::vector<ResultRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};

  auto worker = [&]() {
    while (!abort.load()) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) break;
      const Task& task = tasks[t];
      ResultRow& row = rows[t];
      row.vertex = task.v;
      row.n = task.n;
      row.i = task.i;
      row.j = task.j;
      row.r_i = scales[task.i];
      row.r_j = scales[task.j];
      const auto start = std::chrono::steady_clock::now();
      try {
        Filtration lf = link_filtration_for(input, task.v, scales, job.max_dim);
        if (task.n == 0) {
          Matrix op(1, 1);
          op(0, 0) = static_cast<double>(lf.step(task.j).size(0));
          fill_spectrum(row, op, job.tolerance);
        } else {
          DGMorphism f = inclusion_morphism(lf.step(task.i), lf.step(task.j));
          fill_spectrum(row, generalized_persistent_laplacian(f, task.n - 1, job.tolerance),
                        job.tolerance);
        }
      } catch (const std::exception& e) {
        row.error = e.what();
        if (job.strict) abort.store(true);
      }
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };

  const int jobs = std::max(1, job.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int p = 0; p < jobs; ++p) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  if (job.strict) {
    for (const ResultRow& row : rows) {
      if (!row.error.empty()) {
        throw std::runtime_error("task (" + std::to_string(row.vertex) + "," +
                                 std::to_string(row.n) + "," + std::to_string(row.i) + "," +
                                 std::to_string(row.j) + ") failed: " + row.error);
      }
    }
  }

  std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    return std::tie(a.vertex, a.n, a.i, a.j) < std::tie(b.vertex, b.n, b.i, b.j);
  });
  return rows;
}

std::vector<ResultRow> global_spectra(const Input& input, const JobConfig& job) {
  const std::vector<double> scales = resolve_scales(input, job);
  std::vector<ResultRow> rows;
  for (std::size_t i = 0; i < scales.size(); ++i) {
    SimplicialComplex k;
    if (std::holds_alternative<PointCloud>(input)) {
      k = vietoris_rips(std::get<PointCloud>(input), scales[i], job.max_dim);
    } else {
      k = clique_complex(std::get<WeightedGraph>(input), scales[i], job.max_dim);
    }
    for (int n : job.dimensions) {
      ResultRow row;
      row.vertex = -1;
      row.n = n;
      row.i = row.j = static_cast<int>(i);
      row.r_i = row.r_j = scales[i];
      try {
        if (n > k.max_dimension()) {
          fill_spectrum(row, Matrix::Zero(0, 0), job.tolerance);
        } else {
          fill_spectrum(row, combinatorial_laplacian(k, n), job.tolerance);
        }
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string to_csv(const std::vector<ResultRow>& rows, const JobConfig& job,
                   const std::vector<double>& scales) {
  std::ostringstream out;
  out << "# pll " << kVersion << '\n';
  out << "# tolerance relative=" << format_value(job.tolerance.relative)
      << " absolute_floor=" << format_value(job.tolerance.absolute_floor) << '\n';
  out << "# scales";
  for (double r : scales) out << ' ' << format_value(r);
  out << '\n';
  out << "vertex,n,i,j,r_i,r_j,size,zero_mult,gap,eigenvalues\n";
  for (const ResultRow& row : rows) {
    if (!row.error.empty()) {
      out << row.vertex << ',' << row.n << ',' << row.i << ',' << row.j << ",,,,,,ERROR:"
          << row.error << '\n';
      continue;
    }
    out << row.vertex << ',' << row.n << ',' << row.i << ',' << row.j << ','
        << format_value(row.r_i) << ',' << format_value(row.r_j) << ',' << row.size << ','
        << row.zero_mult << ',' << (row.gap ? format_value(*row.gap) : "") << ',';
    for (std::size_t k = 0; k < row.eigenvalues.size(); ++k) {
      if (k) out << ';';
      out << format_value(row.eigenvalues[k]);
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json(const std::vector<ResultRow>& rows, const JobConfig& job,
                    const std::vector<double>& scales) {
  nlohmann::json doc;
  doc["header"] = {{"version", kVersion},
                   {"tolerance",
                    {{"relative", job.tolerance.relative},
                     {"absolute_floor", job.tolerance.absolute_floor}}},
                   {"scales", scales}};
  doc["results"] = nlohmann::json::array();
  for (const ResultRow& row : rows) {
    nlohmann::json r = {{"vertex", row.vertex}, {"n", row.n},       {"i", row.i},
                        {"j", row.j},           {"r_i", row.r_i},   {"r_j", row.r_j},
                        {"size", row.size},     {"zero_mult", row.zero_mult},
                        {"seconds", row.seconds}};
    if (row.gap) r["gap"] = *row.gap;
    r["eigenvalues"] = row.eigenvalues;
    if (!row.error.empty()) r["error"] = row.error;
    doc["results"].push_back(std::move(r));
  }
  return doc.dump(2);
}

bool ValidationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ValidationCheck& c) { return c.pass; });
}

ValidationReport validate_input(const Input& input, const JobConfig& job) {
  ValidationReport report;
  const std::vector<double> scales = resolve_scales(input, job);
  const double top = scales.back();

  SimplicialComplex k;
  if (std::holds_alternative<PointCloud>(input)) {
    k = vietoris_rips(std::get<PointCloud>(input), top, job.max_dim);
  } else {
    k = clique_complex(std::get<WeightedGraph>(input), top, job.max_dim);
  }

  {  // d o d = 0, exactly
    ValidationCheck c{"boundary_composition", true, 0.0};
    for (int n = 1; n < k.max_dimension(); ++n) {
      Eigen::MatrixXi prod = boundary_matrix_int(k, n) * boundary_matrix_int(k, n + 1);
      const int worst = prod.size() > 0 ? prod.cwiseAbs().maxCoeff() : 0;
      c.residual = std::max(c.residual, static_cast<double>(worst));
    }
    c.pass = c.residual == 0.0;
    report.checks.push_back(c);
  }

  {  // Hodge: zero multiplicity of the Laplacian spectrum vs Betti numbers
    ValidationCheck c{"hodge_kernel_vs_betti", true, 0.0};
    const int up_to = std::min(2, std::max(k.max_dimension(), 0));
    if (!k.empty()) {
      std::vector<int> betti = betti_numbers(k, up_to);
      for (int n = 0; n <= up_to; ++n) {
        if (k.size(n) == 0) continue;
        Spectrum spec = symmetric_eigenvalues(combinatorial_laplacian(k, n), job.tolerance);
        if (static_cast<int>(spec.zero_multiplicity) != betti[n]) c.pass = false;
        if (!spec.eigenvalues.empty()) {
          c.residual = std::max(c.residual, std::max(0.0, -spec.eigenvalues.front()));
        }
      }
    }
    report.checks.push_back(c);
  }

  {  // link identity between the global complex and the per-vertex builder
    ValidationCheck c{"link_identity", true, 0.0};
    for (int v : all_vertex_ids(input)) {
      if (!k.has_vertex(v)) continue;
      SimplicialComplex via_complex = link(k, v);
      SimplicialComplex via_builder;
      if (std::holds_alternative<PointCloud>(input)) {
        Filtration lf =
            neighborhood_link_filtration(std::get<PointCloud>(input), v, {top}, job.max_dim);
        via_builder = lf.step(0);
      } else {
        via_builder = graph_link_view(std::get<WeightedGraph>(input), v, top, job.max_dim);
      }
      if (via_complex.all_simplices() != via_builder.all_simplices()) c.pass = false;
    }
    report.checks.push_back(c);
  }

  {  // local Hodge: kernel of the local Laplacian vs local Betti numbers
    ValidationCheck c{"local_hodge", true, 0.0};
    for (int v : all_vertex_ids(input)) {
      if (!k.has_vertex(v)) continue;
      SimplicialComplex lk = link(k, v);
      for (int n = 0; n <= 2; ++n) {
        // Expected kernel dimension: the Betti number of the link at n-1
        // (for n = 0, the operator [deg v] is singular iff v is isolated).
        int expected = 0;
        if (n == 0) {
          expected = lk.empty() ? 1 : 0;
        } else if (lk.size(n - 1) > 0) {
          expected = betti_numbers(lk, n - 1)[n - 1];
        }
        Matrix op = local_laplacian(k, v, n);
        if (op.rows() == 0) {
          if (expected != 0) c.pass = false;
          continue;
        }
        Spectrum spec = symmetric_eigenvalues(op, job.tolerance);
        if (static_cast<int>(spec.zero_multiplicity) != expected) c.pass = false;
        if (!spec.eigenvalues.empty()) {
          c.residual = std::max(c.residual, std::max(0.0, -spec.eigenvalues.front()));
        }
      }
    }
    report.checks.push_back(c);
  }

  return report;
}

}  // namespace pll
