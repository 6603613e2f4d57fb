// Copyright 2026 The remeshx Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>

#include "remeshx/bench.hpp"
#include "remeshx/error.hpp"
#include "remeshx/generate.hpp"
#include "remeshx/io.hpp"
#include "remeshx/mesh_ops.hpp"
#include "remeshx/parallel.hpp"
#include "remeshx/reindex.hpp"

namespace remeshx::cli {

namespace {

struct GlobalOptions {
  std::optional<unsigned> threads;
  std::string format;
  bool quiet = false;
  std::optional<std::uint32_t> dim;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<MeshFormat> chosen_format(const GlobalOptions& g) {
  if (g.format.empty()) return std::nullopt;
  return parse_format(g.format);
}

MeshDocument load(const GlobalOptions& g, const std::string& path) {
  return read_mesh(path, chosen_format(g), ObjReadOptions{g.dim});
}

void save(const GlobalOptions& g, const Mesh& mesh, const std::string& path) {
  write_mesh(mesh, path, chosen_format(g));
}

void summary(const GlobalOptions& g, std::ostream& out, const std::string& what, const Mesh& in,
             const Mesh& result) {
  if (g.quiet) return;
  out << what << ": " << in.num_vertices() << " -> " << result.num_vertices() << " vertices, "
      << result.num_elements() << " elements\n";
}

struct MeshStats {
  std::size_t vertices = 0;
  std::size_t elements = 0;
  std::size_t distinct = 0;
  std::size_t duplicates = 0;
  std::size_t unused = 0;
  std::size_t bad_indices = 0;
};

MeshStats compute_stats(const Mesh& mesh) {
  MeshStats s;
  s.vertices = mesh.num_vertices();
  s.elements = mesh.num_elements();
  std::vector<std::size_t> order(s.vertices);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return vertex_less(mesh.vertex(a), mesh.vertex(b));
  });
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || !vertex_equal(mesh.vertex(order[i]), mesh.vertex(order[i - 1]))) ++s.distinct;
  }
  s.duplicates = s.vertices - s.distinct;
  std::vector<bool> used(s.vertices, false);
  for (const std::uint32_t i : mesh.indices()) {
    if (i < s.vertices) {
      used[i] = true;
    } else {
      ++s.bad_indices;
    }
  }
  s.unused = static_cast<std::size_t>(std::count(used.begin(), used.end(), false));
  return s;
}

}  // namespace

std::vector<std::size_t> parse_ranges(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  auto number = [&](std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw UsageError("bad range component '" + std::string(s) + "'");
    }
    return v;
  };
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string_view part(text.data() + start, comma - start);
    if (part.empty()) throw UsageError("empty range in '" + text + "'");
    const auto dash = part.find('-');
    if (dash == std::string_view::npos) {
      out.push_back(number(part));
    } else {
      const std::size_t lo = number(part.substr(0, dash));
      const std::size_t hi = number(part.substr(dash + 1));
      if (hi < lo) throw UsageError("descending range '" + std::string(part) + "'");
      for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
    }
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Data-parallel mesh re-indexing: remove duplicate and unused vertices."};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores; default: $REMESHX_THREADS)");
  app.add_option("--format", g.format, "Force the mesh file format")
      ->check(CLI::IsMember({"obj", "bin"}));
  app.add_flag("--quiet,-q", g.quiet, "Suppress progress output");
  app.add_option("--dim", g.dim, "Vertex dimension for OBJ input (2 drops z)")
      ->check(CLI::IsMember({2u, 3u}));

  std::string in_path;
  std::string out_path;

  auto* reindex_cmd = app.add_subcommand("reindex", "Remove duplicate and unused vertices");
  reindex_cmd->add_option("input", in_path)->required();
  reindex_cmd->add_option("output", out_path)->required();

  std::vector<std::string> merge_files;
  auto* merge_cmd = app.add_subcommand("merge", "Merge meshes and weld shared vertices");
  merge_cmd->add_option("files", merge_files, "<in>... <out>")->required()->expected(2, -1);

  auto* soup_cmd =
      app.add_subcommand("soup", "Rebuild a mesh from its elements, ignoring index sharing");
  soup_cmd->add_option("input", in_path)->required();
  soup_cmd->add_option("output", out_path)->required();

  std::string keep;
  std::string group;
  auto* subset_cmd = app.add_subcommand("subset", "Extract a compact mesh of selected elements");
  subset_cmd->add_option("input", in_path)->required();
  subset_cmd->add_option("output", out_path)->required();
  auto* keep_opt = subset_cmd->add_option("--keep", keep, "Element ranges, e.g. 0-3,7");
  auto* group_opt = subset_cmd->add_option("--group", group, "OBJ group/object/material name");
  keep_opt->excludes(group_opt);

  std::size_t gen_n = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Generate the replicated-vertex quad grid");
  gen_cmd->add_option("--n", gen_n, "Grid size N (N x N quads)")->required()->check(
      CLI::PositiveNumber);
  gen_cmd->add_option("output", out_path)->required();

  std::vector<std::size_t> sizes;
  std::size_t reps = kDefaultBenchReps;
  std::string csv_path;
  auto* bench_cmd = app.add_subcommand("bench", "Time serial vs parallel reindexing on grids");
  bench_cmd->add_option("--sizes", sizes, "Comma-separated grid sizes")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--reps", reps, "Timed repetitions per method")->check(
      CLI::PositiveNumber);
  bench_cmd->add_option("--csv", csv_path, "Also write the records as CSV");

  auto* validate_cmd = app.add_subcommand("validate", "Check that every index is in range");
  validate_cmd->add_option("input", in_path)->required();

  auto* stats_cmd = app.add_subcommand("stats", "Print vertex, element, duplicate and unused counts");
  stats_cmd->add_option("input", in_path)->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (!g.format.empty() && !parse_format(g.format)) {
    err << "unknown format '" << g.format << "'\n";
    return kExitUsage;
  }
  if (g.threads) set_worker_count(*g.threads);

  try {
    if (*reindex_cmd) {
      const Mesh in = load(g, in_path).mesh;
      const Mesh result = reindex(in).mesh;
      save(g, result, out_path);
      summary(g, out, "reindex", in, result);
    } else if (*merge_cmd) {
      const std::string target = merge_files.back();
      merge_files.pop_back();
      std::vector<Mesh> meshes;
      std::size_t total = 0;
      for (const auto& f : merge_files) {
        meshes.push_back(load(g, f).mesh);
        total += meshes.back().num_vertices();
      }
      const Mesh result = merge(meshes);
      save(g, result, target);
      if (!g.quiet) {
        out << "merge: " << meshes.size() << " meshes, " << total << " -> "
            << result.num_vertices() << " vertices, " << result.num_elements() << " elements\n";
      }
    } else if (*soup_cmd) {
      const Mesh in = load(g, in_path).mesh;
      const Mesh result = soup_to_mesh(dereference(in));
      save(g, result, out_path);
      summary(g, out, "soup", in, result);
    } else if (*subset_cmd) {
      if (keep_opt->count() == 0 && group_opt->count() == 0) {
        err << "subset: one of --keep or --group is required\n";
        return kExitUsage;
      }
      const MeshDocument doc = load(g, in_path);
      std::optional<SubsetSelector> selector;
      if (keep_opt->count() > 0) {
        selector = SubsetSelector::from_positions(parse_ranges(keep), doc.mesh.num_elements());
      } else {
        std::vector<std::uint8_t> mask(doc.mesh.num_elements(), 0);
        bool found = false;
        for (const auto& grp : doc.groups) {
          if (grp.name != group) continue;
          found = true;
          std::fill_n(mask.begin() + static_cast<std::ptrdiff_t>(grp.first), grp.count, 1);
        }
        if (!found) {
          err << "subset: no group named '" << group << "' in " << in_path << '\n';
          return kExitFailure;
        }
        selector = SubsetSelector::from_mask(std::move(mask));
      }
      const Mesh result = subset(doc.mesh, *selector);
      save(g, result, out_path);
      summary(g, out, "subset", doc.mesh, result);
    } else if (*gen_cmd) {
      const Mesh grid = grid_quads(gen_n);
      save(g, grid, out_path);
      if (!g.quiet) {
        out << "gen: " << grid.num_elements() << " quads, " << grid.num_vertices()
            << " vertices\n";
      }
    } else if (*bench_cmd) {
      const auto records = run_bench(sizes, reps);
      if (!g.quiet) print_bench_table(out, records);
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw Error(ErrorCode::kIo, "cannot open '" + csv_path + "' for writing");
        write_bench_csv(csv, records);
      }
    } else if (*validate_cmd) {
      const Mesh mesh = load(g, in_path).mesh;
      const auto issues = validate(mesh);
      if (issues.empty()) {
        if (!g.quiet) out << in_path << ": ok\n";
        return kExitOk;
      }
      constexpr std::size_t kShown = 20;
      for (std::size_t i = 0; i < std::min(kShown, issues.size()); ++i) {
        err << "element " << issues[i].element << " slot " << issues[i].slot
            << ": index " << issues[i].index << " out of range\n";
      }
      err << in_path << ": " << issues.size() << " invalid indices\n";
      return kExitFailure;
    } else if (*stats_cmd) {
      const Mesh mesh = load(g, in_path).mesh;
      const MeshStats s = compute_stats(mesh);
      auto row = [&](const char* label, auto value) {
        out << std::left << std::setw(12) << label << std::right << std::setw(14) << value
            << '\n';
      };
      row("dimension", mesh.dim());
      row("arity", mesh.arity());
      row("vertices", s.vertices);
      row("elements", s.elements);
      row("distinct", s.distinct);
      row("duplicates", s.duplicates);
      row("unused", s.unused);
      row("invalid", s.bad_indices);
      return s.bad_indices == 0 ? kExitOk : kExitFailure;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace remeshx::cli
