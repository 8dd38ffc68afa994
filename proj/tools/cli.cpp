// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "tphw/catalog.hpp"
#include "tphw/error.hpp"
#include "tphw/io.hpp"
#include "tphw/mesh.hpp"
#include "tphw/optimize.hpp"
#include "tphw/sweep.hpp"
#include "tphw/validate.hpp"

namespace tphw::cli {
namespace {

// Symbols as printed in the weave table.
std::string_view packing_symbol(PackingLabel p) {
  switch (p) {
    case PackingLabel::PiPlusMinus: return "±Π";
    case PackingLabel::PiStar: return "Π*";
    case PackingLabel::Gamma: return "Γ";
    case PackingLabel::OmegaPlusMinus: return "±Ω";
    case PackingLabel::SigmaPlusMinus: return "±Σ";
    case PackingLabel::SigmaStar: return "Σ*";
    case PackingLabel::None: return "None";
  }
  return "?";
}

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string join(const std::vector<std::string>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(sep) : "") + v[i];
  return out;
}

std::string join(const std::vector<int>& v, std::string_view sep) {
  std::vector<std::string> s;
  for (int x : v) s.push_back(std::to_string(x));
  return join(s, sep);
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnknownWeave:
    case ErrorKind::UnconstructedWeave:
    case ErrorKind::InvalidArgument:
      return kUsage;
    case ErrorKind::ParseError:
    case ErrorKind::IoError:
    case ErrorKind::InvariantViolation:
      return kIoOrParse;
    default:
      return kNumerical;
  }
}

struct Source {
  std::string name;
  std::string spec;
};

void add_source(CLI::App* cmd, Source& s) {
  cmd->add_option("name", s.name, "Catalog name or ASCII alias");
  cmd->add_option("--spec", s.spec, "Weave file (.weave.json)");
}

WeaveSpec resolve(const Source& s) {
  if (s.name.empty() == s.spec.empty())
    throw Error(ErrorKind::InvalidArgument, "give exactly one of <name> or --spec FILE");
  return s.spec.empty() ? build_weave(s.name) : load_weave(s.spec);
}

void list_entries(const std::string& tier, std::ostream& out) {
  char buf[64];
  out << "TIER  STATUS         HELICES  NAME  (ALIAS)\n";
  for (const auto& e : catalog()) {
    if (!tier.empty() && to_string(e.expected.tier) != tier) continue;
    const bool built = e.recipe.kind != RecipeKind::None;
    std::snprintf(buf, sizeof buf, "%-5s %-14s %-8d ", std::string(to_string(e.expected.tier)).c_str(),
                  built ? "constructed" : "unconstructed", e.expected.helices_per_unit);
    out << buf << e.name << "  (" << e.alias << ")\n";
  }
}

void info_entry(const std::string& name, std::ostream& out) {
  const CatalogEntry* e = find_entry(name);
  if (!e) throw Error(ErrorKind::UnknownWeave, "no catalog entry named '" + name + "'");
  const auto& x = e->expected;
  const auto& r = e->recipe;
  out << "name                  " << e->name << '\n'
      << "alias                 " << e->alias << '\n'
      << "packing               " << packing_symbol(x.packing) << '\n'
      << "helices per crossing  " << join(x.helices_per_crossing, ", ") << '\n'
      << "helices per unit      " << x.helices_per_unit << '\n'
      << "chirality             " << to_string(x.chirality) << '\n'
      << "crossing types        " << join(x.crossing_types, ", ") << '\n'
      << "tier                  " << to_string(x.tier) << '\n';
  if (r.kind == RecipeKind::None) {
    out << "status                unconstructed\n";
    return;
  }
  out << "status                constructed\n"
      << "recipe                " << to_string(r.kind) << '\n'
      << "lattice               " << (recipe_lattice(*e).body_centered() ? "body-centred" : "primitive")
      << " cubic, L = 1\n"
      << "winding radius        " << short_number(r.radius) << '\n'
      << "phase                 " << short_number(r.phase) << '\n'
      << "tube radius           " << short_number(r.tube_radius) << '\n'
      << "source                " << r.method << " (catalog v" << kCatalogVersion << ")\n";
}

struct GenerateArgs {
  Source src;
  int cells = 2;
  std::optional<double> tube_radius;
  int around = 24;
  int per_turn = 64;
  bool caps = false;
  std::string out;
  std::string format;
};

void generate(const GenerateArgs& a, std::ostream& out) {
  WeaveSpec w = resolve(a.src);
  if (a.tube_radius) w = with_tube_radius(w, *a.tube_radius);
  std::string format = a.format;
  if (format.empty()) format = std::filesystem::path(a.out).extension() == ".stl" ? "stl" : "obj";
  if (format == "centerlines") {
    write_centerlines(w, a.cells, a.per_turn, a.out);
    out << "wrote " << block_pieces(w, a.cells).size() << " centerlines to " << a.out << '\n';
    return;
  }
  const auto meshes = weave_meshes(w, a.cells, {a.around, a.per_turn, a.caps});
  std::size_t nv = 0, nt = 0;
  for (const auto& m : meshes) {
    nv += m.vertices.size();
    nt += m.triangles.size();
  }
  if (format == "stl") write_stl(meshes, a.out);
  else write_obj(meshes, a.out);
  out << "wrote " << meshes.size() << " tubes, " << nv << " vertices, " << nt << " triangles to "
      << a.out << '\n';
}

struct ValidateArgs {
  Source src;
  std::string json;
  std::optional<double> gap_tol;
  std::optional<int> grid;
};

int validate(const ValidateArgs& a, std::ostream& out) {
  const WeaveSpec w = resolve(a.src);
  ValidationOptions opt;
  if (a.gap_tol) opt.analysis.gap_tol = *a.gap_tol;
  if (a.grid) opt.analysis.grid_n = *a.grid;
  const ValidationReport r = validate_weave(w, opt);
  out << format_report(r);
  if (!a.json.empty()) write_text_file(a.json, dump_json(report_to_json(r, opt)));
  return r.pass ? kSuccess : kValidationFail;
}

struct SweepArgs {
  std::string name;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
  std::string json;
};

Json histogram_json(const SignatureHistogram& h) {
  Json out = Json::array();
  for (const auto& [cls, count] : h)
    out.push_back({{"participants", cls.participants}, {"pair_contacts", cls.pair_contacts},
                   {"count", count}});
  return out;
}

void sweep(const SweepArgs& a, std::ostream& out) {
  const SweepConfig cfg;
  const SweepReport r = radius_sweep(a.name, a.from, a.to, a.steps, cfg);
  char buf[96];
  out << "radius      min_dist    min_gap     classes\n";
  for (const auto& s : r.samples) {
    std::snprintf(buf, sizeof buf, "%-11.6f %-11.6f %-11.6f ", s.radius, s.min_distance, s.min_gap);
    out << buf;
    bool first = true;
    for (const auto& [cls, count] : s.histogram) {
      out << (first ? "" : " ") << to_string(cls) << 'x' << count;
      first = false;
    }
    if (s.percolating) out << " (percolating)";
    out << '\n';
  }
  out << "transitions:";
  for (double t : r.transitions) out << ' ' << format_number(t);
  out << '\n';
  if (a.json.empty()) return;
  Json j;
  j["name"] = r.name;
  j["seed"] = cfg.optimize.seed;
  j["from"] = a.from;
  j["to"] = a.to;
  j["steps"] = a.steps;
  j["reoptimize_phases"] = cfg.reoptimize_phases;
  j["gap_margin"] = cfg.gap_margin;
  Json samples = Json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"radius", s.radius},
                       {"min_distance", s.min_distance},
                       {"min_gap", s.min_gap},
                       {"percolating", s.percolating},
                       {"histogram", histogram_json(s.histogram)}});
  j["samples"] = std::move(samples);
  j["transitions"] = r.transitions;
  write_text_file(a.json, dump_json(j));
}

struct OptimizeArgs {
  Source src;
  bool phases = false;
  bool anchors = false;
  bool max_radius = false;
  std::uint64_t seed = 0;
  std::string out;
};

void optimize(const OptimizeArgs& a, std::ostream& out) {
  if (a.phases + a.anchors + a.max_radius != 1)
    throw Error(ErrorKind::InvalidArgument, "give exactly one of --phases, --anchors, --max-radius");
  const WeaveSpec w = resolve(a.src);
  require_constructed(w);
  OptimizeConfig cfg;
  cfg.seed = a.seed;
  const double before = clearance_objective(w, cfg.grid_n);
  WeaveSpec result;
  std::string method;
  double objective = before;
  if (a.phases) {
    result = optimize_phases(w, cfg);
    method = "coordinate search over phases";
    objective = clearance_objective(result, cfg.grid_n);
  } else if (a.anchors) {
    result = optimize_anchors(w, cfg, cyclic_constraint(w));
    method = "coordinate search over anchors, cyclic constraint";
    objective = clearance_objective(result, cfg.grid_n);
  } else {
    // Tube radius from the centerline distance, leaving a 0.005 L gap.
    const double rho = 0.5 * (before - 0.005 * w.lattice.period());
    if (!(rho > 0)) throw Error(ErrorKind::DegenerateHelix, "centerlines too close for any tube");
    result = with_tube_radius(w, rho);
    method = "largest tube radius with 0.005 L gap";
  }
  result.provenance = Provenance{method, cfg.max_iterations, cfg.step_init, cfg.step_min,
                                 cfg.seed, cfg.tolerance, objective};
  save_weave(result, a.out);
  out << "objective (min centerline distance) " << format_number(before) << " -> "
      << format_number(objective) << '\n'
      << "seed " << cfg.seed << '\n'
      << "wrote " << a.out << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triply periodic helical weaves: catalog, validation, analysis and export", "tphw"};
  app.require_subcommand(1);

  std::string tier;
  auto* list = app.add_subcommand("list", "Catalog entries and construction status");
  list->add_option("--tier", tier, "Only this tier")->check(CLI::IsMember({"A", "B", "C"}));

  std::string info_name;
  auto* info = app.add_subcommand("info", "Metadata of one catalog entry");
  info->add_option("name", info_name)->required();

  GenerateArgs ga;
  auto* gen = app.add_subcommand("generate", "Export tube meshes or centerlines");
  add_source(gen, ga.src);
  gen->add_option("--cells", ga.cells, "Block edge in lattice periods")->check(CLI::PositiveNumber);
  gen->add_option("--tube-radius", ga.tube_radius, "Override every tube radius");
  gen->add_option("--around", ga.around, "Vertices per ring")->check(CLI::Range(3, 4096));
  gen->add_option("--per-turn", ga.per_turn, "Rings per turn")->check(CLI::Range(4, 65536));
  gen->add_flag("--caps", ga.caps, "Close the tube ends");
  gen->add_option("--out", ga.out, "Output path")->required();
  gen->add_option("--format", ga.format)->check(CLI::IsMember({"obj", "stl", "centerlines"}));

  ValidateArgs va;
  auto* val = app.add_subcommand("validate", "Check a weave against its catalog entry");
  add_source(val, va.src);
  val->add_option("--json", va.json, "Also write the report as JSON");
  val->add_option("--gap-tol", va.gap_tol, "Contact tolerance (fraction of L)")
      ->check(CLI::PositiveNumber);
  val->add_option("--grid", va.grid, "Samples per turn")->check(CLI::Range(16, 4096));

  SweepArgs sa;
  auto* sw = app.add_subcommand("sweep", "Crossing classes across winding radii");
  sw->add_option("name", sa.name)->required();
  sw->add_option("--from", sa.from)->required();
  sw->add_option("--to", sa.to)->required();
  sw->add_option("--steps", sa.steps)->required()->check(CLI::Range(2, 100000));
  sw->add_option("--json", sa.json);

  OptimizeArgs oa;
  auto* opt = app.add_subcommand("optimize", "Maximize clearance and write a weave file");
  add_source(opt, oa.src);
  opt->add_flag("--phases", oa.phases);
  opt->add_flag("--anchors", oa.anchors);
  opt->add_flag("--max-radius", oa.max_radius);
  opt->add_option("--seed", oa.seed);
  opt->add_option("--out", oa.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kSuccess : kUsage;
  }

  try {
    if (*list) list_entries(tier, out);
    else if (*info) info_entry(info_name, out);
    else if (*gen) generate(ga, out);
    else if (*val) return validate(va, out);
    else if (*sw) sweep(sa, out);
    else if (*opt) optimize(oa, out);
    return kSuccess;
  } catch (const Error& e) {
    err << "tphw: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "tphw: " << e.what() << '\n';
    return kNumerical;
  }
}

}  // namespace tphw::cli
