#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qutrit/channels.hpp"
#include "qutrit/checks.hpp"
#include "qutrit/io.hpp"
#include "qutrit/meshgen.hpp"
#include "qutrit/model.hpp"
#include "qutrit/orbits.hpp"
#include "qutrit/sampling.hpp"

namespace qutrit::cli {

namespace {

// Raised for bad files and bad option values after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
  if (!f) throw UsageError("write to '" + path + "' failed");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

ModelVariant parse_model(const std::string& s) { return s == "q2" ? ModelVariant::Q2 : ModelVariant::Q1; }

std::string num(double x) { return format_number(x); }

LoadedStates load_states(const std::string& path) {
  return validate_document(parse_state_document(read_file(path)));
}

// Reports failures; true when there were any.
bool report_failures(const LoadedStates& loaded, std::ostream& err) {
  for (const auto& f : loaded.failures) err << "invalid state '" << f.label << "': " << f.reason << '\n';
  return !loaded.failures.empty();
}

// ---- subcommands ---------------------------------------------------------

struct MapArgs {
  std::string model = "q1";
  std::string input;
  std::string output;
};

int cmd_map(const MapArgs& a, std::ostream& out, std::ostream& err) {
  const LoadedStates loaded = load_states(a.input);
  const ModelVariant variant = parse_model(a.model);
  std::string text = "label,z1,z2,w\n";
  for (const auto& [label, rho] : loaded.states) {
    const ModelPoint p = map_to(variant, rho);
    text += csv_field(label) + ',' + num(p.z1) + ',' + num(p.z2) + ',' + num(p.w) + '\n';
  }
  emit(a.output, text, out);
  return report_failures(loaded, err) ? kValidation : kOk;
}

struct MeshArgs {
  std::string model = "q1";
  std::string surface = "all";
  int resolution = 32;
  std::string format = "obj";
  std::string output;
};

bool surface_selected(const std::string& surface, SurfaceLabel label) {
  if (surface == "all") return true;
  switch (label) {
    case SurfaceLabel::SphereCap: return surface == "upper";
    case SurfaceLabel::Cut0:
    case SurfaceLabel::Cut1:
    case SurfaceLabel::Cut2: return surface == "cuts";
    case SurfaceLabel::LowerCone0:
    case SurfaceLabel::LowerCone1:
    case SurfaceLabel::LowerCone2:
    case SurfaceLabel::LowerSphere: return surface == "lower";
    case SurfaceLabel::BaseTriangle: return surface == "base";
    case SurfaceLabel::Orbit: return false;
  }
  return false;
}

int cmd_mesh(const MeshArgs& a, std::ostream& out, std::ostream&) {
  const ModelVariant variant = parse_model(a.model);
  if (variant == ModelVariant::Q1 && a.surface == "lower")
    throw UsageError("surface 'lower' exists only in q2");
  if (variant == ModelVariant::Q2 && a.surface == "base")
    throw UsageError("surface 'base' exists only in q1; q2 closes below with 'lower'");
  if (a.resolution < kMinResolution)
    throw UsageError("--resolution must be at least " + std::to_string(kMinResolution));
  std::vector<TriangleMesh> selected;
  for (auto& m : variant == ModelVariant::Q1 ? mesh_q1(a.resolution) : mesh_q2(a.resolution))
    if (surface_selected(a.surface, m.label)) selected.push_back(std::move(m));
  emit(a.output, export_meshes(selected, parse_export_format(a.format)), out);
  return kOk;
}

struct OrbitArgs {
  std::string eigs;
  int resolution = 32;
  std::string format = "obj";
  std::string output;
};

EigenvalueTriple parse_eigs(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("--eigs: '" + item + "' is not a number");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw UsageError("--eigs: '" + item + "' is not a number");
    v.push_back(x);
  }
  if (v.size() != 3) throw UsageError("--eigs needs exactly three comma-separated values");
  for (double x : v)
    if (!(x >= 0.0 && x <= 1.0)) throw UsageError("--eigs: eigenvalues must lie in [0, 1]");
  const double sum = v[0] + v[1] + v[2];
  if (std::abs(sum - 1.0) > 1e-9) throw UsageError("--eigs: eigenvalues sum to " + num(sum) + ", not 1");
  return {v[0] / sum, v[1] / sum, 1.0 - v[0] / sum - v[1] / sum};
}

int cmd_orbit(const OrbitArgs& a, std::ostream& out, std::ostream&) {
  const EigenvalueTriple lambda = parse_eigs(a.eigs);
  if (a.resolution < kMinResolution)
    throw UsageError("--resolution must be at least " + std::to_string(kMinResolution));
  emit(a.output, export_meshes({mesh_orbit(lambda, a.resolution)}, parse_export_format(a.format)), out);
  return kOk;
}

struct ChannelArgs {
  std::string type;
  std::string state;
  std::string preset;
  int steps = 11;
  std::string model = "q1";
  std::string output;
};

int cmd_channel(const ChannelArgs& a, std::ostream& out, std::ostream& err) {
  const ChannelFamily family = parse_channel_family(a.type);
  if (a.steps < 2) throw UsageError("--steps must be at least 2");
  LoadedStates loaded;
  if (!a.preset.empty()) {
    const auto rho = preset_state(a.preset);
    if (!rho) throw UsageError("unknown preset '" + a.preset + "'");
    loaded.states.emplace_back(a.preset, *rho);
  } else {
    loaded = load_states(a.state);
  }
  const ModelVariant variant = parse_model(a.model);
  std::string text = "label,gamma,z1,z2,w\n";
  for (const auto& [label, rho] : loaded.states) {
    const auto points = trajectory(family, rho, a.steps, variant);
    for (int k = 0; k < a.steps; ++k) {
      const double gamma = static_cast<double>(k) / (a.steps - 1);
      const ModelPoint& p = points[static_cast<std::size_t>(k)];
      text += csv_field(label) + ',' + num(gamma) + ',' + num(p.z1) + ',' + num(p.z2) + ',' + num(p.w) + '\n';
    }
  }
  emit(a.output, text, out);
  return report_failures(loaded, err) ? kValidation : kOk;
}

struct SampleArgs {
  std::string measure = "haar-pure";
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  std::string model = "q1";
  unsigned threads = 1;
  std::string output;
};

int cmd_sample(const SampleArgs& a, std::ostream& out, std::ostream&) {
  const SamplerConfig cfg{a.seed, parse_measure(a.measure)};
  const ModelVariant variant = parse_model(a.model);
  std::string text = "z1,z2,w\n";
  for (const auto& rho : sample_states(cfg, a.count, a.threads)) {
    const ModelPoint p = map_to(variant, rho);
    text += num(p.z1) + ',' + num(p.z2) + ',' + num(p.w) + '\n';
  }
  emit(a.output, text, out);
  return kOk;
}

struct DualArgs {
  std::string input;
  std::string output;
};

int cmd_dual(const DualArgs& a, std::ostream& out, std::ostream& err) {
  const LoadedStates loaded = load_states(a.input);
  std::string text = "label,x1,x2,x3,y1,y2,y3,z1,z2,bloch_norm,pairing,w_q2\n";
  for (const auto& [label, rho] : loaded.states) {
    const DensityMatrix dual = state_inversion(rho);
    const BlochVector8 b = to_bloch(dual);
    text += csv_field(label);
    for (double x : b.as_array()) text += ',' + num(x);
    text += ',' + num(b.norm()) + ',' + num(dual_pairing(to_bloch(rho), b)) + ',' + num(map_q2(dual).w) + '\n';
  }
  emit(a.output, text, out);
  return report_failures(loaded, err) ? kValidation : kOk;
}

struct CheckArgs {
  std::string suite = "all";
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance_scale = 1.0;
};

constexpr std::size_t kDefaultCheckSamples = 1000;

std::size_t default_check_samples() {
  const char* env = std::getenv("QUTRIT_CHECK_SAMPLES");
  if (env == nullptr || *env == '\0') return kDefaultCheckSamples;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(env, &end, 10);
  if (*end != '\0' || n == 0) throw UsageError(std::string("QUTRIT_CHECK_SAMPLES='") + env + "' is not a positive integer");
  return static_cast<std::size_t>(n);
}

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream&) {
  CheckOptions opts;
  opts.samples = a.samples > 0 ? a.samples : default_check_samples();
  opts.seed = a.seed;
  opts.tolerance_scale = a.tolerance_scale;
  const auto results = run_checks(parse_check_suite(a.suite), opts);
  print_results(out, results);
  return all_passed(results) ? kOk : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Qutrit states in the three-dimensional Bloch-body models Q1 and Q2", "qutrit"};
  app.require_subcommand(1);
  const auto models = CLI::IsMember({"q1", "q2"});

  MapArgs map;
  auto* map_cmd = app.add_subcommand("map", "Map states from a JSON document to model coordinates (CSV)");
  map_cmd->add_option("--model", map.model, "q1 or q2")->check(models)->capture_default_str();
  map_cmd->add_option("--input", map.input, "JSON state document")->required();
  map_cmd->add_option("--output", map.output, "CSV file (default: stdout)");

  MeshArgs mesh;
  auto* mesh_cmd = app.add_subcommand("mesh", "Triangle mesh of a model's boundary");
  mesh_cmd->add_option("--model", mesh.model, "q1 or q2")->check(models)->capture_default_str();
  mesh_cmd->add_option("--surface", mesh.surface, "all, upper, cuts, lower (q2) or base (q1)")
      ->check(CLI::IsMember({"all", "upper", "cuts", "lower", "base"}))
      ->capture_default_str();
  mesh_cmd->add_option("--resolution", mesh.resolution, "grid subdivisions per edge")->capture_default_str();
  mesh_cmd->add_option("--format", mesh.format, "obj, ply or csv")
      ->check(CLI::IsMember({"obj", "ply", "csv"}))
      ->capture_default_str();
  mesh_cmd->add_option("--output", mesh.output, "output file (default: stdout)");

  OrbitArgs orbit;
  auto* orbit_cmd = app.add_subcommand("orbit", "Unitary-orbit surface of a spectrum in Q1");
  orbit_cmd->add_option("--eigs", orbit.eigs, "eigenvalues a,b,c summing to 1")->required();
  orbit_cmd->add_option("--resolution", orbit.resolution, "grid subdivisions per edge")->capture_default_str();
  orbit_cmd->add_option("--format", orbit.format, "obj, ply or csv")
      ->check(CLI::IsMember({"obj", "ply", "csv"}))
      ->capture_default_str();
  orbit_cmd->add_option("--output", orbit.output, "output file (default: stdout)");

  ChannelArgs channel;
  auto* channel_cmd = app.add_subcommand("channel", "Model trajectory of a state under a channel family");
  channel_cmd->add_option("--type", channel.type, "depolarizing, phase or amplitude")
      ->required()
      ->check(CLI::IsMember({"depolarizing", "phase", "amplitude"}));
  auto* state_opt = channel_cmd->add_option("--state", channel.state, "JSON state document");
  auto* preset_opt = channel_cmd->add_option("--preset", channel.preset, "named state")
                         ->check(CLI::IsMember(preset_names()));
  state_opt->excludes(preset_opt);
  channel_cmd->add_option("--steps", channel.steps, "gamma grid points on [0, 1]")->capture_default_str();
  channel_cmd->add_option("--model", channel.model, "q1 or q2")->check(models)->capture_default_str();
  channel_cmd->add_option("--output", channel.output, "CSV file (default: stdout)");

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Random states mapped into a model (CSV)");
  sample_cmd->add_option("--measure", sample.measure, "haar-pure, hs or rank2")
      ->check(CLI::IsMember({"haar-pure", "hs", "rank2"}))
      ->capture_default_str();
  sample_cmd->add_option("--count", sample.count, "number of states")->capture_default_str();
  sample_cmd->add_option("--seed", sample.seed, "generator seed")->capture_default_str();
  sample_cmd->add_option("--model", sample.model, "q1 or q2")->check(models)->capture_default_str();
  sample_cmd->add_option("--threads", sample.threads, "worker threads (output does not depend on it)")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  sample_cmd->add_option("--output", sample.output, "CSV file (default: stdout)");

  DualArgs dual;
  auto* dual_cmd = app.add_subcommand("dual", "Universal state inversion of each state (CSV)");
  dual_cmd->add_option("--input", dual.input, "JSON state document")->required();
  dual_cmd->add_option("--output", dual.output, "CSV file (default: stdout)");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run the invariant suites");
  check_cmd->add_option("--suite", check.suite, "all, model, duality, channels or orbits")
      ->check(CLI::IsMember({"all", "model", "duality", "channels", "orbits"}))
      ->capture_default_str();
  check_cmd->add_option("--samples", check.samples, "samples per check (default 1000 or $QUTRIT_CHECK_SAMPLES)")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--seed", check.seed, "generator seed")->capture_default_str();
  check_cmd->add_option("--tolerance-scale", check.tolerance_scale)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kUsage;
  }

  try {
    if (*map_cmd) return cmd_map(map, out, err);
    if (*mesh_cmd) return cmd_mesh(mesh, out, err);
    if (*orbit_cmd) return cmd_orbit(orbit, out, err);
    if (*channel_cmd) {
      if (channel.state.empty() && channel.preset.empty()) throw UsageError("channel needs --state or --preset");
      return cmd_channel(channel, out, err);
    }
    if (*sample_cmd) return cmd_sample(sample, out, err);
    if (*dual_cmd) return cmd_dual(dual, out, err);
    if (*check_cmd) return cmd_check(check, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace qutrit::cli
