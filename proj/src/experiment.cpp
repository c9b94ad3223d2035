// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "avqe/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "avqe/fermion.hpp"
#include "avqe/landscape.hpp"
#include "avqe/oracle.hpp"
#include "json.hpp"

#ifndef AVQE_DEFAULT_FIXTURE_DIR
#define AVQE_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace avqe {

namespace fs = std::filesystem;

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double to_double(std::string_view s, std::string_view key) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ConfigError(fmt::format("{}: expected a number, got '{}'", key, s));
  return v;
}

std::uint64_t to_u64(std::string_view s, std::string_view key) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ConfigError(fmt::format("{}: expected a non-negative integer, got '{}'", key, s));
  return v;
}

bool to_bool(std::string_view s, std::string_view key) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ConfigError(fmt::format("{}: expected true/false, got '{}'", key, s));
}

// One factor of an angle product: a number or "pi".
double angle_factor(std::string_view s) {
  s = trim(s);
  if (s.starts_with('-')) return -angle_factor(s.substr(1));
  if (s == "pi") return std::numbers::pi;
  return to_double(s, "angle");
}

template <class T>
std::string join(const std::vector<T>& v, auto&& fmt_one) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += fmt_one(v[i]);
  }
  return out;
}

// Writes the file next to its final path first so readers never see a torn file.
void write_file(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error(fmt::format("cannot write {}", tmp.string()));
    out << content;
    if (!out) throw std::runtime_error(fmt::format("write failed for {}", tmp.string()));
  }
  fs::rename(tmp, path);
}

std::string landscape_csv(const std::vector<RestartRecord>& records) {
  std::string out = "ansatz_length,init_kind,seed,energy_opt,fci_error,converged\n";
  for (const auto& r : records)
    out += fmt::format("{},{},{},{},{},{}\n", r.ansatz_length, to_string(r.init_kind), r.seed,
                       format_double(r.energy_opt), format_double(r.fci_error), r.converged ? 1 : 0);
  return out;
}

std::string trace_csv(const AdaptTrace& trace) {
  std::ostringstream os;
  write_adapt_trace_csv(os, trace);
  return os.str();
}

std::vector<std::size_t> resolve_lengths(const ExperimentConfig& cfg, std::size_t available) {
  std::vector<std::size_t> lengths;
  if (cfg.lengths.empty()) {
    for (std::size_t L = 1; L <= available; ++L) lengths.push_back(L);
    return lengths;
  }
  for (std::size_t L : cfg.lengths)
    if (L >= 1 && L <= available) lengths.push_back(L);
  return lengths;
}

AdaptTrace run_trace(const ExperimentConfig& cfg, const Problem& p, const fs::path& out_dir, std::ostream& log,
                     std::size_t repetition) {
  AdaptConfig ac;
  ac.eps = cfg.eps;
  ac.max_ops = cfg.max_ops;
  ac.criterion = cfg.criterion;
  ac.repetition = repetition;
  ac.recycle = cfg.recycle;
  ac.optimizer.gtol = cfg.gtol;
  ac.reference_energy = p.fci_energy;
  const fs::path trace_path = out_dir / "adapt_trace.csv";
  write_file(trace_path, trace_csv(AdaptTrace{}));
  try {
    AdaptTrace trace = run_adapt(p.hamiltonian, p.pool, p.reference, ac, [&](const AdaptTrace& t) {
      write_file(trace_path, trace_csv(t));
      const auto& it = t.iterations.back();
      fmt::print(log, "iter {:3d}  op {:4d} ({:>14})  |g| {:.3e}  E {:.12f}  err {:.3e}\n", t.iterations.size(),
                 it.chosen_op, it.op_label, std::abs(it.max_pool_gradient), it.energy, it.fci_error);
    });
    fmt::print(log, "adapt finished after {} operators: {}\n", trace.iterations.size(), trace.stop_reason);
    return trace;
  } catch (const AdaptAborted& e) {
    write_file(trace_path, trace_csv(e.trace()));
    throw;
  }
}

// Gradient/energy series per iteration next to the nearest sector eigenvalue.
std::string overlay_csv(const AdaptTrace& trace, const FciSpectrum& spec) {
  const auto troughs = detect_gradient_trough(trace);
  auto in_trough = [&](std::size_t k) {
    return std::any_of(troughs.begin(), troughs.end(), [k](auto s) { return k >= s.first && k <= s.second; });
  };
  std::string out = "iteration,max_pool_grad,energy,fci_error,in_trough,nearest_level,level_energy,level_below_hf\n";
  for (std::size_t k = 0; k < trace.iterations.size(); ++k) {
    const auto& it = trace.iterations[k];
    std::size_t best = 0;
    for (std::size_t i = 1; i < spec.eigenvalues.size(); ++i)
      if (std::abs(spec.eigenvalues[i] - it.energy) < std::abs(spec.eigenvalues[best] - it.energy)) best = i;
    const double level = spec.eigenvalues.empty() ? std::nan("") : spec.eigenvalues[best];
    out += fmt::format("{},{},{},{},{},{},{},{}\n", k + 1, format_double(it.max_pool_gradient),
                       format_double(it.energy), format_double(it.fci_error), in_trough(k) ? 1 : 0, best,
                       format_double(level), level < spec.hf_energy ? 1 : 0);
  }
  return out;
}

std::string spectrum_csv(const FciSpectrum& spec, std::size_t limit) {
  std::string out = "index,energy,below_hf\n";
  for (std::size_t i = 0; i < spec.eigenvalues.size() && i < limit; ++i)
    out += fmt::format("{},{},{}\n", i, format_double(spec.eigenvalues[i]), spec.eigenvalues[i] < spec.hf_energy ? 1 : 0);
  return out;
}

void run_spectrum(const ExperimentConfig& cfg, const Problem& p, const fs::path& out_dir, std::ostream& log) {
  const FciSpectrum spec = fci_spectrum(p.hamiltonian.op(), p.molecule.n_electrons, p.molecule.ms2,
                                        cfg.spectrum_states);
  write_file(out_dir / "spectrum.csv", spectrum_csv(spec, spec.eigenvalues.size()));
  fmt::print(log, "ground {:.12f}  HF {:.12f}  levels written {}\n", spec.ground_energy, spec.hf_energy,
             spec.eigenvalues.size());
}

void run_adapt_mode(const ExperimentConfig& cfg, const Problem& p, const fs::path& out_dir, std::ostream& log) {
  const AdaptTrace trace = run_trace(cfg, p, out_dir, log, cfg.n_rep());
  const FciSpectrum spec = fci_spectrum(p.hamiltonian.op(), p.molecule.n_electrons, p.molecule.ms2, 0);
  std::size_t below = 1 + spec.excited_below_hf.size();
  write_file(out_dir / "spectrum.csv", spectrum_csv(spec, below));
  write_file(out_dir / "spectrum_overlay.csv", overlay_csv(trace, spec));
  const auto troughs = detect_gradient_trough(trace);
  fmt::print(log, "gradient troughs: {}  excited levels below HF: {}\n", troughs.size(), spec.excited_below_hf.size());
}

void run_landscape_mode(const ExperimentConfig& cfg, const Problem& p, const fs::path& out_dir, std::ostream& log) {
  const AdaptTrace trace = run_trace(cfg, p, out_dir, log, cfg.n_rep());
  ScanOptions so;
  so.n_random = cfg.n_random;
  so.master_seed = cfg.seed;
  so.threads = cfg.threads;
  so.optimizer.gtol = cfg.gtol;
  so.reference_energy = p.fci_energy;
  const auto lengths = resolve_lengths(cfg, trace.iterations.size());
  const auto records = scan_ansatz(p.hamiltonian, p.pool, p.reference, trace, lengths, so);
  write_file(out_dir / "landscape.csv", landscape_csv(records));
  fmt::print(log, "landscape: {} records over {} lengths\n", records.size(), lengths.size());
}

void run_variance_mode(const ExperimentConfig& cfg, const Problem& p, const fs::path& out_dir, std::ostream& log) {
  const AdaptTrace trace = run_trace(cfg, p, out_dir, log, 1);
  if (trace.iterations.empty()) throw std::runtime_error("variance: ADAPT produced an empty ansatz");
  const std::size_t L =
      cfg.variance_ops ? std::min(cfg.variance_ops, trace.iterations.size()) : trace.iterations.size();
  Ansatz a;
  a.op_indices.assign(trace.ansatz.op_indices.begin(), trace.ansatz.op_indices.begin() + L);
  a.theta = trace.iterations[L - 1].theta;
  std::vector<double> widths = cfg.widths;
  if (widths.empty())
    widths = {1e-3, std::numbers::pi / 8, std::numbers::pi / 4, std::numbers::pi / 2, std::numbers::pi,
              2 * std::numbers::pi};
  const VarianceScan vs =
      variance_scan(p.hamiltonian, p.pool, p.reference, a, widths, cfg.samples_per_width, cfg.seed, cfg.threads);
  std::string out = "width,variance,n_samples\n";
  for (std::size_t i = 0; i < vs.widths.size(); ++i)
    out += fmt::format("{},{},{}\n", format_double(vs.widths[i]), format_double(vs.variances[i]), vs.samples_per_width);
  write_file(out_dir / "variance.csv", out);
  fmt::print(log, "variance scan over {} parameters, {} widths\n", a.n_params(), widths.size());
}

void run_reorder_mode(const ExperimentConfig& cfg, const Problem& p, const fs::path& out_dir, std::ostream& log) {
  const AdaptTrace trace = run_trace(cfg, p, out_dir, log, 1);
  ScanOptions so;
  so.n_random = cfg.n_random;
  so.master_seed = cfg.seed;
  so.threads = cfg.threads;
  so.optimizer.gtol = cfg.gtol;
  so.reference_energy = p.fci_energy;
  for (std::uint64_t s : cfg.seeds) {
    const Ansatz shuffled = shuffle_ansatz(trace.ansatz, s);
    ScanSpec spec;
    spec.op_indices = shuffled.op_indices;
    spec.lengths = resolve_lengths(cfg, shuffled.op_indices.size());
    const auto records = scan_ansatz(p.hamiltonian, p.pool, p.reference, spec, so);
    std::string order = "position,pool_index,label\n";
    for (std::size_t i = 0; i < shuffled.op_indices.size(); ++i)
      order += fmt::format("{},{},{}\n", i, shuffled.op_indices[i], p.pool[shuffled.op_indices[i]].label);
    write_file(out_dir / fmt::format("reorder_{}_order.csv", s), order);
    write_file(out_dir / fmt::format("reorder_{}.csv", s), landscape_csv(records));
    fmt::print(log, "reorder seed {}: {} records\n", s, records.size());
  }
}

}  // namespace

Mode parse_mode(std::string_view s) {
  if (s == "adapt") return Mode::adapt;
  if (s == "adaptn") return Mode::adaptn;
  if (s == "landscape") return Mode::landscape;
  if (s == "variance") return Mode::variance;
  if (s == "reorder") return Mode::reorder;
  if (s == "fci") return Mode::fci;
  throw ConfigError(fmt::format("invalid mode '{}'", s));
}

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::adapt: return "adapt";
    case Mode::adaptn: return "adaptn";
    case Mode::landscape: return "landscape";
    case Mode::variance: return "variance";
    case Mode::reorder: return "reorder";
    case Mode::fci: return "fci";
  }
  return "unknown";
}

std::vector<double> parse_angle_list(std::string_view s) {
  std::vector<double> out;
  for (std::string_view item : split(s, ',')) {
    if (item.empty()) throw ConfigError("empty entry in angle list");
    // a[*b...][/c]
    const auto slash = item.find('/');
    double v = 1.0;
    for (std::string_view f : split(item.substr(0, slash), '*')) v *= angle_factor(f);
    if (slash != std::string_view::npos) {
      const double d = angle_factor(item.substr(slash + 1));
      if (d == 0.0) throw ConfigError("division by zero in angle list");
      v /= d;
    }
    out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> parse_index_list(std::string_view s) {
  std::vector<std::size_t> out;
  for (std::string_view item : split(s, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      out.push_back(to_u64(item, "lengths"));
      continue;
    }
    const auto lo = to_u64(trim(item.substr(0, dash)), "lengths");
    const auto hi = to_u64(trim(item.substr(dash + 1)), "lengths");
    if (hi < lo) throw ConfigError(fmt::format("lengths: empty range '{}'", item));
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

ExperimentConfig ExperimentConfig::parse(std::string_view text) {
  ExperimentConfig c;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(fmt::format("config line {}: expected key = value", line_no));
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view val = trim(line.substr(eq + 1));
    if (key == "system") c.system = val;
    else if (key == "mode") c.mode = parse_mode(val);
    else if (key == "eps") c.eps = to_double(val, key);
    else if (key == "max_ops") c.max_ops = to_u64(val, key);
    else if (key == "criterion") {
      if (val == "max") c.criterion = Criterion::max;
      else if (val == "l2") c.criterion = Criterion::l2;
      else throw ConfigError(fmt::format("criterion: expected max or l2, got '{}'", val));
    } else if (key == "recycle") c.recycle = to_bool(val, key);
    else if (key == "N") c.repetition = to_u64(val, key);
    else if (key == "n_random") c.n_random = to_u64(val, key);
    else if (key == "lengths") c.lengths = val.empty() ? std::vector<std::size_t>{} : parse_index_list(val);
    else if (key == "widths") c.widths = parse_angle_list(val);
    else if (key == "samples_per_width") c.samples_per_width = to_u64(val, key);
    else if (key == "variance_ops") c.variance_ops = to_u64(val, key);
    else if (key == "seeds") {
      c.seeds.clear();
      for (std::string_view s : split(val, ',')) c.seeds.push_back(to_u64(s, key));
    } else if (key == "seed") c.seed = to_u64(val, key);
    else if (key == "spectrum_states") c.spectrum_states = to_u64(val, key);
    else if (key == "gtol") c.gtol = to_double(val, key);
    else if (key == "threads") c.threads = to_u64(val, key);
    else if (key == "output") c.output = val;
    else if (key == "fixtures_dir") c.fixtures_dir = val;
    else throw ConfigError(fmt::format("config line {}: unknown key '{}'", line_no, key));
  }
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open config '{}'", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void ExperimentConfig::validate() const {
  if (system.empty()) throw ConfigError("config: 'system' is required");
  if (!(eps > 0.0)) throw ConfigError("config: eps must be positive");
  if (!(gtol > 0.0)) throw ConfigError("config: gtol must be positive");
  if (repetition && *repetition < 1) throw ConfigError("config: N must be >= 1");
  if (mode == Mode::adaptn && !repetition) throw ConfigError("config: mode adaptn requires N");
  if (mode == Mode::variance) {
    if (samples_per_width == 0) throw ConfigError("config: samples_per_width must be positive");
    for (double w : widths)
      if (!(w >= 0.0)) throw ConfigError("config: widths must be non-negative");
  }
  if (mode == Mode::reorder && seeds.empty()) throw ConfigError("config: mode reorder requires seeds");
  if ((mode == Mode::variance || mode == Mode::reorder) && n_rep() != 1)
    throw ConfigError(fmt::format("config: mode {} supports only N = 1", to_string(mode)));
  if (!fs::exists(fixture_path())) throw ConfigError(fmt::format("fixture not found: {}", fixture_path()));
}

std::string ExperimentConfig::to_text() const {
  std::string t;
  t += fmt::format("system = {}\n", system);
  t += fmt::format("mode = {}\n", to_string(mode));
  t += fmt::format("eps = {}\n", eps);
  t += fmt::format("max_ops = {}\n", max_ops);
  t += fmt::format("criterion = {}\n", criterion == Criterion::max ? "max" : "l2");
  t += fmt::format("recycle = {}\n", recycle ? "true" : "false");
  if (repetition) t += fmt::format("N = {}\n", *repetition);
  t += fmt::format("n_random = {}\n", n_random);
  t += fmt::format("lengths = {}\n", join(lengths, [](std::size_t v) { return std::to_string(v); }));
  if (!widths.empty()) t += fmt::format("widths = {}\n", join(widths, [](double v) { return fmt::format("{}", v); }));
  t += fmt::format("samples_per_width = {}\n", samples_per_width);
  t += fmt::format("variance_ops = {}\n", variance_ops);
  t += fmt::format("seeds = {}\n", join(seeds, [](std::uint64_t v) { return std::to_string(v); }));
  t += fmt::format("seed = {}\n", seed);
  t += fmt::format("spectrum_states = {}\n", spectrum_states);
  t += fmt::format("gtol = {}\n", gtol);
  t += fmt::format("threads = {}\n", threads);
  t += fmt::format("output = {}\n", output);
  if (!fixtures_dir.empty()) t += fmt::format("fixtures_dir = {}\n", fixtures_dir);
  return t;
}

std::string ExperimentConfig::fixture_path() const {
  const std::string dir = fixtures_dir.empty() ? default_fixture_dir() : fixtures_dir;
  return (fs::path(dir) / (system + ".fcidump")).string();
}

std::string default_fixture_dir() {
  if (const char* env = std::getenv("AVQE_FIXTURES")) return env;
  return AVQE_DEFAULT_FIXTURE_DIR;
}

std::string format_double(double v) { return fmt::format("{:.15g}", v); }

Problem load_problem(const std::string& fcidump_path, std::string name) {
  Problem p;
  p.name = name.empty() ? fs::path(fcidump_path).stem().string() : std::move(name);
  p.molecule = load_fcidump(fcidump_path);
  const std::size_t n_so = 2 * p.molecule.n_spatial;
  p.hamiltonian = Observable(hamiltonian_to_qubits(to_spin_orbitals(p.molecule)));
  p.pool = build_uccsd_pool(n_so, p.molecule.n_electrons, p.molecule.ms2);
  p.reference = hf_reference(n_so, p.molecule.n_electrons, p.molecule.ms2);
  p.hf_energy = energy(p.hamiltonian, p.reference);
  p.fci_energy = fci_spectrum(p.hamiltonian.op(), p.molecule.n_electrons, p.molecule.ms2, 1).ground_energy;
  return p;
}

void write_adapt_trace_csv(std::ostream& out, const AdaptTrace& trace) {
  out << "iteration,chosen_op,op_label,max_pool_grad,grad_l2,energy,fci_error\n";
  for (std::size_t k = 0; k < trace.iterations.size(); ++k) {
    const auto& it = trace.iterations[k];
    fmt::print(out, "{},{},\"{}\",{},{},{},{}\n", k + 1, it.chosen_op, it.op_label,
               format_double(it.max_pool_gradient), format_double(it.pool_gradient_l2), format_double(it.energy),
               format_double(it.fci_error));
  }
}

void run_experiment(const ExperimentConfig& cfg, std::ostream& log) {
  cfg.validate();
  const fs::path out_dir(cfg.output);
  fs::create_directories(out_dir);
  write_file(out_dir / "run.meta", cfg.to_text());

  const Problem p = load_problem(cfg.fixture_path(), cfg.system);
  fmt::print(log, "{}: {} qubits, {} electrons, pool {} operators, HF {:.12f}, FCI {:.12f}\n", p.name,
             p.hamiltonian.n_qubits(), p.molecule.n_electrons, p.pool.size(), p.hf_energy, p.fci_energy);
  switch (cfg.mode) {
    case Mode::fci: run_spectrum(cfg, p, out_dir, log); break;
    case Mode::adapt: run_adapt_mode(cfg, p, out_dir, log); break;
    case Mode::adaptn:
    case Mode::landscape: run_landscape_mode(cfg, p, out_dir, log); break;
    case Mode::variance: run_variance_mode(cfg, p, out_dir, log); break;
    case Mode::reorder: run_reorder_mode(cfg, p, out_dir, log); break;
  }
}

bool FixtureReport::ok() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
}

FixtureReport verify_fixtures(const std::string& dir, double tol) {
  const fs::path root(dir);
  const fs::path manifest_path = root / "manifest.json";
  bool any_dump = false;
  if (fs::is_directory(root))
    for (const auto& e : fs::directory_iterator(root))
      if (e.path().extension() == ".fcidump") any_dump = true;
  if (!any_dump || !fs::exists(manifest_path)) throw std::runtime_error(fmt::format("no fixtures in '{}'", dir));

  nlohmann::json manifest;
  {
    std::ifstream in(manifest_path);
    try {
      manifest = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(fmt::format("malformed manifest {}: {}", manifest_path.string(), e.what()));
    }
  }
  if (!manifest.contains("systems") || manifest["systems"].empty())
    throw std::runtime_error(fmt::format("no fixtures listed in {}", manifest_path.string()));

  FixtureReport report;
  for (const auto& entry : manifest["systems"]) {
    FixtureCheck c;
    c.name = entry.value("name", std::string{});
    try {
      const MolecularHamiltonian m = load_fcidump((root / (c.name + ".fcidump")).string());
      std::vector<std::string> problems;
      if (m.n_spatial != entry.at("norb").get<std::size_t>()) problems.push_back("NORB differs from manifest");
      if (m.n_electrons != entry.at("nelec").get<std::size_t>()) problems.push_back("NELEC differs from manifest");
      const PauliOperator h = hamiltonian_to_qubits(to_spin_orbitals(m));
      c.e_hf = energy(h, hf_reference(2 * m.n_spatial, m.n_electrons, m.ms2));
      c.e_fci = fci_spectrum(h, m.n_electrons, m.ms2, 1).ground_energy;
      const double ref_hf = entry.at("e_hf").get<double>();
      const double ref_fci = entry.at("e_fci").get<double>();
      if (!(std::abs(c.e_hf - ref_hf) <= tol))
        problems.push_back(fmt::format("HF energy {:.12f} != manifest {:.12f}", c.e_hf, ref_hf));
      if (!(std::abs(c.e_fci - ref_fci) <= tol))
        problems.push_back(fmt::format("FCI energy {:.12f} != manifest {:.12f}", c.e_fci, ref_fci));
      c.ok = problems.empty();
      for (std::size_t i = 0; i < problems.size(); ++i) c.message += (i ? "; " : "") + problems[i];
    } catch (const std::exception& e) {
      c.ok = false;
      c.message = e.what();
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace avqe
