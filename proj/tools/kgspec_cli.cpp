// kgspec command-line front end. Talks to the library through the C API only.

#include "kgspec/kgspec.h"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

enum Exit : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_no_roots = 2,
  exit_table_mismatch = 3,
  exit_non_normalizable = 4,
  exit_oracle_disagreement = 5,
};

// Failure that maps to a specific exit code.
struct ExitError : std::runtime_error {
  ExitError(int c, const std::string& what) : std::runtime_error(what), code(c) {}
  int code;
};

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

void check(kg_status s, int code = exit_usage) {
  if (s != KG_OK) throw ExitError(code, std::string(kg_status_name(s)) + ": " + kg_last_error());
}

struct ModelDeleter {
  void operator()(kg_model* m) const { kg_model_free(m); }
};
struct StatesDeleter {
  void operator()(kg_states* s) const { kg_states_free(s); }
};
struct SampleDeleter {
  void operator()(kg_sample* s) const { kg_sample_free(s); }
};
struct ComparisonsDeleter {
  void operator()(kg_comparisons* c) const { kg_comparisons_free(c); }
};
using ModelPtr = std::unique_ptr<kg_model, ModelDeleter>;

// Output sink: a file when --output is given, stdout otherwise.
class Sink {
public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") {
      f_ = stdout;
    } else {
      f_ = std::fopen(path.c_str(), "w");
      if (!f_) throw ExitError(exit_usage, "cannot open " + path);
      owned_ = true;
    }
  }
  ~Sink() {
    if (owned_) std::fclose(f_);
  }
  Sink(const Sink&) = delete;
  Sink& operator=(const Sink&) = delete;
  FILE* get() const { return f_; }
  void line(const std::string& s) const { std::fprintf(f_, "%s\n", s.c_str()); }

private:
  FILE* f_ = nullptr;
  bool owned_ = false;
};

struct ModelFlags {
  std::string model;
  double v0 = 0, v1 = 0, v2 = 0, v3 = 0, q = 1, alpha = 1, a = 0.5, b = 17;
  CLI::Option* opt_v0 = nullptr;
  CLI::Option* opt_v1 = nullptr;
  CLI::Option* opt_v2 = nullptr;
  CLI::Option* opt_v3 = nullptr;
  CLI::Option* opt_alpha = nullptr;
  CLI::Option* opt_a = nullptr;
  CLI::Option* opt_b = nullptr;
};

const std::vector<std::string> kModels = {"eckart-type",     "rosen-morse-type", "hulthen",
                                          "woods-saxon",     "standard-eckart",  "rosen-morse-well",
                                          "trig-rosen-morse"};

void add_model_flags(CLI::App* app, ModelFlags& f, bool model_required) {
  auto* m = app->add_option("--model", f.model, "potential model")->check(CLI::IsMember(kModels));
  if (model_required) m->required();
  f.opt_v0 = app->add_option("--v0", f.v0, "depth (hulthen, woods-saxon)");
  f.opt_v1 = app->add_option("--v1", f.v1, "first coupling");
  f.opt_v2 = app->add_option("--v2", f.v2, "second coupling");
  f.opt_v3 = app->add_option("--v3", f.v3, "third coupling (eckart-type, rosen-morse-type)");
  app->add_option("--q", f.q, "deformation, > 0")->capture_default_str();
  f.opt_alpha = app->add_option("--alpha", f.alpha, "screening parameter, > 0");
  f.opt_a = app->add_option("--a", f.a, "trigonometric model: V1 = a(a+1)")->capture_default_str();
  f.opt_b = app->add_option("--b", f.b, "trigonometric model: V2 = 2b")->capture_default_str();
}

void require(CLI::Option* o, const std::string& model) {
  if (o->count() == 0) {
    throw ExitError(exit_usage, "model " + model + " needs " + o->get_name());
  }
}

ModelPtr build_model(const ModelFlags& f, bool lenient) {
  kg_model* out = nullptr;
  const std::string& m = f.model;
  if (!lenient) require(f.opt_alpha, m);
  kg_status s = KG_OK;
  if (m == "eckart-type" || m == "rosen-morse-type") {
    for (auto* o : {f.opt_v1, f.opt_v2, f.opt_v3}) require(o, m);
    s = m == "eckart-type" ? kg_model_eckart_type(f.v1, f.v2, f.v3, f.q, f.alpha, &out)
                           : kg_model_rosen_morse_type(f.v1, f.v2, f.v3, f.q, f.alpha, &out);
  } else if (m == "hulthen" || m == "woods-saxon") {
    require(f.opt_v0, m);
    s = m == "hulthen" ? kg_model_hulthen(f.v0, f.alpha, &out)
                       : kg_model_woods_saxon(f.v0, f.alpha, &out);
  } else if (m == "standard-eckart") {
    for (auto* o : {f.opt_v1, f.opt_v2}) require(o, m);
    s = kg_model_standard_eckart(f.v1, f.v2, f.alpha, &out);
  } else if (m == "rosen-morse-well") {
    for (auto* o : {f.opt_v1, f.opt_v2}) require(o, m);
    s = kg_model_rosen_morse_well(f.v1, f.v2, f.q, f.alpha, &out);
  } else if (m == "trig-rosen-morse") {
    if (!lenient) {
      require(f.opt_a, m);
      require(f.opt_b, m);
    }
    s = kg_model_trig_rosen_morse(f.a, f.b, f.alpha, &out);
  } else {
    throw ExitError(exit_usage, "unknown model " + m);
  }
  check(s);
  return ModelPtr(out);
}

struct StateFlags {
  std::string n = "0";
  int l = 0;
  int dim = 3;
  std::string branch = "both";
  double mass = 1.0;
  CLI::Option* opt_mass = nullptr;
};

void add_state_flags(CLI::App* app, StateFlags& f) {
  app->add_option("--n", f.n, "radial quantum number: N, A-B, or a comma list")
      ->capture_default_str();
  app->add_option("--l", f.l, "orbital quantum number")->capture_default_str()->check(CLI::NonNegativeNumber);
  app->add_option("--dim", f.dim, "spatial dimension D")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--branch", f.branch, "S = +V (plus), S = -V (minus) or both")
      ->capture_default_str()
      ->check(CLI::IsMember({"plus", "minus", "both"}));
  f.opt_mass = app->add_option("--mass", f.mass, "rest energy M c^2")->required();
}

struct ScanFlags {
  int grid = 0;
  double tol = 0.0;
  double shrink = 0.0;
  CLI::Option* opt_tol = nullptr;
};

void add_scan_flags(CLI::App* app, ScanFlags& f) {
  const kg_scan_config d = kg_scan_config_default();
  f.grid = d.grid_points;
  f.shrink = d.window_shrink;
  app->add_option("--grid", f.grid, "scan grid points (>= 64)")->capture_default_str();
  f.opt_tol = app->add_option("--tol", f.tol, "root tolerance (default 1e-10 M, or $KG_TOL_ROOT)");
  app->add_option("--shrink", f.shrink, "window shrink eta")->capture_default_str();
}

kg_scan_config scan_config(const ScanFlags& f) {
  kg_scan_config c = kg_scan_config_default();
  c.grid_points = f.grid;
  c.window_shrink = f.shrink;
  if (f.opt_tol->count() > 0) {
    c.tol_root = f.tol;
  } else if (const char* env = std::getenv("KG_TOL_ROOT")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      throw ExitError(exit_usage, "KG_TOL_ROOT must be a positive number");
    }
    c.tol_root = v;
  }
  return c;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw ExitError(exit_usage, "not an integer: " + s);
  return v;
}

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-', 1);
    if (dash != std::string::npos) {
      const int lo = parse_int(item.substr(0, dash));
      const int hi = parse_int(item.substr(dash + 1));
      if (hi < lo) throw ExitError(exit_usage, "empty range " + item);
      for (int n = lo; n <= hi; ++n) out.push_back(n);
    } else {
      out.push_back(parse_int(item));
    }
  }
  if (out.empty()) throw ExitError(exit_usage, "no quantum number given");
  for (const int n : out) {
    if (n < 0) throw ExitError(exit_usage, "n must be >= 0");
  }
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0') throw ExitError(exit_usage, "not a number: " + item);
    out.push_back(v);
  }
  return out;
}

unsigned branch_mask(const std::string& b) {
  if (b == "plus") return KG_BRANCH_PLUS;
  if (b == "minus") return KG_BRANCH_MINUS;
  return KG_BRANCH_BOTH;
}

const char* branch_name(int sign) { return sign > 0 ? "plus" : "minus"; }

std::string flag_names(unsigned flags) {
  static const std::pair<unsigned, const char*> names[] = {
      {KG_FLAG_P_POSITIVE, "p_positive"},
      {KG_FLAG_W_POSITIVE, "w_positive"},
      {KG_FLAG_TAU_PRIME_NEGATIVE, "tau_prime_negative"},
      {KG_FLAG_CLASSICAL_JACOBI, "classical_jacobi_range"},
      {KG_FLAG_FULL_LINE_DECAY, "full_line_decay"},
  };
  std::string out;
  for (const auto& [bit, name] : names) {
    if (!(flags & bit)) continue;
    if (!out.empty()) out += '|';
    out += name;
  }
  return out.empty() ? "none" : out;
}

std::vector<kg_bound_state> locate(const kg_model* m, int n, int l, int D, unsigned branches,
                                   double mass, const kg_scan_config& scan) {
  kg_states* raw = nullptr;
  check(kg_find_bound_states(m, n, l, D, branches, mass, &scan, &raw));
  std::unique_ptr<kg_states, StatesDeleter> states(raw);
  std::vector<kg_bound_state> out(kg_states_count(raw));
  for (std::size_t i = 0; i < out.size(); ++i) check(kg_states_get(raw, i, &out[i]));
  return out;
}

// ---- subcommands ----

struct SpectrumCmd {
  ModelFlags model;
  StateFlags state;
  ScanFlags scan;
  std::string output;

  int run() const {
    const ModelPtr m = build_model(model, false);
    const kg_scan_config sc = scan_config(scan);
    Sink out(output);
    out.line("n,l,D,branch,E,p,w,admissible_flags");
    std::size_t rows = 0;
    for (const int n : parse_n_list(state.n)) {
      for (const auto& b : locate(m.get(), n, state.l, state.dim, branch_mask(state.branch),
                                  state.mass, sc)) {
        out.line(std::to_string(b.n) + "," + std::to_string(b.l) + "," + std::to_string(b.D) + "," +
                 branch_name(b.sign) + "," + num(b.energy) + "," + num(b.p) + "," + num(b.w) + "," +
                 flag_names(b.flags));
        ++rows;
      }
    }
    if (rows == 0) {
      std::fprintf(stderr, "no bound states found\n");
      return exit_no_roots;
    }
    return exit_ok;
  }
};

struct Table1Cmd {
  int block = 0; // 0: all
  double match_tol = 5e-4;
  ScanFlags scan;
  std::string output;

  int run() const {
    const kg_scan_config sc = scan_config(scan);
    Sink out(output);
    out.line("block,n,E_computed_1,E_computed_2,E_computed_3,E_computed_4,"
             "E_paper_1,E_paper_2,E_paper_3,E_paper_4,match");
    std::vector<std::string> offenders;
    const int blocks = kg_table1_block_count();
    for (int k = 1; k <= blocks; ++k) {
      if (block != 0 && block != k) continue;
      kg_table_block tb{};
      check(kg_table1_block(k, &tb));
      kg_model* raw = nullptr;
      check(kg_model_rosen_morse_well(tb.v1, tb.v2, tb.q, tb.alpha, &raw));
      const ModelPtr m(raw);
      for (int n = 1; n <= 5; ++n) {
        double paper[4];
        check(kg_table1_reference(k, n, paper));
        const auto roots = locate(m.get(), n, 0, 3, KG_BRANCH_BOTH, tb.mass, sc);
        std::size_t expected = 0;
        while (expected < 4 && !std::isnan(paper[expected])) ++expected;
        bool match = roots.size() == expected;
        for (std::size_t i = 0; match && i < expected; ++i) {
          match = std::abs(roots[i].energy - paper[i]) < match_tol;
        }
        std::string row = std::to_string(k) + "," + std::to_string(n);
        for (std::size_t i = 0; i < 4; ++i) {
          row += "," + (i < roots.size() ? num(roots[i].energy) : std::string("-"));
        }
        for (std::size_t i = 0; i < 4; ++i) {
          row += "," + (i < expected ? num(paper[i]) : std::string("-"));
        }
        row += match ? ",yes" : ",no";
        out.line(row);
        if (!match) offenders.push_back("block " + std::to_string(k) + " n=" + std::to_string(n));
        if (roots.size() > 4) offenders.push_back("more than four roots in block " + std::to_string(k));
      }
    }
    if (!offenders.empty()) {
      for (const auto& o : offenders) std::fprintf(stderr, "mismatch: %s\n", o.c_str());
      return exit_table_mismatch;
    }
    return exit_ok;
  }
};

struct WavefunctionCmd {
  ModelFlags model;
  StateFlags state;
  ScanFlags scan;
  int root = 0;
  bool normalize = false;
  bool full_line = false;
  int samples = 0;
  double r_max = 0.0;
  std::string format = "csv";
  std::string output;

  int run() const {
    const ModelPtr m = build_model(model, false);
    const auto ns = parse_n_list(state.n);
    if (ns.size() != 1) throw ExitError(exit_usage, "wavefunction takes a single n");
    const auto roots = locate(m.get(), ns.front(), state.l, state.dim, branch_mask(state.branch),
                              state.mass, scan_config(scan));
    if (roots.empty()) {
      std::fprintf(stderr, "no bound states found\n");
      return exit_no_roots;
    }
    if (root < 0 || static_cast<std::size_t>(root) >= roots.size()) {
      throw ExitError(exit_usage, "root index " + std::to_string(root) + " out of range (" +
                                      std::to_string(roots.size()) + " roots)");
    }
    if (full_line && !kg_model_supports_full_line(m.get())) {
      throw ExitError(exit_usage, "--full-line needs a Rosen-Morse-family model");
    }
    kg_grid_config g = kg_grid_config_default();
    if (samples > 0) g.samples = samples;
    g.full_line = full_line ? 1 : 0;
    g.r_max = r_max;
    kg_sample* raw = nullptr;
    const kg_status s = kg_sample_state(m.get(), &roots[static_cast<std::size_t>(root)], &g,
                                        normalize ? 1 : 0, &raw);
    check(s, s == KG_ERR_NON_NORMALIZABLE ? exit_non_normalizable : exit_usage);
    const std::unique_ptr<kg_sample, SampleDeleter> sample(raw);
    Sink out(output);
    check(kg_sample_write_csv(raw, out.get()));
    std::fprintf(stderr, "E=%s nodes=%d max_ode_residual=%s normalization=%s\n",
                 num(roots[static_cast<std::size_t>(root)].energy).c_str(), kg_sample_nodes(raw),
                 num(kg_sample_max_residual(raw)).c_str(), num(kg_sample_normalization(raw)).c_str());
    return exit_ok;
  }
};

struct OracleCmd {
  ModelFlags model;
  StateFlags state;
  ScanFlags scan;
  std::string mode = "approx";
  std::string sweep;
  double rel_tol = 1e-6;
  std::string output;

  int run() const {
    const ModelPtr m = build_model(model, false);
    Sink out(output);
    if (mode == "approx") return run_approx(m.get(), out);
    if (mode == "exact") return run_exact(m.get(), out);
    return run_nonrel(m.get(), out);
  }

  int run_approx(const kg_model* m, const Sink& out) const {
    const kg_scan_config sc = scan_config(scan);
    out.line("n,l,D,branch,E_closed,E_shot,rel_error,agree");
    bool all = true;
    std::size_t rows = 0;
    for (const int n : parse_n_list(state.n)) {
      kg_comparisons* raw = nullptr;
      check(kg_oracle_compare(m, n, state.l, state.dim, branch_mask(state.branch), state.mass,
                              rel_tol, &sc, &raw));
      const std::unique_ptr<kg_comparisons, ComparisonsDeleter> cmp(raw);
      for (std::size_t i = 0; i < kg_comparisons_count(raw); ++i) {
        kg_comparison c{};
        check(kg_comparisons_get(raw, i, &c));
        out.line(std::to_string(c.state.n) + "," + std::to_string(c.state.l) + "," +
                 std::to_string(c.state.D) + "," + branch_name(c.state.sign) + "," +
                 num(c.state.energy) + "," + (c.has_shot ? num(c.shot) : std::string("-")) + "," +
                 (c.has_shot ? num(c.rel_error) : std::string("-")) + "," +
                 (c.agree ? "yes" : "no"));
        all = all && c.agree;
        ++rows;
      }
    }
    if (rows == 0) {
      std::fprintf(stderr, "no bound states found\n");
      return exit_no_roots;
    }
    return all ? exit_ok : exit_oracle_disagreement;
  }

  int run_exact(const kg_model* m, const Sink& out) const {
    const auto ns = parse_n_list(state.n);
    if (ns.size() != 1) throw ExitError(exit_usage, "exact mode takes a single n");
    if (state.branch == "both") throw ExitError(exit_usage, "exact mode needs --branch plus or minus");
    const std::vector<double> alphas =
        sweep.empty() ? std::vector<double>{kg_model_alpha(m)} : parse_doubles(sweep);
    std::vector<kg_approx_row> rows(alphas.size());
    check(kg_approximation_error(m, ns.front(), state.l, state.dim,
                                 state.branch == "plus" ? KG_SIGN_PLUS : KG_SIGN_MINUS, state.mass,
                                 alphas.data(), alphas.size(), rows.data()),
          exit_oracle_disagreement);
    out.line("alpha,E_closed,E_exact,abs_error");
    for (const auto& r : rows) {
      out.line(num(r.alpha) + "," + num(r.closed) + "," + num(r.exact) + "," + num(r.abs_error));
    }
    return exit_ok;
  }

  int run_nonrel(const kg_model* m, const Sink& out) const {
    const kg_nonrel_mode nm = mode == "nonrel-2V" ? KG_NONREL_2V : KG_NONREL_V;
    out.line("n,l,D,mode,E_closed,E_shot,rel_error,agree");
    bool all = true;
    for (const int n : parse_n_list(state.n)) {
      kg_nonrel_comparison c{};
      check(kg_oracle_nonrel(m, n, state.l, state.dim, state.mass, nm, rel_tol, &c));
      out.line(std::to_string(n) + "," + std::to_string(state.l) + "," + std::to_string(state.dim) +
               "," + mode + "," + num(c.closed) + "," + (c.has_shot ? num(c.shot) : std::string("-")) +
               "," + (c.has_shot ? num(c.rel_error) : std::string("-")) + "," +
               (c.agree ? "yes" : "no"));
      all = all && c.agree;
    }
    return all ? exit_ok : exit_oracle_disagreement;
  }
};

struct CurveCmd {
  ModelFlags model;
  int points = 500;
  double x_min = NAN;
  double x_max = NAN;
  bool full_line = false;
  std::string output;

  int run() {
    if (model.model.empty()) model.model = "trig-rosen-morse";
    const ModelPtr m = build_model(model, true);
    if (points < 2) throw ExitError(exit_usage, "--points must be at least 2");
    const double a = kg_model_alpha(m.get());
    const bool trig = model.model == "trig-rosen-morse";
    const double lo = std::isnan(x_min) ? (trig ? 0.01 * std::numbers::pi / a : 0.01 / a) : x_min;
    const double hi = std::isnan(x_max) ? (trig ? 0.99 * std::numbers::pi / a : 10.0 / a) : x_max;
    if (!(hi > lo)) throw ExitError(exit_usage, "--x-max must exceed --x-min");
    std::vector<std::string> rows;
    rows.reserve(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
      const double x = lo + (hi - lo) * i / (points - 1);
      double v = 0.0;
      check(kg_potential(m.get(), x, full_line ? 1 : 0, &v));
      rows.push_back(num(x) + "," + num(v));
    }
    Sink out(output);
    out.line("x,V");
    for (const auto& r : rows) out.line(r);
    return exit_ok;
  }
};

// key=value lines (blank lines and '#' comments skipped) become --key value.
std::vector<std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ExitError(exit_usage, "cannot read config " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ExitError(exit_usage, "config line without '=': " + line);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ExitError(exit_usage, "config line without key: " + line);
    if (value == "false") continue; // switches are off unless named
    out.push_back("--" + key);
    if (value != "true") out.push_back(value);
  }
  return out;
}

// Splices the config file's flags in right after the subcommand name so that
// flags given on the command line (parsed later) win.
std::vector<std::string> expand_config(int argc, char** argv, const std::vector<std::string>& subs) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::vector<std::string> extra;
  for (std::size_t i = 0; i < args.size();) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      extra = read_config(args[i + 1]);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      extra = read_config(args[i].substr(9));
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  if (extra.empty()) return args;
  const auto sub = std::find_if(args.begin(), args.end(), [&](const std::string& a) {
    return std::find(subs.begin(), subs.end(), a) != subs.end();
  });
  if (sub == args.end()) throw ExitError(exit_usage, "--config needs a subcommand");
  args.insert(sub + 1, extra.begin(), extra.end());
  return args;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Klein-Gordon bound states of exponential-type potentials", "kgspec"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  std::string config_note;
  app.add_option("--config", config_note, "file of key=value lines, one per flag (flags on the command line win)");

  SpectrumCmd spectrum;
  auto* sp = app.add_subcommand("spectrum", "bound-state energies of one model");
  add_model_flags(sp, spectrum.model, true);
  add_state_flags(sp, spectrum.state);
  add_scan_flags(sp, spectrum.scan);
  sp->add_option("-o,--output", spectrum.output, "CSV file (default stdout)");

  Table1Cmd table1;
  auto* tb = app.add_subcommand("table1", "recompute the Rosen-Morse well reference spectra");
  tb->add_option("--block", table1.block, "block 1-4 (default all)")->check(CLI::Range(0, 4));
  tb->add_option("--match-tol", table1.match_tol, "absolute match tolerance")->capture_default_str();
  add_scan_flags(tb, table1.scan);
  tb->add_option("-o,--output", table1.output, "CSV file (default stdout)");

  WavefunctionCmd wave;
  auto* wf = app.add_subcommand("wavefunction", "sample the radial wavefunction of one root");
  add_model_flags(wf, wave.model, true);
  add_state_flags(wf, wave.state);
  add_scan_flags(wf, wave.scan);
  wf->add_option("--root", wave.root, "root index, descending energy order")->capture_default_str();
  wf->add_flag("--normalize", wave.normalize, "normalize numerically (requires a decaying state)");
  wf->add_flag("--full-line", wave.full_line, "sample the whole line (Rosen-Morse family)");
  wf->add_option("--samples", wave.samples, "grid points");
  wf->add_option("--r-max", wave.r_max, "outer end of the grid");
  wf->add_option("--format", wave.format, "output format")->check(CLI::IsMember({"csv"}))->capture_default_str();
  wf->add_option("-o,--output", wave.output, "CSV file (default stdout)");

  OracleCmd oracle;
  auto* orc = app.add_subcommand("oracle", "compare closed forms with direct shooting");
  add_model_flags(orc, oracle.model, true);
  add_state_flags(orc, oracle.state);
  add_scan_flags(orc, oracle.scan);
  orc->add_option("--mode", oracle.mode, "approx, exact, nonrel-V or nonrel-2V")
      ->check(CLI::IsMember({"approx", "exact", "nonrel-V", "nonrel-2V"}))
      ->capture_default_str();
  orc->add_option("--alpha-sweep", oracle.sweep, "comma list of alpha values (exact mode)");
  orc->add_option("--rel-tol", oracle.rel_tol, "relative agreement tolerance")->capture_default_str();
  orc->add_option("-o,--output", oracle.output, "CSV file (default stdout)");

  CurveCmd curve;
  auto* pc = app.add_subcommand("potential-curve", "sample V on a grid");
  add_model_flags(pc, curve.model, false);
  pc->add_option("--points", curve.points, "grid points")->capture_default_str();
  pc->add_option("--x-min", curve.x_min, "grid start");
  pc->add_option("--x-max", curve.x_max, "grid end");
  pc->add_flag("--full-line", curve.full_line, "allow x <= 0 (Rosen-Morse family)");
  pc->add_option("-o,--output", curve.output, "CSV file (default stdout)");

  try {
    std::vector<std::string> args =
        expand_config(argc, argv, {"spectrum", "table1", "wavefunction", "oracle", "potential-curve"});
    std::reverse(args.begin(), args.end());
    try {
      app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
      return app.exit(e) == 0 ? exit_ok : exit_usage;
    }
    if (sp->parsed()) return spectrum.run();
    if (tb->parsed()) return table1.run();
    if (wf->parsed()) return wave.run();
    if (orc->parsed()) return oracle.run();
    if (pc->parsed()) return curve.run();
  } catch (const ExitError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_usage;
  }
  return exit_usage;
}
