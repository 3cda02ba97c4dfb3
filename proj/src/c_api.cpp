#include "kgspec/kgspec.h"

#include "kgspec/error.hpp"
#include "kgspec/oracle.hpp"
#include "kgspec/reference_table.hpp"
#include "kgspec/specfun.hpp"
#include "kgspec/wavefn.hpp"

#include <cmath>
#include <exception>
#include <new>
#include <sstream>
#include <string>
#include <vector>

struct kg_model {
  kgspec::PotentialModel model;
};

struct kg_states {
  std::vector<kg_bound_state> states;
};

struct kg_sample {
  kgspec::RadialSample sample;
};

struct kg_comparisons {
  std::vector<kg_comparison> rows;
};

namespace {

using namespace kgspec;

thread_local std::string last_error;

kg_status fail(kg_status s, const char* what) {
  last_error = what;
  return s;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
kg_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return KG_OK;
  } catch (const Error& e) {
    return fail(static_cast<kg_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(KG_ERR_INTERNAL, e.what());
  }
}

Sign to_sign(int sign) {
  if (sign == KG_SIGN_PLUS) return Sign::plus;
  if (sign == KG_SIGN_MINUS) return Sign::minus;
  throw Error(ErrorCode::invalid_argument, "sign must be +1 or -1");
}

std::vector<Sign> to_branches(unsigned mask) {
  std::vector<Sign> out;
  if (mask & KG_BRANCH_PLUS) out.push_back(Sign::plus);
  if (mask & KG_BRANCH_MINUS) out.push_back(Sign::minus);
  if (out.empty()) throw Error(ErrorCode::invalid_argument, "no sign branch selected");
  return out;
}

DimensionalNumbers dims(int D, int l) {
  if (D < 1 || l < 0) throw Error(ErrorCode::invalid_argument, "need D >= 1 and l >= 0");
  return dimensional_numbers(D, l);
}

ScanConfig to_scan(const kg_scan_config* c) {
  ScanConfig s;
  if (c) {
    s.grid_points = c->grid_points;
    s.tol_root = c->tol_root;
    s.window_shrink = c->window_shrink;
  }
  return s;
}

kg_bound_state to_c(const BoundState& b) {
  kg_bound_state o{};
  o.n = b.n;
  o.l = b.l;
  o.D = b.D;
  o.sign = static_cast<int>(b.sign);
  o.energy = b.energy;
  o.mass = b.mass;
  o.residual = b.residual;
  o.p = b.exponents.p;
  o.w = b.exponents.w;
  o.jacobi_alpha = b.exponents.jacobi_alpha;
  o.jacobi_beta = b.exponents.jacobi_beta;
  const Admissibility& f = b.flags;
  o.flags = (f.p_positive ? KG_FLAG_P_POSITIVE : 0u) | (f.w_positive ? KG_FLAG_W_POSITIVE : 0u) |
            (f.tau_prime_negative ? KG_FLAG_TAU_PRIME_NEGATIVE : 0u) |
            (f.classical_jacobi_range ? KG_FLAG_CLASSICAL_JACOBI : 0u) |
            (f.full_line_decay ? KG_FLAG_FULL_LINE_DECAY : 0u);
  return o;
}

// Rebuilds the full state from the POD; exponents are recomputed so a
// hand-edited struct cannot disagree with its energy.
BoundState from_c(const kg_model& m, const kg_bound_state& b) {
  return make_bound_state(m.model, b.n, dims(b.D, b.l), to_sign(b.sign), b.mass, b.energy);
}

template <class T>
kg_status make_model(T value, kg_model** out) {
  if (!out) return fail(KG_ERR_NULL, "out pointer is NULL");
  *out = nullptr;
  return guarded([&] {
    PotentialModel pm = value;
    validate(pm);
    *out = new kg_model{pm};
  });
}

} // namespace

extern "C" {

const char* kg_last_error(void) { return last_error.c_str(); }

const char* kg_status_name(kg_status s) {
  switch (s) {
  case KG_OK: return "ok";
  case KG_ERR_DOMAIN: return "domain";
  case KG_ERR_POLE: return "pole";
  case KG_ERR_PARAMETER: return "parameter";
  case KG_ERR_COMPLEX_BRANCH: return "complex-branch";
  case KG_ERR_WINDOW: return "window";
  case KG_ERR_S_WAVE_ONLY: return "s-wave-only";
  case KG_ERR_UNSUPPORTED: return "unsupported";
  case KG_ERR_NON_NORMALIZABLE: return "non-normalizable";
  case KG_ERR_NO_SIGN_CHANGE: return "no-sign-change";
  case KG_ERR_INVALID_ARGUMENT: return "invalid-argument";
  case KG_ERR_NULL: return "null-pointer";
  case KG_ERR_RANGE: return "range";
  case KG_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

kg_status kg_gamma(double x, double* out) {
  if (!out) return fail(KG_ERR_NULL, "out pointer is NULL");
  return guarded([&] { *out = specfun::gamma_real(x); });
}

kg_status kg_jacobi(int n, double a, double b, double x, double* out) {
  if (!out) return fail(KG_ERR_NULL, "out pointer is NULL");
  return guarded([&] {
    if (n < 0) throw Error(ErrorCode::invalid_argument, "jacobi degree must be >= 0");
    *out = specfun::jacobi_poly({n, a, b}, x);
  });
}

kg_status kg_hyp2f1_terminating(int n, double b, double c, double x, double* out) {
  if (!out) return fail(KG_ERR_NULL, "out pointer is NULL");
  return guarded([&] { *out = specfun::hyp2f1_terminating(n, b, c, x); });
}

kg_status kg_model_eckart_type(double v1, double v2, double v3, double q, double alpha,
                               kg_model** out) {
  return make_model(EckartType{v1, v2, v3, q, alpha}, out);
}

kg_status kg_model_rosen_morse_type(double v1, double v2, double v3, double q, double alpha,
                                    kg_model** out) {
  return make_model(RosenMorseType{v1, v2, v3, q, alpha}, out);
}

kg_status kg_model_hulthen(double v0, double alpha, kg_model** out) {
  return make_model(Hulthen{v0, alpha}, out);
}

kg_status kg_model_woods_saxon(double v0, double alpha, kg_model** out) {
  return make_model(WoodsSaxon{v0, alpha}, out);
}

kg_status kg_model_standard_eckart(double v1, double v2, double alpha, kg_model** out) {
  return make_model(StandardEckart{v1, v2, alpha}, out);
}

kg_status kg_model_rosen_morse_well(double v1, double v2, double q, double alpha, kg_model** out) {
  return make_model(RosenMorseWell{v1, v2, q, alpha}, out);
}

kg_status kg_model_trig_rosen_morse(double a, double b, double alpha, kg_model** out) {
  return make_model(TrigRosenMorse{a, b, alpha}, out);
}

void kg_model_free(kg_model* m) { delete m; }

const char* kg_model_name(const kg_model* m) { return m ? model_name(m->model) : ""; }

double kg_model_alpha(const kg_model* m) {
  if (!m) return NAN;
  return std::visit([](const auto& v) { return v.alpha; }, m->model);
}

int kg_model_supports_full_line(const kg_model* m) {
  return m && canonical(m->model).family == Family::rosen_morse_like ? 1 : 0;
}

kg_status kg_model_with_alpha(const kg_model* m, double alpha, kg_model** out) {
  if (!m || !out) return fail(KG_ERR_NULL, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    PotentialModel pm = with_alpha(m->model, alpha);
    validate(pm);
    *out = new kg_model{pm};
  });
}

kg_status kg_potential(const kg_model* m, double r, int full_line, double* out) {
  if (!m || !out) return fail(KG_ERR_NULL, "NULL argument");
  return guarded([&] { *out = evaluate_potential(m->model, r, full_line != 0); });
}

kg_scan_config kg_scan_config_default(void) {
  const ScanConfig s;
  return {s.grid_points, s.tol_root, s.window_shrink};
}

kg_status kg_energy_residual(const kg_model* m, int n, int l, int D, int sign, double mass,
                             double energy, double* out, int* complex_window) {
  if (!m || !out) return fail(KG_ERR_NULL, "NULL argument");
  return guarded([&] {
    const auto r = energy_residual(m->model, n, dims(D, l), to_sign(sign), mass, energy);
    *out = r ? *r : NAN;
    if (complex_window) *complex_window = r ? 0 : 1;
  });
}

kg_status kg_make_state(const kg_model* m, int n, int l, int D, int sign, double mass,
                        double energy, kg_bound_state* out) {
  if (!m || !out) return fail(KG_ERR_NULL, "NULL argument");
  return guarded(
      [&] { *out = to_c(make_bound_state(m->model, n, dims(D, l), to_sign(sign), mass, energy)); });
}

kg_status kg_find_bound_states(const kg_model* m, int n, int l, int D, unsigned branches,
                               double mass, const kg_scan_config* scan, kg_states** out) {
  if (!m || !out) return fail(KG_ERR_NULL, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    if (n < 0) throw Error(ErrorCode::invalid_argument, "n must be >= 0");
    const auto found =
        find_bound_states(m->model, n, dims(D, l), to_branches(branches), mass, to_scan(scan));
    auto* s = new kg_states;
    for (const auto& b : found) s->states.push_back(to_c(b));
    *out = s;
  });
}

size_t kg_states_count(const kg_states* s) { return s ? s->states.size() : 0; }

kg_status kg_states_get(const kg_states* s, size_t i, kg_bound_state* out) {
  if (!s || !out) return fail(KG_ERR_NULL, "NULL argument");
  if (i >= s->states.size()) return fail(KG_ERR_RANGE, "state index out of range");
  *out = s->states[i];
  return KG_OK;
}

void kg_states_free(kg_states* s) { delete s; }

kg_status kg_nonrelativistic_energy(const kg_model* m, int n, int l, int D, double mass,
                                    kg_nonrel_mode mode, double* out) {
  if (!m || !out) return fail(KG_ERR_NULL, "NULL argument");
  return guarded([&] {
    const NonrelMode nm = mode == KG_NONREL_2V ? NonrelMode::kg_limit_2v : NonrelMode::schrodinger_v;
    *out = nonrelativistic_energy(m->model, n, dims(D, l), mass, nm);
  });
}

kg_grid_config kg_grid_config_default(void) {
  const GridConfig g;
  return {g.samples, g.panels, g.tail_tolerance, g.full_line ? 1 : 0, g.r_max};
}

kg_status kg_radial_u(const kg_model* m, const kg_bound_state* b, double r, int full_line,
                      double* out) {
  if (!m || !b || !out) return fail(KG_ERR_NULL, "NULL argument");
  return guarded([&] { *out = radial_u(from_c(*m, *b), m->model, r, full_line != 0); });
}

kg_status kg_sample_state(const kg_model* m, const kg_bound_state* b, const kg_grid_config* cfg,
                          int normalize, kg_sample** out) {
  if (!m || !b || !out) return fail(KG_ERR_NULL, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    GridConfig g;
    if (cfg) {
      g.samples = cfg->samples;
      g.panels = cfg->panels;
      g.tail_tolerance = cfg->tail_tolerance;
      g.full_line = cfg->full_line != 0;
      g.r_max = cfg->r_max;
    }
    const BoundState state = from_c(*m, *b);
    auto* s = new kg_sample;
    try {
      s->sample = normalize ? kgspec::normalize(state, m->model, g) : sample(state, m->model, g);
    } catch (...) {
      delete s;
      throw;
    }
    *out = s;
  });
}

size_t kg_sample_size(const kg_sample* s) { return s ? s->sample.grid.size() : 0; }

kg_status kg_sample_point(const kg_sample* s, size_t i, double* r, double* u, double* R) {
  if (!s) return fail(KG_ERR_NULL, "NULL argument");
  if (i >= s->sample.grid.size()) return fail(KG_ERR_RANGE, "sample index out of range");
  if (r) *r = s->sample.grid[i];
  if (u) *u = s->sample.u_values[i];
  if (R) *R = s->sample.R_values[i];
  return KG_OK;
}

double kg_sample_normalization(const kg_sample* s) {
  return s ? s->sample.normalization_constant : NAN;
}

int kg_sample_nodes(const kg_sample* s) { return s ? s->sample.node_count : -1; }

double kg_sample_max_residual(const kg_sample* s) { return s ? s->sample.max_ode_residual : NAN; }

kg_status kg_sample_write_csv(const kg_sample* s, FILE* f) {
  if (!s || !f) return fail(KG_ERR_NULL, "NULL argument");
  return guarded([&] {
    std::ostringstream os;
    write_csv(s->sample, os);
    const std::string text = os.str();
    if (std::fwrite(text.data(), 1, text.size(), f) != text.size()) {
      throw Error(ErrorCode::invalid_argument, "short write");
    }
  });
}

void kg_sample_free(kg_sample* s) { delete s; }

kg_status kg_oracle_compare(const kg_model* m, int n, int l, int D, unsigned branches, double mass,
                            double rel_tol, const kg_scan_config* scan, kg_comparisons** out) {
  if (!m || !out) return fail(KG_ERR_NULL, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    const auto rows = compare_closed_form(m->model, n, dims(D, l), to_branches(branches), mass,
                                          rel_tol, to_scan(scan));
    auto* c = new kg_comparisons;
    for (const auto& r : rows) {
      c->rows.push_back({to_c(r.state), r.shot ? 1 : 0, r.shot.value_or(NAN), r.rel_error,
                         r.agree ? 1 : 0});
    }
    *out = c;
  });
}

size_t kg_comparisons_count(const kg_comparisons* c) { return c ? c->rows.size() : 0; }

kg_status kg_comparisons_get(const kg_comparisons* c, size_t i, kg_comparison* out) {
  if (!c || !out) return fail(KG_ERR_NULL, "NULL argument");
  if (i >= c->rows.size()) return fail(KG_ERR_RANGE, "comparison index out of range");
  *out = c->rows[i];
  return KG_OK;
}

void kg_comparisons_free(kg_comparisons* c) { delete c; }

kg_status kg_oracle_nonrel(const kg_model* m, int n, int l, int D, double mass, kg_nonrel_mode mode,
                           double rel_tol, kg_nonrel_comparison* out) {
  if (!m || !out) return fail(KG_ERR_NULL, "NULL argument");
  return guarded([&] {
    const NonrelMode nm = mode == KG_NONREL_2V ? NonrelMode::kg_limit_2v : NonrelMode::schrodinger_v;
    const auto r = compare_nonrelativistic(m->model, n, dims(D, l), mass, nm, rel_tol);
    *out = {r.closed, r.shot ? 1 : 0, r.shot.value_or(NAN), r.rel_error, r.agree ? 1 : 0};
  });
}

kg_status kg_approximation_error(const kg_model* m, int n, int l, int D, int sign, double mass,
                                 const double* alphas, size_t count, kg_approx_row* rows) {
  if (!m || (count > 0 && (!alphas || !rows))) return fail(KG_ERR_NULL, "NULL argument");
  return guarded([&] {
    const std::vector<double> as(alphas, alphas + count);
    const auto out = approximation_error(m->model, n, dims(D, l), to_sign(sign), mass, as);
    for (std::size_t i = 0; i < out.size(); ++i) {
      rows[i] = {out[i].alpha, out[i].closed, out[i].exact, out[i].abs_error};
    }
  });
}

int kg_table1_block_count(void) { return static_cast<int>(reference_blocks().size()); }

kg_status kg_table1_block(int block, kg_table_block* out) {
  if (!out) return fail(KG_ERR_NULL, "NULL argument");
  if (block < 1 || block > kg_table1_block_count()) return fail(KG_ERR_RANGE, "block out of range");
  const ReferenceBlock& b = reference_blocks()[static_cast<std::size_t>(block - 1)];
  *out = {b.alpha, b.q, b.v1, b.v2, b.mass};
  return KG_OK;
}

kg_status kg_table1_reference(int block, int n, double energies[4]) {
  if (!energies) return fail(KG_ERR_NULL, "NULL argument");
  if (block < 1 || block > kg_table1_block_count() || n < 1 || n > 5) {
    return fail(KG_ERR_RANGE, "block or row out of range");
  }
  const auto& row = reference_blocks()[static_cast<std::size_t>(block - 1)]
                        .energies[static_cast<std::size_t>(n - 1)];
  for (std::size_t i = 0; i < 4; ++i) energies[i] = row[i];
  return KG_OK;
}

} // extern "C"
