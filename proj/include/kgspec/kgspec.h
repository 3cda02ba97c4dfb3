#ifndef KGSPEC_KGSPEC_H
#define KGSPEC_KGSPEC_H

/* C interface to the Klein-Gordon bound-state solver.
 *
 * Every fallible call returns a kg_status and writes results through out
 * pointers. On failure kg_last_error() describes the most recent error on
 * the calling thread. Handles are owned by the caller and released with the
 * matching *_free function (NULL is accepted). */

#include <stddef.h>
#include <stdio.h>

#if defined(KGSPEC_BUILDING)
#define KG_API __attribute__((visibility("default")))
#else
#define KG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kg_status {
  KG_OK = 0,
  KG_ERR_DOMAIN = 1,           /* argument outside the function's domain */
  KG_ERR_POLE = 2,             /* gamma function pole */
  KG_ERR_PARAMETER = 3,        /* invalid model or series parameter */
  KG_ERR_COMPLEX_BRANCH = 4,   /* negative radicand in the NU parameters */
  KG_ERR_WINDOW = 5,           /* |E| >= M */
  KG_ERR_S_WAVE_ONLY = 6,      /* Rosen-Morse family needs l = 0, D = 3 */
  KG_ERR_UNSUPPORTED = 7,      /* model/mode combination not available */
  KG_ERR_NON_NORMALIZABLE = 8, /* state does not decay at a boundary */
  KG_ERR_NO_SIGN_CHANGE = 9,   /* shooting bracket holds no eigenvalue */
  KG_ERR_INVALID_ARGUMENT = 10,
  KG_ERR_NULL = 11,            /* required pointer argument is NULL */
  KG_ERR_RANGE = 12,           /* index out of range */
  KG_ERR_INTERNAL = 13
} kg_status;

KG_API const char* kg_last_error(void);
KG_API const char* kg_status_name(kg_status s);

/* ---- special functions ---- */

KG_API kg_status kg_gamma(double x, double* out);
KG_API kg_status kg_jacobi(int n, double a, double b, double x, double* out);
/* 2F1(-n, b; c; x) */
KG_API kg_status kg_hyp2f1_terminating(int n, double b, double c, double x, double* out);

/* ---- potential models ---- */

typedef struct kg_model kg_model;

KG_API kg_status kg_model_eckart_type(double v1, double v2, double v3, double q, double alpha,
                                      kg_model** out);
KG_API kg_status kg_model_rosen_morse_type(double v1, double v2, double v3, double q, double alpha,
                                           kg_model** out);
KG_API kg_status kg_model_hulthen(double v0, double alpha, kg_model** out);
KG_API kg_status kg_model_woods_saxon(double v0, double alpha, kg_model** out);
KG_API kg_status kg_model_standard_eckart(double v1, double v2, double alpha, kg_model** out);
KG_API kg_status kg_model_rosen_morse_well(double v1, double v2, double q, double alpha,
                                           kg_model** out);
KG_API kg_status kg_model_trig_rosen_morse(double a, double b, double alpha, kg_model** out);
KG_API void kg_model_free(kg_model* m);

KG_API const char* kg_model_name(const kg_model* m);
/* Screening parameter as passed to the constructor. */
KG_API double kg_model_alpha(const kg_model* m);
/* Nonzero for models defined on the whole line (Rosen-Morse family). */
KG_API int kg_model_supports_full_line(const kg_model* m);
KG_API kg_status kg_model_with_alpha(const kg_model* m, double alpha, kg_model** out);

KG_API kg_status kg_potential(const kg_model* m, double r, int full_line, double* out);

/* ---- spectrum ---- */

#define KG_SIGN_PLUS 1
#define KG_SIGN_MINUS (-1)

#define KG_BRANCH_PLUS 1u
#define KG_BRANCH_MINUS 2u
#define KG_BRANCH_BOTH 3u

#define KG_FLAG_P_POSITIVE 1u
#define KG_FLAG_W_POSITIVE 2u
#define KG_FLAG_TAU_PRIME_NEGATIVE 4u
#define KG_FLAG_CLASSICAL_JACOBI 8u
#define KG_FLAG_FULL_LINE_DECAY 16u

typedef struct kg_scan_config {
  int grid_points;      /* >= 64 */
  double tol_root;      /* absolute; <= 0 selects 1e-10 * M */
  double window_shrink; /* scan (-M(1 - eta), M(1 - eta)) */
} kg_scan_config;

KG_API kg_scan_config kg_scan_config_default(void);

typedef struct kg_bound_state {
  int n, l, D;
  int sign; /* KG_SIGN_PLUS or KG_SIGN_MINUS */
  double energy;
  double mass;
  double residual;
  double p, w;
  double jacobi_alpha, jacobi_beta;
  unsigned flags; /* KG_FLAG_* */
} kg_bound_state;

KG_API kg_status kg_energy_residual(const kg_model* m, int n, int l, int D, int sign, double mass,
                                    double energy, double* out, int* complex_window);

/* Exponents and flags of the state at `energy` (normally a located root). */
KG_API kg_status kg_make_state(const kg_model* m, int n, int l, int D, int sign, double mass,
                               double energy, kg_bound_state* out);

typedef struct kg_states kg_states;

/* Roots sorted by descending energy; a NULL config selects the defaults. */
KG_API kg_status kg_find_bound_states(const kg_model* m, int n, int l, int D, unsigned branches,
                                      double mass, const kg_scan_config* scan, kg_states** out);
KG_API size_t kg_states_count(const kg_states* s);
KG_API kg_status kg_states_get(const kg_states* s, size_t i, kg_bound_state* out);
KG_API void kg_states_free(kg_states* s);

typedef enum kg_nonrel_mode { KG_NONREL_V = 0, KG_NONREL_2V = 1 } kg_nonrel_mode;

KG_API kg_status kg_nonrelativistic_energy(const kg_model* m, int n, int l, int D, double mass,
                                           kg_nonrel_mode mode, double* out);

/* ---- wavefunctions ---- */

typedef struct kg_grid_config {
  int samples;
  int panels;
  double tail_tolerance;
  int full_line;
  double r_max; /* <= 0: chosen automatically */
} kg_grid_config;

KG_API kg_grid_config kg_grid_config_default(void);

typedef struct kg_sample kg_sample;

KG_API kg_status kg_radial_u(const kg_model* m, const kg_bound_state* b, double r, int full_line,
                             double* out);

/* normalize != 0 requires a decaying state (KG_ERR_NON_NORMALIZABLE otherwise);
 * normalize == 0 samples the unnormalized closed form. */
KG_API kg_status kg_sample_state(const kg_model* m, const kg_bound_state* b,
                                 const kg_grid_config* cfg, int normalize, kg_sample** out);
KG_API size_t kg_sample_size(const kg_sample* s);
KG_API kg_status kg_sample_point(const kg_sample* s, size_t i, double* r, double* u, double* R);
KG_API double kg_sample_normalization(const kg_sample* s);
KG_API int kg_sample_nodes(const kg_sample* s);
KG_API double kg_sample_max_residual(const kg_sample* s);
/* Header r,u,R; 12 significant digits. */
KG_API kg_status kg_sample_write_csv(const kg_sample* s, FILE* f);
KG_API void kg_sample_free(kg_sample* s);

/* ---- oracle ---- */

typedef struct kg_comparison {
  kg_bound_state state;
  int has_shot;
  double shot;
  double rel_error;
  int agree;
} kg_comparison;

typedef struct kg_comparisons kg_comparisons;

/* Shoots on the approximated equation near every closed-form root. */
KG_API kg_status kg_oracle_compare(const kg_model* m, int n, int l, int D, unsigned branches,
                                   double mass, double rel_tol, const kg_scan_config* scan,
                                   kg_comparisons** out);
KG_API size_t kg_comparisons_count(const kg_comparisons* c);
KG_API kg_status kg_comparisons_get(const kg_comparisons* c, size_t i, kg_comparison* out);
KG_API void kg_comparisons_free(kg_comparisons* c);

typedef struct kg_nonrel_comparison {
  double closed;
  int has_shot;
  double shot;
  double rel_error;
  int agree;
} kg_nonrel_comparison;

KG_API kg_status kg_oracle_nonrel(const kg_model* m, int n, int l, int D, double mass,
                                  kg_nonrel_mode mode, double rel_tol, kg_nonrel_comparison* out);

typedef struct kg_approx_row {
  double alpha;
  double closed;
  double exact;
  double abs_error;
} kg_approx_row;

/* rows must hold `count` entries. */
KG_API kg_status kg_approximation_error(const kg_model* m, int n, int l, int D, int sign,
                                        double mass, const double* alphas, size_t count,
                                        kg_approx_row* rows);

/* ---- reference table ---- */

typedef struct kg_table_block {
  double alpha, q, v1, v2, mass;
} kg_table_block;

KG_API int kg_table1_block_count(void);
KG_API kg_status kg_table1_block(int block, kg_table_block* out);
/* Published energies of row n (1..5); absent entries are NaN. */
KG_API kg_status kg_table1_reference(int block, int n, double energies[4]);

#ifdef __cplusplus
}
#endif

#endif
