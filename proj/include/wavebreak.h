/* C interface to the wave-breaking threshold library.
 *
 * All functions return wb_status unless documented otherwise; on any status
 * other than WB_OK the thread-local message wb_last_error() describes the
 * failure. Out-parameters are untouched on failure. Handles returned through
 * wb_*_create/run functions are owned by the caller and released with the
 * matching wb_*_free.
 */
#ifndef WAVEBREAK_H
#define WAVEBREAK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wb_status {
    WB_OK = 0,
    WB_ERR_USAGE = 1,     /* invalid argument or domain violation */
    WB_ERR_CONFIG = 2,    /* unsatisfiable or malformed configuration */
    WB_ERR_NUMERICAL = 3, /* computation failed to converge or lost resolution */
} wb_status;

const char* wb_version(void);

/* Message for the most recent failure on this thread; empty string if none. */
const char* wb_last_error(void);

/* ---- closed-form threshold quantities ---- */

typedef struct wb_verdict {
    double g_value;
    int in_omega;
    int seliger_holds;
    double time_bound; /* +inf encoded as HUGE_VAL when not breaking */
} wb_verdict;

wb_status wb_eval_w(double z, double* out);
wb_status wb_eval_s(double z, double* out);
wb_status wb_eval_g(double m1, double m2, double* out);
wb_status wb_first_integral_residual(double m1, double m2, double* out);
wb_status wb_first_integral_level(double m1, double m2, double* out);
wb_status wb_separatrix_y(double x, double* out);
wb_status wb_breaking_time_bound(double m1, double m2, double k0, double* out);
wb_status wb_classify(double m1, double m2, wb_verdict* out);

/* ---- auxiliary-system integration ---- */

typedef enum wb_outcome {
    WB_OUTCOME_BLOWUP = 0,
    WB_OUTCOME_CONVERGED_TO_ORIGIN = 1,
    WB_OUTCOME_DOMAIN_EXIT = 2,
    WB_OUTCOME_HORIZON_REACHED = 3,
} wb_outcome;

typedef struct wb_integration_options {
    double rel_tol;
    double abs_tol;
    double horizon;
    double sample_dt;  /* > 0: uniform recording; 0: every accepted step */
    int record_all;    /* 0: keep only the final sample */
    double blowup_threshold;
    double origin_radius;
    double max_step;
} wb_integration_options;

void wb_integration_options_default(wb_integration_options* opts);

typedef enum wb_slack_kind {
    WB_SLACK_ZERO = 0,
    WB_SLACK_CONSTANT = 1,
    WB_SLACK_PIECEWISE_RANDOM = 2,
    WB_SLACK_SINUSOID = 3,
} wb_slack_kind;

typedef struct wb_slack_spec {
    wb_slack_kind kind;
    double a, b;              /* constant values */
    uint64_t seed;            /* piecewise random */
    int pieces;
    double span;
    double max_value;
    double amp_a, amp_b, omega, phase; /* clipped sinusoid */
} wb_slack_spec;

void wb_slack_spec_zero(wb_slack_spec* spec);

typedef struct wb_trajectory wb_trajectory;

wb_status wb_integrate_equality(double m1, double m2, const wb_integration_options* opts,
                                wb_trajectory** out);
wb_status wb_integrate_inequality(double m1, double m2, const wb_slack_spec* slack,
                                  const wb_integration_options* opts, wb_trajectory** out);

size_t wb_trajectory_size(const wb_trajectory* t);
wb_status wb_trajectory_sample(const wb_trajectory* t, size_t i, double* time, double* m1,
                               double* m2);
wb_outcome wb_trajectory_outcome(const wb_trajectory* t);
/* WB_ERR_USAGE unless the trajectory ended in blow-up. */
wb_status wb_trajectory_blowup_time(const wb_trajectory* t, double* out);
void wb_trajectory_free(wb_trajectory* t);

/* ---- equilibria ---- */

typedef struct wb_equilibrium {
    double x, y;
    double jacobian[4]; /* row-major */
    double eig_re[2], eig_im[2];
    int is_saddle;     /* real eigenvalues of opposite sign */
    int is_degenerate; /* both eigenvalues zero */
} wb_equilibrium;

/* Fills reports for the two equilibria: saddle first, then the origin. */
wb_status wb_equilibria(wb_equilibrium out[2]);

/* ---- stable-manifold trace ---- */

typedef struct wb_manifold wb_manifold;

wb_status wb_trace_manifold(double arc_length, double step, wb_manifold** out);
/* branch: 0 = lower (toward the x-intercept), 1 = upper. */
size_t wb_manifold_size(const wb_manifold* m, int branch);
wb_status wb_manifold_point(const wb_manifold* m, int branch, size_t i, double* x, double* y);
void wb_manifold_free(wb_manifold* m);

/* ---- basin classification grid ---- */

typedef struct wb_gridmap wb_gridmap;

wb_status wb_classify_grid(double x0, double x1, double y0, double y1, int nx, int ny,
                           const wb_integration_options* opts, int threads, wb_gridmap** out);
wb_status wb_gridmap_cell(const wb_gridmap* g, int ix, int iy, double* g_value,
                          wb_outcome* outcome);
/* Fraction of off-band cells whose outcome matches sign(G), the number of
 * cells checked, and the number inside the |G| <= band exclusion zone. */
wb_status wb_gridmap_agreement(const wb_gridmap* g, double* fraction, int* checked, int* in_band);
void wb_gridmap_free(wb_gridmap* g);

/* ---- periodic pseudo-spectral solver ---- */

typedef enum wb_kernel_type {
    WB_KERNEL_GAUSSIAN = 0,
    WB_KERNEL_SECH_SQUARED = 1,
} wb_kernel_type;

typedef struct wb_kernel_spec {
    wb_kernel_type type;
    double param; /* sigma or lambda */
} wb_kernel_spec;

typedef struct wb_bump {
    double amplitude, center, width;
} wb_bump;

typedef struct wb_profile_spec {
    const wb_bump* bumps;
    size_t n_bumps;
    double balance_width;
} wb_profile_spec;

typedef struct wb_solver_options {
    int n;
    double length;
    double cfl;
    double fixed_dt;
    double horizon;
    double sample_dt;
    double m1_break_threshold;
    double tail_guard;
} wb_solver_options;

void wb_solver_options_default(wb_solver_options* opts);

typedef struct wb_breaking_report wb_breaking_report;

wb_status wb_pde_run(const wb_profile_spec* profile, const wb_kernel_spec* kernel,
                     const wb_solver_options* opts, wb_breaking_report** out);

wb_status wb_report_initial_extrema(const wb_breaking_report* r, double* m1, double* m2);
wb_status wb_report_verdict(const wb_breaking_report* r, wb_verdict* out);
/* 1 when breaking was detected, 0 when the horizon was reached. */
int wb_report_breaking_detected(const wb_breaking_report* r);
wb_status wb_report_breaking_time(const wb_breaking_report* r, double* out);
/* WB_ERR_USAGE unless the report is in the breaking region with an observed
 * breaking time; *out = 1 iff t_break <= bound * 1.05. */
wb_status wb_report_bound_satisfied(const wb_breaking_report* r, int* out);
size_t wb_report_series_size(const wb_breaking_report* r);
wb_status wb_report_series_sample(const wb_breaking_report* r, size_t i, double* t, double* m1,
                                  double* m2, double* u_min, double* u_max, double* tail_fraction);
void wb_report_free(wb_breaking_report* r);

/* ---- scenarios ---- */

typedef struct wb_scenario wb_scenario;

typedef struct wb_run_overrides {
    int has_seed;
    uint64_t seed;
    int threads;
    int has_tol;
    double tol;
} wb_run_overrides;

wb_status wb_scenario_load(const char* path, wb_scenario** out);
wb_status wb_scenario_parse(const char* json_text, wb_scenario** out);
/* Canonical name of the scenario kind ("classify", "ode_sweep", ...). */
const char* wb_scenario_kind(const wb_scenario* s);
/* Runs the scenario, writing artifacts under out_dir. On WB_OK, *summary
 * (if non-NULL) receives a one-line description owned by the scenario handle
 * and valid until the next run or free. */
wb_status wb_scenario_run(wb_scenario* s, const char* out_dir, const wb_run_overrides* overrides,
                          const char** summary);
void wb_scenario_free(wb_scenario* s);

/* Figure emission: fig 1 = phase portrait, fig 2 = region map. */
wb_status wb_emit_figure(int fig, const char* out_dir, int threads);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WAVEBREAK_H */
