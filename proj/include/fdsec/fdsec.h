/* C interface to the fdsec library.
 *
 * Every function returns an fdsec_status. On failure the message of the most recent
 * error on the calling thread is available from fdsec_last_error(). Handles are
 * opaque, immutable after creation and may be shared between threads.
 */
#ifndef FDSEC_H
#define FDSEC_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(FDSEC_BUILDING)
#    define FDSEC_API __declspec(dllexport)
#  else
#    define FDSEC_API __declspec(dllimport)
#  endif
#else
#  define FDSEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fdsec_status {
    FDSEC_OK = 0,
    FDSEC_ERR_DOMAIN = 1,
    FDSEC_ERR_QUADRATURE = 2,
    FDSEC_ERR_BRACKET = 3,
    FDSEC_ERR_CONVERGENCE = 4,
    FDSEC_ERR_NUMERICAL = 5,
    FDSEC_ERR_NULL_ARGUMENT = 6,
    FDSEC_ERR_OUT_OF_MEMORY = 7,
    FDSEC_ERR_INTERNAL = 8
} fdsec_status;

typedef enum fdsec_mode { FDSEC_HD = 0, FDSEC_FD = 1 } fdsec_mode;

typedef enum fdsec_case {
    FDSEC_CASE_INFEASIBLE = 0,
    FDSEC_CASE_BOUNDARY_ONE = 1,
    FDSEC_CASE_INTERIOR_ROOT = 2,
    FDSEC_CASE_CONSTRAINED_ROOT = 3
} fdsec_case;

typedef struct fdsec_params fdsec_params;
typedef struct fdsec_constraints fdsec_constraints;

typedef struct fdsec_network_desc {
    double alpha;
    double lambda_l;
    double lambda_e;
    int n_e;
    double r_o;
    double p_t;
    double p_j;
    double eta;
    double p_c;
} fdsec_network_desc;

typedef struct fdsec_derived {
    double delta;
    double kappa;
    double rho;
    double rho_c;
} fdsec_derived;

typedef struct fdsec_constraints_info {
    double sigma;
    double epsilon;
    double sigma_o;
    double epsilon_o;
    double delta_cap;
    int has_q_m;
    double q_m;
    int feasible;
} fdsec_constraints_info;

typedef struct fdsec_quadrature {
    double rel_tol;
    int max_panels;
    double tail_base;
    double tail_per_order;
} fdsec_quadrature;

typedef struct fdsec_opt_result {
    int has_q;
    double q_star;
    double objective;
    fdsec_case case_tag;
    double residual;
} fdsec_opt_result;

typedef struct fdsec_sim_config {
    double window_radius;       /* 0 = automatic */
    double eavesdropper_radius; /* 0 = automatic */
    uint64_t trials;
    uint64_t seed;
    fdsec_mode mode;
    double q;
    unsigned workers;           /* 0 = hardware concurrency */
} fdsec_sim_config;

typedef struct fdsec_estimate {
    double p_hat;
    double std_err;
    uint64_t trials;
    uint64_t ill_conditioned;
} fdsec_estimate;

FDSEC_API const char* fdsec_last_error(void);
FDSEC_API const char* fdsec_status_string(fdsec_status status);
FDSEC_API const char* fdsec_case_string(fdsec_case tag);

FDSEC_API void fdsec_network_desc_default(fdsec_network_desc* desc);
FDSEC_API void fdsec_quadrature_default(fdsec_quadrature* quad);
FDSEC_API void fdsec_sim_config_default(fdsec_sim_config* cfg);

FDSEC_API fdsec_status fdsec_params_create(const fdsec_network_desc* desc, fdsec_params** out);
FDSEC_API void fdsec_params_destroy(fdsec_params* params);
FDSEC_API fdsec_status fdsec_params_describe(const fdsec_params* params, fdsec_network_desc* desc,
                                             fdsec_derived* derived);

FDSEC_API fdsec_status fdsec_constraints_create(const fdsec_params* params, double sigma,
                                                double epsilon, fdsec_constraints** out);
FDSEC_API void fdsec_constraints_destroy(fdsec_constraints* constraints);
FDSEC_API fdsec_status fdsec_constraints_describe(const fdsec_constraints* constraints,
                                                  fdsec_constraints_info* info);

FDSEC_API fdsec_status fdsec_rate_thresholds(double r_t, double r_s, double* tau_t, double* tau_e);

/* Outage probabilities. quad may be NULL for the defaults. */
FDSEC_API fdsec_status fdsec_pco_exact(const fdsec_params* params, fdsec_mode mode, double q,
                                       double tau_t, const fdsec_quadrature* quad, double* out);
FDSEC_API fdsec_status fdsec_pco_bounds(const fdsec_params* params, fdsec_mode mode, double q,
                                        double tau_t, double* upper, double* lower);
FDSEC_API fdsec_status fdsec_pso_upper(const fdsec_params* params, fdsec_mode mode, double q,
                                       double tau_e, const fdsec_quadrature* quad, double* out);
FDSEC_API fdsec_status fdsec_pso_hd_closed(const fdsec_params* params, double q, double tau_e,
                                           double* out);
FDSEC_API fdsec_status fdsec_pso_fd_approx(const fdsec_params* params, double q, double tau_e,
                                           double* out);
FDSEC_API fdsec_status fdsec_pso_large_ne(const fdsec_params* params, double q, double tau_e,
                                          double* out);

/* Objectives */
FDSEC_API fdsec_status fdsec_asln(const fdsec_params* params, double q, double tau_t, double tau_e,
                                  double* out);
FDSEC_API fdsec_status fdsec_asln_aux(const fdsec_params* params, double tau_t, double tau_e,
                                      double q, double* f, double* k);
FDSEC_API fdsec_status fdsec_nst_thresholds(const fdsec_params* params,
                                            const fdsec_constraints* constraints, double q,
                                            double* tau_t_o, double* tau_e_o);
FDSEC_API fdsec_status fdsec_nst(const fdsec_params* params, const fdsec_constraints* constraints,
                                 double q, double* out);
FDSEC_API fdsec_status fdsec_nst_aux(const fdsec_params* params, const fdsec_constraints* constraints,
                                     double q, double* w, double* phi);
FDSEC_API fdsec_status fdsec_nsee(const fdsec_params* params, const fdsec_constraints* constraints,
                                  double q, double* out);
FDSEC_API fdsec_status fdsec_nsee_aux(const fdsec_params* params,
                                      const fdsec_constraints* constraints, double q, double* j,
                                      double* q_fn, double* w_cap);

/* Optimizers. tol <= 0 selects the default bisection tolerance (1e-10). */
FDSEC_API fdsec_status fdsec_optimize_asln(const fdsec_params* params, double tau_t, double tau_e,
                                           double tol, fdsec_opt_result* out);
FDSEC_API fdsec_status fdsec_asln_q_closed_sic(const fdsec_params* params, double tau_t,
                                               double tau_e, double* out);
FDSEC_API fdsec_status fdsec_optimize_nst(const fdsec_params* params,
                                          const fdsec_constraints* constraints, double tol,
                                          fdsec_opt_result* out);
FDSEC_API fdsec_status fdsec_nst_q_dense_limit(const fdsec_params* params,
                                               const fdsec_constraints* constraints, double* out);
FDSEC_API fdsec_status fdsec_optimize_nsee(const fdsec_params* params,
                                           const fdsec_constraints* constraints, double tol,
                                           fdsec_opt_result* out);
FDSEC_API fdsec_status fdsec_optimize_nsee_constrained(const fdsec_params* params,
                                                       const fdsec_constraints* constraints,
                                                       double omega_min, double tol,
                                                       fdsec_opt_result* out);

/* Monte Carlo. tau_e may be NULL when no eavesdroppers are simulated. */
FDSEC_API fdsec_status fdsec_sim_config_resolve(const fdsec_params* params,
                                                const fdsec_sim_config* cfg, const double* tau_e,
                                                fdsec_sim_config* out);
FDSEC_API fdsec_status fdsec_estimate_pco(const fdsec_params* params, const fdsec_sim_config* cfg,
                                          double tau_t, fdsec_estimate* out);
FDSEC_API fdsec_status fdsec_estimate_pso(const fdsec_params* params, const fdsec_sim_config* cfg,
                                          double tau_e, fdsec_estimate* out);

#ifdef __cplusplus
}
#endif

#endif /* FDSEC_H */
