#include "fdsec/fdsec.h"

#include <new>
#include <string>

#include "fdsec/analytic_outage.hpp"
#include "fdsec/errors.hpp"
#include "fdsec/metrics.hpp"
#include "fdsec/optimizer.hpp"
#include "fdsec/simulator.hpp"

struct fdsec_params {
    fdsec::NetworkParams value;
};

struct fdsec_constraints {
    fdsec::OutageConstraints value;
};

namespace {

thread_local std::string g_last_error;

fdsec_status fail(fdsec_status status, const char* message) {
    g_last_error = message;
    return status;
}

template <class Fn>
fdsec_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return FDSEC_OK;
    } catch (const fdsec::DomainError& e) {
        return fail(FDSEC_ERR_DOMAIN, e.what());
    } catch (const fdsec::QuadratureError& e) {
        return fail(FDSEC_ERR_QUADRATURE, e.what());
    } catch (const fdsec::BracketError& e) {
        return fail(FDSEC_ERR_BRACKET, e.what());
    } catch (const fdsec::ConvergenceError& e) {
        return fail(FDSEC_ERR_CONVERGENCE, e.what());
    } catch (const fdsec::NumericalError& e) {
        return fail(FDSEC_ERR_NUMERICAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(FDSEC_ERR_OUT_OF_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        return fail(FDSEC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(FDSEC_ERR_INTERNAL, "unknown error");
    }
}

#define FDSEC_REQUIRE(ptr)                                                      \
    do {                                                                        \
        if ((ptr) == nullptr) {                                                 \
            return fail(FDSEC_ERR_NULL_ARGUMENT, #ptr " must not be NULL");     \
        }                                                                       \
    } while (0)

fdsec::DuplexMode to_mode(fdsec_mode m) {
    if (m == FDSEC_HD) {
        return fdsec::DuplexMode::HD;
    }
    if (m == FDSEC_FD) {
        return fdsec::DuplexMode::FD;
    }
    throw fdsec::DomainError("mode must be FDSEC_HD or FDSEC_FD");
}

fdsec_case to_case(fdsec::CaseTag tag) {
    switch (tag) {
    case fdsec::CaseTag::Infeasible: return FDSEC_CASE_INFEASIBLE;
    case fdsec::CaseTag::BoundaryOne: return FDSEC_CASE_BOUNDARY_ONE;
    case fdsec::CaseTag::InteriorRoot: return FDSEC_CASE_INTERIOR_ROOT;
    case fdsec::CaseTag::ConstrainedRoot: return FDSEC_CASE_CONSTRAINED_ROOT;
    }
    return FDSEC_CASE_INFEASIBLE;
}

fdsec::QuadratureSpec to_quad(const fdsec_quadrature* quad) {
    fdsec::QuadratureSpec spec;
    if (quad != nullptr) {
        spec.rel_tol = quad->rel_tol;
        spec.max_panels = quad->max_panels;
        spec.tail_cut.base = quad->tail_base;
        spec.tail_cut.per_order = quad->tail_per_order;
    }
    return spec;
}

fdsec::BisectOptions to_bisect(double tol) {
    fdsec::BisectOptions opts;
    if (tol > 0.0) {
        opts.xtol = tol;
        opts.ftol = tol;
    }
    return opts;
}

void store(const fdsec::OptimizationResult& r, fdsec_opt_result* out) {
    out->has_q = r.q_star.has_value() ? 1 : 0;
    out->q_star = r.q_star.value_or(0.0);
    out->objective = r.objective;
    out->case_tag = to_case(r.case_tag);
    out->residual = r.residual;
}

fdsec::SimulationConfig to_sim(const fdsec_sim_config* c) {
    fdsec::SimulationConfig cfg;
    cfg.window_radius = c->window_radius;
    cfg.eavesdropper_radius = c->eavesdropper_radius;
    cfg.trials = c->trials;
    cfg.seed = c->seed;
    cfg.mode = to_mode(c->mode);
    cfg.q = c->q;
    cfg.workers = c->workers;
    return cfg;
}

void store(const fdsec::SimulationConfig& c, fdsec_sim_config* out) {
    out->window_radius = c.window_radius;
    out->eavesdropper_radius = c.eavesdropper_radius;
    out->trials = c.trials;
    out->seed = c.seed;
    out->mode = fdsec::is_full_duplex(c.mode) ? FDSEC_FD : FDSEC_HD;
    out->q = c.q;
    out->workers = c.workers;
}

void store(const fdsec::OutageEstimate& e, fdsec_estimate* out) {
    out->p_hat = e.p_hat;
    out->std_err = e.std_err;
    out->trials = e.trials;
    out->ill_conditioned = e.ill_conditioned;
}

}  // namespace

extern "C" {

const char* fdsec_last_error(void) { return g_last_error.c_str(); }

const char* fdsec_status_string(fdsec_status status) {
    switch (status) {
    case FDSEC_OK: return "ok";
    case FDSEC_ERR_DOMAIN: return "domain error";
    case FDSEC_ERR_QUADRATURE: return "quadrature error";
    case FDSEC_ERR_BRACKET: return "bracket error";
    case FDSEC_ERR_CONVERGENCE: return "convergence error";
    case FDSEC_ERR_NUMERICAL: return "numerical error";
    case FDSEC_ERR_NULL_ARGUMENT: return "null argument";
    case FDSEC_ERR_OUT_OF_MEMORY: return "out of memory";
    case FDSEC_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* fdsec_case_string(fdsec_case tag) {
    switch (tag) {
    case FDSEC_CASE_INFEASIBLE: return "infeasible";
    case FDSEC_CASE_BOUNDARY_ONE: return "boundary_one";
    case FDSEC_CASE_INTERIOR_ROOT: return "interior_root";
    case FDSEC_CASE_CONSTRAINED_ROOT: return "constrained_root";
    }
    return "unknown";
}

void fdsec_network_desc_default(fdsec_network_desc* desc) {
    if (desc == nullptr) {
        return;
    }
    const fdsec::NetworkInputs in;
    *desc = {in.alpha, in.lambda_l, in.lambda_e, in.n_e, in.r_o, in.p_t, in.p_j, in.eta, in.p_c};
}

void fdsec_quadrature_default(fdsec_quadrature* quad) {
    if (quad == nullptr) {
        return;
    }
    const fdsec::QuadratureSpec spec;
    *quad = {spec.rel_tol, spec.max_panels, spec.tail_cut.base, spec.tail_cut.per_order};
}

void fdsec_sim_config_default(fdsec_sim_config* cfg) {
    if (cfg == nullptr) {
        return;
    }
    store(fdsec::SimulationConfig{}, cfg);
}

fdsec_status fdsec_params_create(const fdsec_network_desc* desc, fdsec_params** out) {
    FDSEC_REQUIRE(desc);
    FDSEC_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        fdsec::NetworkInputs in;
        in.alpha = desc->alpha;
        in.lambda_l = desc->lambda_l;
        in.lambda_e = desc->lambda_e;
        in.n_e = desc->n_e;
        in.r_o = desc->r_o;
        in.p_t = desc->p_t;
        in.p_j = desc->p_j;
        in.eta = desc->eta;
        in.p_c = desc->p_c;
        *out = new fdsec_params{fdsec::build_network_params(in)};
    });
}

void fdsec_params_destroy(fdsec_params* params) { delete params; }

fdsec_status fdsec_params_describe(const fdsec_params* params, fdsec_network_desc* desc,
                                   fdsec_derived* derived) {
    FDSEC_REQUIRE(params);
    const auto& p = params->value;
    if (desc != nullptr) {
        *desc = {p.alpha(), p.lambda_l(), p.lambda_e(), p.n_e(), p.r_o(),
                 p.p_t(),   p.p_j(),      p.eta(),      p.p_c()};
    }
    if (derived != nullptr) {
        *derived = {p.delta(), p.kappa(), p.rho(), p.rho_c()};
    }
    return FDSEC_OK;
}

fdsec_status fdsec_constraints_create(const fdsec_params* params, double sigma, double epsilon,
                                      fdsec_constraints** out) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        *out = new fdsec_constraints{fdsec::build_outage_constraints(params->value, sigma, epsilon)};
    });
}

void fdsec_constraints_destroy(fdsec_constraints* constraints) { delete constraints; }

fdsec_status fdsec_constraints_describe(const fdsec_constraints* constraints,
                                        fdsec_constraints_info* info) {
    FDSEC_REQUIRE(constraints);
    FDSEC_REQUIRE(info);
    const auto& c = constraints->value;
    *info = {c.sigma,  c.epsilon, c.sigma_o, c.epsilon_o, c.delta_cap, c.q_m ? 1 : 0,
             c.q_m.value_or(0.0), c.feasible ? 1 : 0};
    return FDSEC_OK;
}

fdsec_status fdsec_rate_thresholds(double r_t, double r_s, double* tau_t, double* tau_e) {
    FDSEC_REQUIRE(tau_t);
    FDSEC_REQUIRE(tau_e);
    return guarded([&] {
        const auto t = fdsec::build_rate_thresholds(r_t, r_s);
        *tau_t = t.tau_t;
        *tau_e = t.tau_e;
    });
}

fdsec_status fdsec_pco_exact(const fdsec_params* params, fdsec_mode mode, double q, double tau_t,
                             const fdsec_quadrature* quad, double* out) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(out);
    return guarded([&] { *out = fdsec::pco_exact(params->value, to_mode(mode), q, tau_t, to_quad(quad)); });
}

fdsec_status fdsec_pco_bounds(const fdsec_params* params, fdsec_mode mode, double q, double tau_t,
                              double* upper, double* lower) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(upper);
    FDSEC_REQUIRE(lower);
    return guarded([&] {
        const auto b = fdsec::pco_bounds(params->value, to_mode(mode), q, tau_t);
        *upper = b.upper;
        *lower = b.lower;
    });
}

fdsec_status fdsec_pso_upper(const fdsec_params* params, fdsec_mode mode, double q, double tau_e,
                             const fdsec_quadrature* quad, double* out) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(out);
    return guarded([&] { *out = fdsec::pso_upper(params->value, to_mode(mode), q, tau_e, to_quad(quad)); });
}

fdsec_status fdsec_pso_hd_closed(const fdsec_params* params, double q, double tau_e, double* out) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(out);
    return guarded([&] { *out = fdsec::pso_hd_closed(params->value, q, tau_e); });
}

fdsec_status fdsec_pso_fd_approx(const fdsec_params* params, double q, double tau_e, double* out) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(out);
    return guarded([&] { *out = fdsec::pso_fd_approx(params->value, q, tau_e); });
}

fdsec_status fdsec_pso_large_ne(const fdsec_params* params, double q, double tau_e, double* out) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(out);
    return guarded([&] { *out = fdsec::pso_large_ne(params->value, q, tau_e); });
}

fdsec_status fdsec_asln(const fdsec_params* params, double q, double tau_t, double tau_e, double* out) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(out);
    return guarded([&] { *out = fdsec::asln(params->value, q, tau_t, tau_e); });
}

fdsec_status fdsec_asln_aux(const fdsec_params* params, double tau_t, double tau_e, double q,
                            double* f, double* k) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(f);
    FDSEC_REQUIRE(k);
    return guarded([&] {
        const auto e = fdsec::asln_aux(params->value, tau_t, tau_e, q);
        *f = e.f;
        *k = e.k;
    });
}

fdsec_status fdsec_nst_thresholds(const fdsec_params* params, const fdsec_constraints* constraints,
                                  double q, double* tau_t_o, double* tau_e_o) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(constraints);
    FDSEC_REQUIRE(tau_t_o);
    FDSEC_REQUIRE(tau_e_o);
    return guarded([&] {
        const auto t = fdsec::nst_thresholds(params->value, constraints->value, q);
        *tau_t_o = t.tau_t_o;
        *tau_e_o = t.tau_e_o;
    });
}

fdsec_status fdsec_nst(const fdsec_params* params, const fdsec_constraints* constraints, double q,
                       double* out) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(constraints);
    FDSEC_REQUIRE(out);
    return guarded([&] { *out = fdsec::nst(params->value, constraints->value, q); });
}

fdsec_status fdsec_nst_aux(const fdsec_params* params, const fdsec_constraints* constraints, double q,
                           double* w, double* phi) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(constraints);
    FDSEC_REQUIRE(w);
    FDSEC_REQUIRE(phi);
    return guarded([&] {
        const auto e = fdsec::nst_aux(params->value, constraints->value, q);
        *w = e.w;
        *phi = e.phi;
    });
}

fdsec_status fdsec_nsee(const fdsec_params* params, const fdsec_constraints* constraints, double q,
                        double* out) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(constraints);
    FDSEC_REQUIRE(out);
    return guarded([&] { *out = fdsec::nsee(params->value, constraints->value, q); });
}

fdsec_status fdsec_nsee_aux(const fdsec_params* params, const fdsec_constraints* constraints,
                            double q, double* j, double* q_fn, double* w_cap) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(constraints);
    FDSEC_REQUIRE(j);
    FDSEC_REQUIRE(q_fn);
    FDSEC_REQUIRE(w_cap);
    return guarded([&] {
        const auto e = fdsec::nsee_aux(params->value, constraints->value, q);
        *j = e.j;
        *q_fn = e.q_fn;
        *w_cap = e.w_cap;
    });
}

fdsec_status fdsec_optimize_asln(const fdsec_params* params, double tau_t, double tau_e, double tol,
                                 fdsec_opt_result* out) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(out);
    return guarded([&] { store(fdsec::optimize_asln(params->value, tau_t, tau_e, to_bisect(tol)), out); });
}

fdsec_status fdsec_asln_q_closed_sic(const fdsec_params* params, double tau_t, double tau_e,
                                     double* out) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(out);
    return guarded([&] { *out = fdsec::asln_q_closed_sic(params->value, tau_t, tau_e); });
}

fdsec_status fdsec_optimize_nst(const fdsec_params* params, const fdsec_constraints* constraints,
                                double tol, fdsec_opt_result* out) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(constraints);
    FDSEC_REQUIRE(out);
    return guarded([&] {
        store(fdsec::optimize_nst(params->value, constraints->value, to_bisect(tol)), out);
    });
}

fdsec_status fdsec_nst_q_dense_limit(const fdsec_params* params, const fdsec_constraints* constraints,
                                     double* out) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(constraints);
    FDSEC_REQUIRE(out);
    return guarded([&] { *out = fdsec::nst_q_dense_limit(params->value, constraints->value); });
}

fdsec_status fdsec_optimize_nsee(const fdsec_params* params, const fdsec_constraints* constraints,
                                 double tol, fdsec_opt_result* out) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(constraints);
    FDSEC_REQUIRE(out);
    return guarded([&] {
        store(fdsec::optimize_nsee(params->value, constraints->value, to_bisect(tol)), out);
    });
}

fdsec_status fdsec_optimize_nsee_constrained(const fdsec_params* params,
                                             const fdsec_constraints* constraints, double omega_min,
                                             double tol, fdsec_opt_result* out) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(constraints);
    FDSEC_REQUIRE(out);
    return guarded([&] {
        store(fdsec::optimize_nsee_constrained(params->value, constraints->value, omega_min,
                                               to_bisect(tol)),
              out);
    });
}

fdsec_status fdsec_sim_config_resolve(const fdsec_params* params, const fdsec_sim_config* cfg,
                                      const double* tau_e, fdsec_sim_config* out) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(cfg);
    FDSEC_REQUIRE(out);
    return guarded([&] {
        std::optional<double> te;
        if (tau_e != nullptr) {
            te = *tau_e;
        }
        store(fdsec::resolve(params->value, to_sim(cfg), te), out);
    });
}

fdsec_status fdsec_estimate_pco(const fdsec_params* params, const fdsec_sim_config* cfg, double tau_t,
                                fdsec_estimate* out) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(cfg);
    FDSEC_REQUIRE(out);
    return guarded([&] { store(fdsec::estimate_pco(params->value, to_sim(cfg), tau_t), out); });
}

fdsec_status fdsec_estimate_pso(const fdsec_params* params, const fdsec_sim_config* cfg, double tau_e,
                                fdsec_estimate* out) {
    FDSEC_REQUIRE(params);
    FDSEC_REQUIRE(cfg);
    FDSEC_REQUIRE(out);
    return guarded([&] { store(fdsec::estimate_pso(params->value, to_sim(cfg), tau_e), out); });
}

}  // extern "C"
