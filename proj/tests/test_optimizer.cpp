#include <doctest.h>

#include <cmath>
#include <random>

#include "fdsec/errors.hpp"
#include "fdsec/metrics.hpp"
#include "fdsec/optimizer.hpp"
#include "support.hpp"

using namespace fdsec;
using fdsec::testing::network;
using fdsec::testing::rel_close;

TEST_CASE("bisect") {
    const auto a = bisect([](double x) { return x - 0.5; }, 0.0, 1.0);
    CHECK(std::abs(a.root - 0.5) <= 1e-10);
    const auto b = bisect([](double x) { return x * x - 2.0; }, 1.0, 2.0);
    CHECK(std::abs(b.root - std::sqrt(2.0)) <= 1e-10);
    CHECK(b.residual <= 1e-9);
    CHECK(b.iterations > 0);
    // Root at an endpoint is accepted.
    CHECK(bisect([](double x) { return x - 1.0; }, 0.0, 1.0).root == 1.0);

    CHECK_THROWS_AS(bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0), BracketError);
    BisectOptions tight;
    tight.max_iter = 3;
    CHECK_THROWS_AS(bisect([](double x) { return x - 0.3; }, 0.0, 1.0, tight), ConvergenceError);
    // Repeatable to the bit.
    auto f = [](double x) { return std::cos(x) - x; };
    CHECK(bisect(f, 0.0, 1.0).root == bisect(f, 0.0, 1.0).root);
}

TEST_CASE("grid oracle") {
    const auto flat = grid_oracle([](double) { return 3.0; }, 0.2, 1.0, 0.1);
    CHECK(flat.q == 0.2);
    CHECK(flat.value == 3.0);
    const auto peak = grid_oracle([](double q) { return -(q - 0.37) * (q - 0.37); }, 0.0, 1.0, 1e-4);
    CHECK(std::abs(peak.q - 0.37) < 1e-4);
    // Upper end is part of the grid.
    CHECK(grid_oracle([](double q) { return q; }, 0.0, 1.0, 0.3).q == 1.0);
}

TEST_CASE("ASLN with perfect cancellation") {
    const auto p = network(4.0, 1e-2, 1e-3, 6, 1.0, 1.0);
    const double closed = asln_q_closed_sic(p, 2.0, 1.0);
    CHECK(rel_close(closed, 2.3395014187499076, 1e-12));
    const auto r = optimize_asln(p, 2.0, 1.0);
    CHECK(r.case_tag == CaseTag::BoundaryOne);
    CHECK(*r.q_star == 1.0);
    CHECK(grid_oracle([&](double q) { return asln(p, q, 2.0, 1.0); }, 1e-4, 1.0, 1e-4).q == doctest::Approx(1.0));

    CHECK(rel_close(asln_q_closed_sic(network(4.0, 1e-2, 4e-3, 6, 1.0, 1.0), 2.0, 1.0), 2.0 * closed, 1e-12));
    CHECK(rel_close(asln_q_closed_sic(network(4.0, 2e-2, 1e-3, 6, 1.0, 1.0), 2.0, 1.0), 0.5 * closed, 1e-12));
    CHECK_THROWS_AS(asln_q_closed_sic(network(4.0, 1e-2, 1e-3, 6, 1.0, 1.0, 0.1), 2.0, 1.0), DomainError);

    // Interior case: the root of K matches sqrt(C/B).
    const auto dense = network(4.0, 0.1, 1e-3, 6, 1.0, 1.0);
    const auto d = optimize_asln(dense, 2.0, 1.0);
    REQUIRE(d.case_tag == CaseTag::InteriorRoot);
    CHECK(std::abs(*d.q_star - asln_q_closed_sic(dense, 2.0, 1.0)) < 1e-6);
}

TEST_CASE("ASLN interior root against a 30-digit reference") {
    const auto p = network(4.0, 0.1, 1e-3, 6, 1.0, 1.0, 0.1);
    const auto r = optimize_asln(p, 2.0, 1.0);
    REQUIRE(r.case_tag == CaseTag::InteriorRoot);
    CHECK(std::abs(*r.q_star - 0.20760558074538281) < 1e-9);
    CHECK(r.residual <= 1e-9);
    CHECK(r.objective == asln(p, *r.q_star, 2.0, 1.0));
}

TEST_CASE("ASLN boundary when eavesdroppers dominate") {
    const auto p = network(4.0, 1e-3, 1e-2, 8, 1.0, 1.0, 0.1);
    const auto aux = asln_constants(p, 2.0, 1.0);
    REQUIRE(aux.c > 1.0 / aux.a + aux.b - 1.0);
    const auto r = optimize_asln(p, 2.0, 1.0);
    CHECK(r.case_tag == CaseTag::BoundaryOne);
    CHECK(*r.q_star == 1.0);
    CHECK_THROWS_AS(optimize_asln(network(4.0, 1e-3, 0.0, 8, 1.0, 1.0), 2.0, 1.0), DomainError);
}

TEST_CASE("NST cases") {
    SUBCASE("infeasible") {
        const auto p = network(4.0, 1e-3, 1e-4, 4, 2.0, 2.0);
        const auto c = build_outage_constraints(p, 0.1, 0.05);
        const auto r = optimize_nst(p, c);
        CHECK(r.case_tag == CaseTag::Infeasible);
        CHECK(!r.q_star);
        CHECK(r.objective == 0.0);
        CHECK(eavesdropper_load(p, c) >= nst_constants(p, c).x_thresh);
    }
    SUBCASE("boundary at the sparse instance") {
        const auto p = network(4.0, 1e-3, 1e-4, 4, 1.0, 1.0);
        const auto c = build_outage_constraints(p, 0.3, 0.02);
        const auto r = optimize_nst(p, c);
        CHECK(r.case_tag == CaseTag::BoundaryOne);
        CHECK(*r.q_star == 1.0);
        CHECK(nst_log_ratio_derivative(p, c, 1.0) == doctest::Approx(0.98825549124612427).epsilon(1e-8));
        const auto g = grid_oracle([&](double q) { return nst(p, c, q); }, *c.q_m, 1.0, 1e-4);
        CHECK(std::abs(g.q - 1.0) < 1e-3);
    }
    SUBCASE("interior against a 30-digit reference") {
        const auto p = network(4.0, 3e-2, 1e-4, 4, 1.0, 1.0);
        const auto c = build_outage_constraints(p, 0.3, 0.02);
        const auto r = optimize_nst(p, c);
        REQUIRE(r.case_tag == CaseTag::InteriorRoot);
        CHECK(std::abs(*r.q_star - 0.68552908168389496) < 1e-9);
        CHECK(r.residual <= 1e-9);
        const auto g = grid_oracle([&](double q) { return nst(p, c, q); }, *c.q_m, 1.0, 1e-4);
        CHECK(std::abs(g.q - *r.q_star) < 1e-3);
    }
}

TEST_CASE("NST dense limit") {
    const auto p = network(4.0, 1e-3, 1e-4, 4, 1.0, 1.0);
    const auto c = build_outage_constraints(p, 0.3, 0.02);
    const double q = nst_q_dense_limit(p, c);
    CHECK(rel_close(q, 0.45378779651135002, 1e-12));
    CHECK(std::abs(q - 0.4537) < 1e-4);
    // Independent of lambda_l.
    const auto far = network(4.0, 5.0, 1e-4, 4, 1.0, 1.0);
    CHECK(nst_q_dense_limit(far, build_outage_constraints(far, 0.3, 0.02)) == q);
    const auto d = network(4.0, 10.0, 1e-4, 4, 1.0, 1.0);
    const auto cd = build_outage_constraints(d, 0.3, 0.02);
    CHECK(std::abs(*optimize_nst(d, cd).q_star - q) < 1e-2);

    const auto none = network(4.0, 1e-3, 1e-1, 8, 1.0, 1.0);
    CHECK_THROWS_AS(nst_q_dense_limit(none, build_outage_constraints(none, 0.1, 0.01)), DomainError);
}

TEST_CASE("NST fraction scales as rho^-delta") {
    // At large density the optimum depends on rho^delta q only.
    const double base = [] {
        const auto p = network(4.0, 10.0, 1e-4, 4, 1.0, 1.0);
        return *optimize_nst(p, build_outage_constraints(p, 0.3, 0.02)).q_star;
    }();
    for (double rho : {1.5, 2.0, 3.0}) {
        const auto p = network(4.0, 10.0, 1e-4, 4, 1.0, rho);
        const auto r = optimize_nst(p, build_outage_constraints(p, 0.3, 0.02));
        REQUIRE(r.q_star);
        CAPTURE(rho);
        CHECK(rel_close(*r.q_star * p.rho_delta(), base, 1e-3));
    }
}

TEST_CASE("NSEE interior and boundary") {
    const auto p = network(4.0, 1e-3, 1e-4, 4, 1.0, 10.0);
    const auto c = build_outage_constraints(p, 0.3, 0.02);
    const auto r = optimize_nsee(p, c);
    REQUIRE(r.case_tag == CaseTag::InteriorRoot);
    CHECK(std::abs(*r.q_star - 0.26280240079496711) < 1e-9);
    CHECK(r.residual <= 1e-9);
    CHECK(!nsee_boundary_by_w(p, c));
    CHECK(!nsee_boundary_by_q1(p, c));

    // Weak jamming keeps the optimum at 1.
    const auto weak = network(4.0, 1e-3, 1e-4, 4, 1.0, 1.0);
    const auto cw = build_outage_constraints(weak, 0.3, 0.02);
    const auto rw = optimize_nsee(weak, cw);
    CHECK(rw.case_tag == CaseTag::BoundaryOne);
    CHECK(nsee_boundary_by_w(weak, cw));
    CHECK(nsee_boundary_by_q1(weak, cw));

    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const auto x = network(testing::uniform(rng, 2.5, 5.0), testing::log_uniform(rng, 1e-5, 1e-1),
                               testing::log_uniform(rng, 1e-5, 1e-3), 1 + static_cast<int>(rng() % 6),
                               testing::uniform(rng, 0.3, 2.0), testing::log_uniform(rng, 0.1, 30.0), 0.0,
                               testing::log_uniform(rng, 0.01, 10.0));
        const auto cx = build_outage_constraints(x, 0.3, 0.03);
        if (cx.feasible) {
            CHECK(nsee_boundary_by_w(x, cx) == nsee_boundary_by_q1(x, cx));
        }
    }
}

TEST_CASE("constrained NSEE") {
    const auto p = network(4.0, 1e-3, 1e-4, 4, 1.0, 10.0);
    const auto c = build_outage_constraints(p, 0.3, 0.02);
    const auto free = optimize_nsee(p, c);
    const auto zero = optimize_nsee_constrained(p, c, 0.0);
    CHECK(zero.case_tag == free.case_tag);
    CHECK(*zero.q_star == *free.q_star);
    CHECK(zero.objective == free.objective);

    const auto st = optimize_nst(p, c);
    const auto above = optimize_nsee_constrained(p, c, st.objective * 1.01);
    CHECK(above.case_tag == CaseTag::Infeasible);
    CHECK(above.objective == 0.0);

    // Just below the best throughput the fraction is pinned near the throughput optimum.
    const auto tight = optimize_nsee_constrained(p, c, st.objective * (1.0 - 1e-6));
    REQUIRE(tight.q_star);
    CHECK(std::abs(*tight.q_star - *st.q_star) < 0.02);
    CHECK(nst(p, c, *tight.q_star) >= st.objective * (1.0 - 1e-6) * (1.0 - 1e-9));

    // A level inside the range lifts the fraction to the lower crossing.
    const double level = nst(p, c, *free.q_star) * 1.5;
    REQUIRE(level < st.objective);
    const auto mid = optimize_nsee_constrained(p, c, level);
    CHECK(mid.case_tag == CaseTag::ConstrainedRoot);
    CHECK(*mid.q_star > *free.q_star);
    CHECK(std::abs(nst(p, c, *mid.q_star) - level) < 1e-9 * level + 1e-15);
    CHECK_THROWS_AS(optimize_nsee_constrained(p, c, -1.0), DomainError);
}

TEST_CASE("sparse NSEE is constant in density") {
    const auto a = network(4.0, 1e-6, 1e-4, 4, 1.0, 10.0);
    const auto b = network(4.0, 1e-7, 1e-4, 4, 1.0, 10.0);
    const double pa = optimize_nsee(a, build_outage_constraints(a, 0.3, 0.03)).objective;
    const double pb = optimize_nsee(b, build_outage_constraints(b, 0.3, 0.03)).objective;
    CHECK(pa > 0.0);
    CHECK(std::abs(pa - pb) / pa <= 1e-6);
}
