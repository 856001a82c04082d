#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qrel/resources.hpp"

using namespace qrel;

namespace {

XState bell() { return {0.5, 0.0, 0.0, 0.5, 0.5, 0.0}; }
XState werner_singlet() { return {0.0, 0.5, 0.5, 0.0, 0.0, -0.5}; }
XState maximally_mixed() { return {0.25, 0.25, 0.25, 0.25, 0.0, 0.0}; }

Matrix bloch_rotation(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double theta = 2.0 * std::numbers::pi * u(rng);
    const double z = 2.0 * u(rng) - 1.0;
    const double phi = 2.0 * std::numbers::pi * u(rng);
    const double s = std::sqrt(1.0 - z * z);
    const double n[3] = {s * std::cos(phi), s * std::sin(phi), z};
    Matrix axis = pauli::x() * n[0] + pauli::y() * n[1] + pauli::z() * n[2];
    return pauli::id2() * Complex(std::cos(theta / 2.0), 0.0) +
           axis * Complex(0.0, -std::sin(theta / 2.0));
}

}  // namespace

TEST_CASE("xstate validation") {
    CHECK_NOTHROW(bell().validate());
    CHECK_NOTHROW(werner_singlet().validate());
    XState bad = bell();
    bad.s14 = 0.6;  // above sqrt(s11 s44)
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = bell();
    bad.s11 = 0.6;
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("l1 coherence") {
    CHECK(l1_coherence(maximally_mixed().to_density()) == 0.0);
    CHECK(l1_coherence(bell().to_density()) == doctest::Approx(1.0).epsilon(1e-14));
    const XState x{0.3, 0.3, 0.2, 0.2, 0.1, 0.2};
    CHECK(l1_coherence(x.to_density()) == doctest::Approx(0.6).epsilon(1e-14));
}

TEST_CASE("hellinger route equals l1 route") {
    CHECK(hellinger_coherence(maximally_mixed().to_density()) == 0.0);
    CHECK(hellinger_coherence(bell().to_density()) == doctest::Approx(1.0).epsilon(1e-12));

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
        const DensityMatrix rho = random_xstate(rng).to_density();
        CHECK(std::abs(hellinger_coherence(rho) - l1_coherence(rho)) < 1e-10);
    }
}

TEST_CASE("xstate concurrence matches the Wootters route") {
    CHECK(xstate_concurrence(bell()) == doctest::Approx(1.0));
    CHECK(xstate_concurrence(maximally_mixed()) == 0.0);
    CHECK(xstate_concurrence(werner_singlet()) == doctest::Approx(1.0));

    std::mt19937_64 rng(37);
    double worst = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
        const XState x = random_xstate(rng);
        const double gap = std::abs(xstate_concurrence(x) - wootters_concurrence(x.to_density()));
        worst = std::max(worst, gap);
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("concurrence is invariant under local rotations") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const XState x = random_xstate(rng);
        const DensityMatrix rho = x.to_density();
        const Matrix u = kron(bloch_rotation(rng), bloch_rotation(rng));
        Matrix rotated = u * rho.mat() * u.adjoint();
        const DensityMatrix rho2{(rotated + rotated.adjoint()) * Complex(0.5, 0.0)};
        CHECK(std::abs(wootters_concurrence(rho) - wootters_concurrence(rho2)) < 1e-10);
    }
}

TEST_CASE("bures entanglement") {
    CHECK(bures_entanglement(0.0) == 0.0);
    CHECK(bures_entanglement(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(bures_entanglement(0.225) == doctest::Approx(0.14816).epsilon(1e-4));
    CHECK_THROWS_AS(bures_entanglement(1.5), DomainError);
    CHECK_THROWS_AS(bures_entanglement(-0.1), DomainError);

    // strictly increasing on (0,1)
    double prev = 0.0;
    for (int k = 1; k <= 1000; ++k) {
        const double c = static_cast<double>(k) / 1000.0;
        const double b = bures_entanglement(c);
        CHECK(b > prev);
        prev = b;
    }
}

TEST_CASE("closed-form trace-distance discord") {
    const XState cq{0.3, 0.3, 0.2, 0.2, 0.0, 0.0};
    CHECK(trace_distance_discord_closed(cq) == 0.0);
    CHECK(trace_distance_discord_closed(bell()) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(trace_distance_discord_closed(werner_singlet()) == doctest::Approx(1.0).epsilon(1e-14));

    // s14 = 0 collapses the formula to 2|s23| for any denominator
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        XState x = random_xstate(rng);
        x.s14 = 0.0;
        CHECK(std::abs(trace_distance_discord_closed(x) - 2.0 * std::abs(x.s23)) < 1e-12);
    }
}

TEST_CASE("discord oracle brackets the closed form") {
    std::mt19937_64 rng(47);

    const DensityMatrix diag = maximally_mixed().to_density();
    CHECK(trace_distance_discord_oracle(diag, 2, 1e-8, rng) < 1e-6);

    std::mt19937_64 rng_bell(48);
    const double bell_oracle = trace_distance_discord_oracle(bell().to_density(), 32, 1e-8, rng_bell);
    CHECK(bell_oracle == doctest::Approx(1.0).epsilon(1e-3));

    for (int trial = 0; trial < 10; ++trial) {
        const XState x = random_xstate(rng);
        const double closed = trace_distance_discord_closed(x);
        std::mt19937_64 point_rng(1000 + trial);
        const double upper = trace_distance_discord_oracle(x.to_density(), 24, 1e-8, point_rng);
        CHECK(upper - closed > -1e-3);
        CHECK(upper - closed < 5e-3);
    }
}

TEST_CASE("discord oracle gap shrinks with more restarts") {
    std::mt19937_64 rng(53);
    const XState x = random_xstate(rng);
    const DensityMatrix rho = x.to_density();
    std::mt19937_64 a(99), b(99);
    const double few = trace_distance_discord_oracle(rho, 4, 1e-8, a);
    const double many = trace_distance_discord_oracle(rho, 32, 1e-8, b);
    CHECK(many <= few + 1e-12);
}

TEST_CASE("resource report") {
    const ResourceReport rb = resource_report(bell());
    CHECK(rb.coherence == doctest::Approx(1.0));
    CHECK(rb.discord == doctest::Approx(1.0));
    CHECK(rb.concurrence == doctest::Approx(1.0));
    CHECK(rb.bures == doctest::Approx(1.0));

    const ResourceReport rm = resource_report(maximally_mixed());
    CHECK(rm.coherence == 0.0);
    CHECK(rm.discord == 0.0);
    CHECK(rm.concurrence == 0.0);
    CHECK(rm.bures == 0.0);

    const ResourceReport rw = resource_report(werner_singlet());
    CHECK(rw.coherence == doctest::Approx(1.0));
    CHECK(rw.discord == doctest::Approx(1.0));
    CHECK(rw.concurrence == doctest::Approx(1.0));
    CHECK(rw.bures == doctest::Approx(1.0));

    // B_d = 0 iff C = 0 across random states
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 200; ++trial) {
        const ResourceReport r = resource_report(random_xstate(rng));
        CHECK((r.bures == 0.0) == (r.concurrence == 0.0));
    }
}
