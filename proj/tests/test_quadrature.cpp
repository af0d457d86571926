#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lwik/quadrature.hpp"
#include "lwik/representations.hpp"
#include "lwik/w_oracle.hpp"

using namespace lwik;
using namespace lwik::quad;

namespace {

Integrand real_fn(double (*f)(double)) {
    return [f](double x) -> Complex { return f(x); };
}

}  // namespace

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(QuadratureSpec({Rule::MidpointPeriodic, 1, 1e-10, 4}).validate(), SpecError);
    CHECK_THROWS_AS(QuadratureSpec({Rule::MidpointPeriodic, 8, 0.0, 4}).validate(), SpecError);
    CHECK_THROWS_AS(QuadratureSpec({Rule::MidpointPeriodic, 8, 1e-10, 0}).validate(), SpecError);
    CHECK_THROWS_AS(integrate_midpoint_periodic(real_fn(std::sin), 1.0, 0.0, {}), SpecError);
    CHECK(parse_rule("gauss") == Rule::GaussLegendre);
    CHECK_THROWS_AS(parse_rule("simpson"), SpecError);
}

TEST_CASE("midpoint") {
    const auto r = integrate_midpoint_periodic(real_fn(std::sin), 0.0, kPi, default_spec(Rule::MidpointPeriodic, 1e-10));
    CHECK(r.converged);
    CHECK(std::abs(r.value - 2.0) < 1e-10);
    CHECK(r.err_estimate <= 1e-10);
    const auto one = midpoint_sum([](double) -> Complex { return 1.0; }, 0.0, kPi, 7);
    CHECK(std::abs(one.real() - kPi) < 4e-16);
}

TEST_CASE("midpoint reports non-convergence and non-finite values") {
    const auto r = integrate_midpoint_periodic([](double x) -> Complex { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                                               {Rule::MidpointPeriodic, 8, 1e-14, 3});
    CHECK_FALSE(r.converged);
    CHECK(r.err_estimate > 1e-14);
    CHECK_THROWS_AS(integrate_midpoint_periodic([](double x) -> Complex { return 1.0 / (x - 0.5); }, 0.0, 1.0,
                                                {Rule::MidpointPeriodic, 3, 1e-10, 4}),
                    NonFiniteError);
}

TEST_CASE("Gauss-Legendre") {
    const auto rule = gauss_legendre_rule(5);
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    CHECK(std::abs(wsum - 2.0) < 1e-15);
    const auto cube = integrate_gauss_legendre([](double x) -> Complex { return x * x * x; }, 0.0, 1.0,
                                               {Rule::GaussLegendre, 2, 1e-12, 2});
    CHECK(std::abs(cube.value - 0.25) < 1e-16);
    const auto e = integrate_gauss_legendre(real_fn(std::exp), 0.0, 1.0, default_spec(Rule::GaussLegendre, 1e-13));
    CHECK(std::abs(e.value - (kE - 1.0)) < 1e-12);
}

TEST_CASE("adaptive") {
    const auto r = integrate_adaptive([](double x) -> Complex { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                                      default_spec(Rule::Adaptive, 1e-9));
    CHECK(r.converged);
    CHECK(std::abs(r.value - 2.0) < 1e-8);
    const auto s = integrate_adaptive(real_fn(std::sin), 0.0, kPi, default_spec(Rule::Adaptive, 1e-12));
    CHECK(std::abs(s.value - 2.0) < 1e-12);
}

TEST_CASE("semi-infinite") {
    const auto spec = default_spec(Rule::SemiInfinite, 1e-11);
    const auto a = integrate_semi_infinite([](double t) -> Complex { return std::exp(-t); }, spec);
    CHECK(std::abs(a.value - 1.0) < 1e-10);
    const auto b = integrate_semi_infinite([](double t) -> Complex { return 1.0 / ((1 + t) * (1 + t)); }, spec);
    CHECK(std::abs(b.value - 1.0) < 1e-10);
}

TEST_CASE("complex integrand in one pass") {
    const auto r = integrate([](double x) -> Complex { return std::exp(Complex(0, x)); }, 0.0, kPi,
                             default_spec(Rule::GaussLegendre, 1e-13));
    CHECK(std::abs(r.value - Complex(0, 2)) < 1e-12);
}

TEST_CASE("refinement monotonicity on smooth integrands") {
    for (auto f : {real_fn(std::sin), real_fn(std::exp)}) {
        double prev = INFINITY;
        for (int k = 1; k <= 8; ++k) {
            const auto r = integrate_midpoint_periodic(f, 0.0, 1.0, {Rule::MidpointPeriodic, 4, 1e-300, k});
            CHECK(r.err_estimate <= prev);
            prev = r.err_estimate;
        }
        prev = INFINITY;
        for (int k = 1; k <= 5; ++k) {
            const auto r = integrate_gauss_legendre(f, 0.0, 1.0, {Rule::GaussLegendre, 3, 1e-300, k});
            CHECK(r.err_estimate <= prev);
            prev = r.err_estimate;
        }
    }
}

TEST_CASE("bit-reproducible results") {
    const auto spec = default_spec(Rule::Adaptive, 1e-12);
    const auto f = [](double x) -> Complex { return std::log(1.0 + x) / (1.0 + x * x); };
    const auto a = integrate_adaptive(f, 0.0, 1.0, spec);
    const auto b = integrate_adaptive(f, 0.0, 1.0, spec);
    CHECK(a.value == b.value);
    CHECK(a.nodes_used == b.nodes_used);
}

TEST_CASE("spectral convergence of the symmetric W/z form at z = 1") {
    const double exact = oracle::w_principal_real(1.0);
    auto f = [](double v) -> Complex {
        v = std::abs(v);
        const double g = rep::kernel::g(v);
        return rep::kernel::n(v) * g / (1.0 + g) / (2.0 * kPi);
    };
    auto err = [&](long n) { return std::abs(midpoint_sum(f, -kPi, kPi, n).real() - exact); };
    for (long n : {16L, 32L, 64L, 128L}) CHECK(err(2 * n) <= 0.5 * err(n));
}

TEST_CASE("cross-rule agreement on representation integrands") {
    using rep::RepresentationId;
    const Complex zs[] = {{1, 0}, {2, 0}, {0.5, 0.5}, {-0.2, 0}, {2, -1}, {0.3, 0}, {1.5, 2}, {0.1, 0}, {2.5, 0}, {1, 1}};
    int checked = 0;
    for (const auto& in : rep::all_representations()) {
        for (Complex z : zs) {
            if (in.real_only && z.imag() != 0.0) continue;
            if (!in.domain.contains(z)) continue;
            for (const auto& form : rep::integral_forms(in.id, z)) {
                QuadratureSpec mid = default_spec(Rule::MidpointPeriodic, 1e-10);
                QuadratureSpec gl = default_spec(Rule::GaussLegendre, 1e-10);
                mid.max_refinements = 18;
                gl.max_refinements = 16;
                const Integrand f = form.semi_infinite ? map_semi_infinite(form.f) : form.f;
                const double a = form.semi_infinite ? 0.0 : form.a;
                const double b = form.semi_infinite ? 1.0 : form.b;
                const auto rm = integrate(f, a, b, mid);
                const auto rg = integrate(f, a, b, gl);
                CHECK_MESSAGE(std::abs(rm.value - rg.value) <= rm.err_estimate + rg.err_estimate + 1e-12,
                              in.tag, " z=", z.real(), ",", z.imag());
                ++checked;
            }
        }
    }
    CHECK(checked > 100);
}
