#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lwik/representations.hpp"
#include "lwik/w_oracle.hpp"

using namespace lwik;
using namespace lwik::rep;
using quad::QuadratureSpec;

namespace {

const Complex I{0.0, 1.0};

QuadratureSpec spec_for(RepresentationId id, double tol = 1e-11) { return default_spec(id, tol); }

Complex W(Complex z) { return oracle::w_principal(z); }

void check_close(const EvalResult& r, Complex expected, double tol = 1e-9) {
    CHECK_MESSAGE(std::abs(r.value - expected) <= std::max(tol, r.err_estimate + 1e-10), info(r.rep).tag, " got (",
                  r.value.real(), ",", r.value.imag(), ") expected (", expected.real(), ",", expected.imag(), ")");
    CHECK(r.err_estimate >= 0.0);
}

}  // namespace

TEST_CASE("registry") {
    CHECK(all_representations().size() == 21);
    for (const auto& in : all_representations()) {
        CHECK(parse_representation(in.tag) == in.id);
        CHECK(&info(in.id) == &in);
    }
    CHECK_THROWS_AS(parse_representation("nope"), SpecError);
}

TEST_CASE("Stieltjes family examples") {
    using R = RepresentationId;
    check_close(stieltjes_w_over_z(1e-8, spec_for(R::StieltjesWOverZ)), 1.0, 1e-6);
    check_close(stieltjes_w_over_z(kE, spec_for(R::StieltjesWOverZ)), kInvE);
    check_close(stieltjes_w_over_z(1.0, spec_for(R::StieltjesWOverZ)), 0.5671432904097838);
    check_close(stieltjes_w_over_z({1, 2}, spec_for(R::StieltjesWOverZ)), W({1, 2}) / Complex(1, 2));

    check_close(w_prime(1e-8, spec_for(R::WPrime)), 1.0, 1e-6);
    check_close(w_prime(kE, spec_for(R::WPrime)), 1.0 / (2.0 * kE));
    check_close(w_prime(I, spec_for(R::WPrime)), oracle::w_derivative(I));

    check_close(inv_one_plus_w(1e-12, spec_for(R::InvOnePlusW)), 1.0);
    check_close(inv_one_plus_w(kE, spec_for(R::InvOnePlusW)), 0.5);
    check_close(inv_one_plus_w(2.0, spec_for(R::InvOnePlusW)), 1.0 / (1.0 + W(2.0)));

    check_close(inv_w(kE, spec_for(R::InvW)), 1.0);
    check_close(inv_w(1.0, spec_for(R::InvW)), 1.0 / W(1.0));
    check_close(inv_w(-0.2, spec_for(R::InvW)), 1.0 / W(-0.2));
    CHECK_THROWS_AS(inv_w(0.0, spec_for(R::InvW)), DomainError);

    check_close(w_log_form(kE, spec_for(R::WLogForm)), 1.0);
    check_close(w_log_form(1.0, spec_for(R::WLogForm)), W(1.0));
    check_close(w_log_form({0.1, 0.1}, spec_for(R::WLogForm)), W({0.1, 0.1}));

    check_close(thorin_w(0.0, spec_for(R::ThorinW)), 0.0);
    check_close(thorin_w(kE, spec_for(R::ThorinW)), 1.0);
    check_close(thorin_w(-0.3, spec_for(R::ThorinW)), W(-0.3));
}

TEST_CASE("cut plane domain") {
    const auto s = spec_for(RepresentationId::StieltjesWOverZ);
    CHECK_THROWS_AS(stieltjes_w_over_z(-1.0, s), DomainError);
    CHECK_THROWS_AS(stieltjes_w_over_z(-kInvE, s), DomainError);
    CHECK_THROWS_AS(thorin_w(-0.5, s), DomainError);
    CHECK_NOTHROW(stieltjes_w_over_z({-1.0, 1e-3}, s));
}

TEST_CASE("Bernstein form and varphi") {
    const auto s = spec_for(RepresentationId::BernsteinW, 1e-10);
    check_close(bernstein_w(0.0, s), 0.0);
    check_close(bernstein_w(1.0, s), W(1.0), 1e-8);
    check_close(bernstein_w(I, s), W(I), 1e-8);
    CHECK(std::abs(bernstein_w(I, s).value - Complex(0.3746990, 0.5764127)) < 1e-7);
    CHECK_THROWS_AS(bernstein_w({-0.1, 1.0}, s), DomainError);

    const QuadratureSpec ps{quad::Rule::MidpointPeriodic, 16, 1e-14, 16};
    CHECK(varphi(0.0, ps) == 1.0);
    CHECK(varphi(200.0, ps) > 0.0);
    CHECK(varphi(200.0, ps) < 1e-20);
    const double v1 = varphi(1.0, ps);
    CHECK(v1 > 0.0);
    CHECK(v1 < 1.0);
    const QuadratureSpec fine{quad::Rule::Adaptive, 20, 1e-15, 60};
    CHECK(std::abs(v1 - varphi(1.0, fine)) < 1e-13);
    CHECK_THROWS_AS(varphi(-1.0, ps), DomainError);
}

TEST_CASE("Pick family") {
    using R = RepresentationId;
    const auto& k = pick_constants();
    CHECK(std::abs(k.alpha0 - 0.3746990) < 1e-7);
    CHECK(std::abs(k.beta0 - 0.5764127) < 1e-7);
    CHECK(std::abs(k.gamma0 - 0.6874961) < 1e-7);
    CHECK(std::abs(k.eta0 - 1.21953) < 1e-5);
    CHECK(std::abs(Complex(k.alpha0, k.beta0) - W(I)) < 1e-12);
    CHECK(std::abs(k.gamma0 - std::exp(-k.alpha0)) < 1e-12);
    CHECK(std::abs(k.gamma0 - k.beta0 / std::cos(k.beta0)) < 1e-12);
    CHECK(std::abs(k.eta0 - k.beta0 / (k.alpha0 * k.alpha0 + k.beta0 * k.beta0)) < 1e-12);

    check_close(pick_w(I, spec_for(R::PickW)), W(I));
    check_close(pick_w(1.0, spec_for(R::PickW)), W(1.0));
    check_close(pick_w(kE, spec_for(R::PickW)), 1.0);

    check_close(pick_exp_form(I, spec_for(R::PickExpForm)), W(I) / I);
    check_close(pick_exp_form(1.0, spec_for(R::PickExpForm)), W(1.0));
    for (double z : {1.0, 2.0, kE})
        CHECK(std::abs(pick_exp_form(z, spec_for(R::PickExpForm)).value -
                       std::exp(-pick_w(z, spec_for(R::PickW)).value)) < 1e-10);

    const auto pwz = pick_w_over_z(I, spec_for(R::PickWOverZ));
    check_close(pwz, W(I) / I);
    CHECK(std::abs(pwz.value.real() - k.beta0) < 1e-9);
    check_close(pick_w_over_z(kE, spec_for(R::PickWOverZ)), kInvE);
    check_close(pick_w_over_z(3.0, spec_for(R::PickWOverZ)), W(3.0) / 3.0);

    const auto pzw = pick_z_over_w(I, spec_for(R::PickZOverW));
    check_close(pzw, I / W(I));
    CHECK(std::abs(pzw.value.real() - k.eta0) < 1e-9);
    check_close(pick_z_over_w(kE, spec_for(R::PickZOverW)), kE);

    // Kernel stays finite up to v -> pi.
    for (double v : {1e-9, 0.5, 3.0, 3.14159, std::nextafter(kPi, 0.0)})
        CHECK(is_finite(pick_kernel({{2.0, 1.0}, v})));
    CHECK_THROWS_AS(pick_kernel({1.0, 0.0}), DomainError);
}

TEST_CASE("Cauer form") {
    const auto s = spec_for(RepresentationId::CauerZ2);
    check_close(cauer_w_over_z(kE, s), kInvE);
    check_close(cauer_w_over_z(1.0, s), W(1.0));
    check_close(cauer_w_over_z({10, 1}, s), W({10, 1}) / Complex(10, 1));
    check_close(cauer_w_over_z(1e6, s), W(1e6) / 1e6);
    CHECK_THROWS_AS(cauer_w_over_z(0.0, s), DomainError);
    CHECK_THROWS_AS(cauer_w_over_z({-1, 1}, s), DomainError);
}

TEST_CASE("Poisson forms") {
    using R = RepresentationId;
    const auto s1 = spec_for(R::Poisson1);
    check_close(poisson_1(0.0, s1), 0.0);
    check_close(poisson_1(1.0, s1), W(1.0));
    check_close(poisson_1(-0.3, s1), W(-0.3));
    check_close(poisson_2(0.0, s1), 0.0);
    check_close(poisson_2(0.5, s1), W(0.5));
    for (double x : {-0.2, 0.3, 2.0}) {
        const auto a = poisson_1(x, s1);
        const auto b = poisson_2(x, s1);
        CHECK(std::abs(a.value - b.value) <= a.err_estimate + b.err_estimate + 1e-12);
    }
    CHECK_THROWS_AS(poisson_1(-0.5, s1), DomainError);
    CHECK_THROWS_AS(poisson_2(kE, s1), DomainError);

    const auto sw = spec_for(R::PoissonWright);
    check_close(poisson_wright(1.0, sw), W(1.0));
    check_close(poisson_wright(kE - 0.01, sw), W(kE - 0.01));
    check_close(poisson_wright(0.1, sw), W(0.1));
    CHECK_THROWS_AS(poisson_wright(0.0, sw), DomainError);
    CHECK_THROWS_AS(evaluate(R::Poisson1, {0.5, 0.1}, s1), DomainError);
}

TEST_CASE("Burniston-Siewert forms") {
    using R = RepresentationId;
    const auto s = spec_for(R::BSLogModulus);
    check_close(bs_log_modulus(0.0, s), 0.0);
    check_close(bs_log_modulus(1.0, s), W(1.0));
    check_close(bs_log_modulus(-0.25, s), W(-0.25));
    check_close(bs_arctan(0.0, s), 0.0);
    check_close(bs_arctan(2.0, s), W(2.0));
    for (double x : {-0.3, 0.5, 2.5}) {
        const auto a = bs_log_modulus(x, s);
        const auto b = bs_arctan(x, s);
        CHECK(std::abs(a.value - b.value) <= a.err_estimate + b.err_estimate + 1e-12);
    }

    const auto si = spec_for(R::BSSiewertComplex);
    check_close(bs_siewert_complex(kE, si), 1.0);
    check_close(bs_siewert_complex({2, 1}, si), W({2, 1}));
    check_close(bs_siewert_complex(1e6, si), W(1e6));
    check_close(bs_siewert_complex({-3, 0.5}, si), W({-3, 0.5}));
    CHECK_THROWS_AS(bs_siewert_complex(-0.2, si), DomainError);
    CHECK_THROWS_AS(bs_siewert_complex(-1.0, si), DomainError);

    for (double x : {kE, 1.0, 100.0}) {
        check_close(bs_siewert_real_arctan(x, si), W(x));
        check_close(bs_siewert_real_parts(x, si), W(x));
    }
    CHECK_THROWS_AS(bs_siewert_real_arctan(kInvE, si), DomainError);
    CHECK_THROWS_AS(bs_siewert_real_parts(0.2, si), DomainError);
}

TEST_CASE("branch -1 contour form") {
    const auto s = spec_for(RepresentationId::BSBranchM1);
    CHECK(branch_m1_window_hi(1.5) == doctest::Approx(-2.0 * std::exp(-2.0)).epsilon(1e-15));
    const auto r = bs_branch_m1(-0.35, 1.5, s);
    CHECK(r.target == Target::WBranchM1);
    CHECK(std::abs(r.value - oracle::w_branch_m1(-0.35)) < 1e-9);
    CHECK(std::abs(bs_branch_m1(-kInvE + 1e-4, 1.5, s).value - oracle::w_branch_m1(-kInvE + 1e-4)) < 1e-9);
    CHECK(std::abs(evaluate(RepresentationId::BSBranchM1, -0.35, s).value - r.value) == 0.0);
    CHECK_THROWS_AS(bs_branch_m1(-0.2, 1.5, s), DomainError);
    CHECK_THROWS_AS(bs_branch_m1(-0.35, 1.0, s), DomainError);
    CHECK_NOTHROW(bs_branch_m1(-0.2, 2.0, s));
}

TEST_CASE("derivative consistency of the Thorin form") {
    const auto s = spec_for(RepresentationId::ThorinW, 1e-13);
    for (double z : {0.5, 1.0, 2.0, kE}) {
        const double h = 1e-5;
        const Complex fd = (thorin_w(z + h, s).value - thorin_w(z - h, s).value) / (2.0 * h);
        CHECK(std::abs(fd - w_prime(z, spec_for(RepresentationId::WPrime)).value) < 1e-5);
    }
}

TEST_CASE("conjugate symmetry of complex-domain evaluators") {
    const Complex zs[] = {{1, 1}, {0.3, 2}, {5, 0.5}, {0.2, 0.1}};
    for (const auto& in : all_representations()) {
        if (in.real_only) continue;
        for (Complex z : zs) {
            const auto s = default_spec(in.id, 1e-10);
            const auto a = evaluate(in.id, z, s);
            const auto b = evaluate(in.id, std::conj(z), s);
            CHECK_MESSAGE(std::abs(b.value - std::conj(a.value)) <= 2.0 * std::max(a.err_estimate, b.err_estimate) + 1e-14,
                          in.tag);
        }
    }
}

TEST_CASE("anti-Herglotz and Pick signs") {
    const auto s = spec_for(RepresentationId::StieltjesWOverZ);
    int count = 0;
    for (double r : {0.05, 0.5, 2.0, 20.0, 200.0})
        for (double a : {0.2, 0.9, 1.6, 2.5}) {
            const Complex z = std::polar(r, a);
            const auto f = stieltjes_w_over_z(z, s);
            const auto g = w_prime(z, s);
            const auto p = pick_w(z, s);
            CHECK(f.value.imag() <= f.err_estimate);
            CHECK(g.value.imag() <= g.err_estimate);
            CHECK(p.value.imag() >= -p.err_estimate);
            ++count;
        }
    CHECK(count == 20);
}

TEST_CASE("integral forms") {
    CHECK(integral_forms(RepresentationId::BernsteinW, 1.0).empty());
    CHECK(integral_forms(RepresentationId::PoissonWright, 1.0).size() == 2);
    CHECK(integral_forms(RepresentationId::BSSiewertReal2, 2.0).front().semi_infinite);
    CHECK_THROWS_AS(integral_forms(RepresentationId::Poisson1, 3.0), DomainError);
}

TEST_CASE("non-convergence is reported, not hidden") {
    const QuadratureSpec tight{quad::Rule::MidpointPeriodic, 4, 1e-15, 1};
    const auto r = stieltjes_w_over_z(1.0, tight);
    CHECK_FALSE(r.converged);
    CHECK(r.err_estimate > 0.0);
}
