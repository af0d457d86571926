#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "lwik/w_oracle.hpp"

using namespace lwik;
using namespace lwik::oracle;

namespace {

// Bisection on w e^w = x over a bracket where w e^w is monotone.
double bisect_wexpw(double x, double lo, double hi) {
    auto f = [x](double w) { return w * std::exp(w) - x; };
    double flo = f(lo);
    for (int i = 0; i < 300; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Partial sum of sum_{n>=1} (-n)^{n-1}/n! z^n.
Complex taylor_w(Complex z, int terms) {
    Complex sum = 0.0;
    for (int n = 1; n <= terms; ++n) {
        const double c = std::pow(-static_cast<double>(n), n - 1) / std::tgamma(n + 1.0);
        sum += c * std::pow(z, n);
    }
    return sum;
}

double halton(int i, int base) {
    double f = 1.0;
    double r = 0.0;
    while (i > 0) {
        f /= base;
        r += f * (i % base);
        i /= base;
    }
    return r;
}

}  // namespace

TEST_CASE("w_principal at special points") {
    CHECK(w_principal(0.0) == Complex(0.0));
    CHECK(std::abs(w_principal(kE) - 1.0) < 1e-15);
    CHECK(w_principal(-kInvE) == Complex(-1.0));
    CHECK(std::abs(w_principal(1.0).real() - 0.5671432904097838) < 1e-15);
    CHECK(std::abs(w_principal(1.0).real() - bisect_wexpw(1.0, 0.0, 1.0)) < 1e-15);
    const Complex wi = w_principal(Complex(0, 1));
    CHECK(std::abs(wi.real() - 0.3746990) < 5e-8);
    CHECK(std::abs(wi.imag() - 0.5764127) < 5e-8);
}

TEST_CASE("w_principal rejects the open cut") {
    CHECK_THROWS_AS(w_principal(-1.0), DomainError);
    CHECK_THROWS_AS(w_principal(-kInvE - 1e-12), DomainError);
    CHECK_THROWS_AS(w_principal(Complex(NAN, 0)), DomainError);
    CHECK_NOTHROW(w_principal(Complex(-1.0, 1e-300)));
}

TEST_CASE("w_branch_m1") {
    CHECK(w_branch_m1(-kInvE) == -1.0);
    CHECK(std::abs(w_branch_m1(-2.0 / (kE * kE)) + 2.0) < 1e-14);
    CHECK(std::abs(w_branch_m1(-0.1) + 3.577152063957297) < 1e-14);
    CHECK(std::abs(w_branch_m1(-0.1) - bisect_wexpw(-0.1, -50.0, -1.0)) < 1e-13);
    for (double x : {-0.367, -0.3, -0.2, -1e-3, -1e-10, -1e-300})
        CHECK(w_branch_m1(x) <= -1.0);
    CHECK_THROWS_AS(w_branch_m1(0.0), DomainError);
    CHECK_THROWS_AS(w_branch_m1(-0.5), DomainError);
}

TEST_CASE("residual over quasi-random cut-plane points") {
    double worst = 0.0;
    for (int i = 1; i <= 10000; ++i) {
        const double logr = -8.0 + 16.0 * halton(i, 2);
        const double th = -kPi + 2.0 * kPi * halton(i, 3);
        const Complex z = std::polar(std::pow(10.0, logr), th);
        if (z.imag() == 0.0 && z.real() < -kInvE) continue;
        const Complex w = w_principal(z);
        worst = std::max(worst, std::abs(w * std::exp(w) - z) / std::max(std::abs(z), 1e-300));
        if (z.imag() > 0) CHECK(w.imag() > 0);
        if (z.imag() < 0) CHECK(w.imag() < 0);
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("conjugate symmetry") {
    for (int i = 1; i <= 500; ++i) {
        const Complex z = std::polar(std::pow(10.0, -4.0 + 8.0 * halton(i, 2)), kPi * (2.0 * halton(i, 5) - 1.0));
        if (z.imag() == 0.0) continue;
        CHECK(w_principal(std::conj(z)) == std::conj(w_principal(z)));
    }
}

TEST_CASE("range on the real line") {
    for (double x = -kInvE + 1e-9; x < 0; x += 0.01) {
        const double w = w_principal_real(x);
        CHECK(w >= -1.0);
        CHECK(w < 0.0);
    }
    CHECK(w_principal_real(1e-300) > 0.0);
    CHECK(w_principal_real(1e300) > 0.0);
}

TEST_CASE("Taylor consistency near 0") {
    for (int i = 0; i < 64; ++i) {
        const Complex z = std::polar(0.05 * (i + 1) / 64.0, 2.0 * kPi * i / 64.0 + 0.1);
        CHECK(std::abs(w_principal(z) - taylor_w(z, 20)) < 1e-12);
    }
}

TEST_CASE("w_derivative") {
    CHECK(w_derivative(0.0) == Complex(1.0));
    CHECK(std::abs(w_derivative(kE) - 1.0 / (2.0 * kE)) < 1e-15);
    const double om = w_principal_real(1.0);
    CHECK(std::abs(w_derivative(1.0) - om / (1.0 + om)) < 1e-15);
    CHECK_THROWS_AS(w_derivative(-kInvE), DomainError);
    // Central difference of the oracle itself.
    const Complex z{0.7, 0.4};
    const double h = 1e-6;
    const Complex fd = (w_principal(z + h) - w_principal(z - h)) / (2.0 * h);
    CHECK(std::abs(fd - w_derivative(z)) < 1e-8);
}

TEST_CASE("cut parameterizations") {
    CHECK(std::abs(t_of_v(kPi / 2) + kPi / 2) < 1e-15);
    CHECK(std::abs(u_of_v(kPi / 2)) < 1e-15);
    CHECK(t_of_v(0.0) == -kInvE);
    CHECK(u_of_v(0.0) == -1.0);
    CHECK(std::abs(t_of_v(1e-8) + kInvE) < 1e-15);
    CHECK(std::abs(t_of_v(kPi / 4) + kPi / 4 * std::sqrt(2.0) * std::exp(-kPi / 4)) < 1e-15);
    CHECK(std::abs(t_of_v(kPi / 4) + 0.5064199) < 1e-7);
    CHECK_THROWS_AS(t_of_v(kPi), DomainError);
    CHECK_THROWS_AS(u_of_v(-0.1), DomainError);
    for (double v = 0.01; v < 3.1; v += 0.01) CHECK(t_of_v(v + 0.01) < t_of_v(v));

    CHECK(s_of_v(0.0) == 0.0);
    CHECK(std::abs(s_of_v(kPi / 4) - kPi / 4 * std::sqrt(2.0) * std::exp(kPi / 4)) < 1e-14);
    CHECK(std::abs(s_of_v(kPi / 4) - 2.436121) < 1e-6);
    CHECK(s_of_v(0.3) < s_of_v(0.6));
    CHECK(s_of_v(0.6) < s_of_v(1.0));
    CHECK_THROWS_AS(s_of_v(kPi / 2), DomainError);
}

TEST_CASE("im_w_on_cut") {
    CHECK(im_w_on_cut(-kInvE) == 0.0);
    CHECK(std::abs(im_w_on_cut(-kPi / 2) - kPi / 2) < 1e-14);
    const double v = im_w_on_cut(-10.0);
    CHECK(std::abs(t_of_v(v) + 10.0) < 1e-12);
    CHECK(im_w_on_cut(-1e100) > 3.0);
    CHECK_THROWS_AS(im_w_on_cut(0.0), DomainError);
    for (int k = 1; k <= 30; ++k) {
        const double vk = 0.1 * k;
        CHECK(std::abs(im_w_on_cut(t_of_v(vk)) - vk) < 1e-12);
    }
    const auto p = BranchCutPoint::from_t(-2.0);
    CHECK(std::abs(t_of_v(p.v) + 2.0) < 1e-12);
    CHECK_THROWS_AS(BranchCutPoint::from_v(0.0), DomainError);
}

TEST_CASE("cut consistency with the limit from above") {
    for (double t : {-0.5, -1.0, -kPi / 2, -3.0, -10.0, -100.0}) {
        const Complex w = w_principal(Complex(t, 1e-9));
        CHECK(std::abs(w.imag() - im_w_on_cut(t)) < 1e-6);
        CHECK(std::abs(w.real() - u_of_v(im_w_on_cut(t))) < 1e-6);
    }
}
