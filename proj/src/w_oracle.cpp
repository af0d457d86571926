#include "lwik/w_oracle.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace lwik::oracle {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string describe(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << z.real() << ", " << z.imag() << ")";
    return os.str();
}

// Truncated Taylor series about 0, six terms.
template <class T>
T taylor_guess(T z) {
    return z * (1.0 + z * (-1.0 + z * (1.5 + z * (-8.0 / 3.0 + z * (125.0 / 24.0 + z * (-10.8))))));
}

// Expansion about the branch point in p = +-sqrt(2(ez + 1)).
template <class T>
T branch_point_series(T p) {
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0))));
}

// Rational guess used by most W implementations for moderate |z| near the origin.
template <class T>
T rational_guess(T z) {
    return z * (3.0 + z * (6.0 + z)) / (3.0 + z * (9.0 + 5.0 * z));
}

template <class T>
T asymptotic_guess(T z) {
    using std::log;
    const T l1 = log(z);
    const T l2 = log(l1);
    return l1 - l2 + l2 / l1;
}

Complex initial_guess(Complex z) {
    if (std::abs(z) < 0.5 * kInvE) return taylor_guess(z);
    if (std::abs(z + kInvE) < 0.3) return branch_point_series(std::sqrt(2.0 * (kE * z + 1.0)));
    const double x = z.real();
    const double y = std::abs(z.imag());
    if (x > -1.0 && x < 1.5 && y < 1.0 && -2.5 * y - 0.2 < x) return rational_guess(z);
    return asymptotic_guess(z);
}

double initial_guess(double x) {
    if (std::abs(x) < 0.5 * kInvE) return taylor_guess(x);
    if (x + kInvE < 0.3) return branch_point_series(std::sqrt(std::max(0.0, 2.0 * (kE * x + 1.0))));
    if (x < 1.5) return rational_guess(x);
    return asymptotic_guess(x);
}

template <class T>
double residual(T w, T z) {
    using std::abs;
    using std::exp;
    return abs(w * exp(w) - z);
}

// Halley iteration on f(w) = w e^w - z, written in terms of
// g = f e^{-w} = w - z e^{-w} so that large w does not overflow.
template <class T>
T halley(T w, T z, const OracleOptions& opts) {
    using std::abs;
    using std::exp;
    for (int it = 0; it < opts.max_iter; ++it) {
        const T g = w - z * exp(-w);
        if (g == T(0)) break;
        const T wp1 = w + 1.0;
        if (wp1 == T(0)) break;
        const T dw = g / (wp1 - (w + 2.0) * g / (2.0 * wp1));
        if (!std::isfinite(abs(dw))) break;
        w -= dw;
        if (abs(dw) <= 4.0 * kEps * std::max(1.0, abs(w))) break;
    }
    return w;
}

template <class T>
void require_residual(T w, T z, const OracleOptions& opts, const char* what) {
    using std::abs;
    // w e^w is ill-conditioned by a factor |1 + w|, so the bound grows with it.
    const double scale = std::max(abs(z), 1e-300) * std::max(1.0, abs(w + 1.0));
    const double r = residual(w, z);
    if (!(r <= opts.rel_tol * scale)) {
        std::ostringstream os;
        os.precision(3);
        os << what << ": Halley iteration did not converge at z = " << describe(Complex(z))
           << " (relative residual " << r / scale << ")";
        throw ConvergenceError(os.str());
    }
}

}  // namespace

double w_principal_real(double x, const OracleOptions& opts) {
    if (!std::isfinite(x)) throw DomainError("w_principal: non-finite argument");
    if (x < -kInvE) throw DomainError("w_principal: real argument below -1/e lies on the branch cut");
    if (x == 0.0) return 0.0;
    if (x == -kInvE) return -1.0;
    double w = halley(initial_guess(x), x, opts);
    if (w < -1.0) w = -1.0;  // rounding right at the branch point
    require_residual(w, x, opts, "w_principal");
    return w;
}

Complex w_principal(Complex z, const OracleOptions& opts) {
    if (!is_finite(z)) throw DomainError("w_principal: non-finite argument " + describe(z));
    if (z.imag() == 0.0) {
        if (z.real() < -kInvE)
            throw DomainError("w_principal: z = " + describe(z) + " lies on the branch cut (-inf, -1/e)");
        return {w_principal_real(z.real(), opts), 0.0};
    }
    // Evaluate in the upper half-plane and reflect, so conjugate symmetry is exact.
    if (z.imag() < 0.0) return std::conj(w_principal(std::conj(z), opts));
    const Complex w = halley(initial_guess(z), z, opts);
    require_residual(w, z, opts, "w_principal");
    return w;
}

double w_branch_m1(double x, const OracleOptions& opts) {
    if (!(x >= -kInvE && x < 0.0))
        throw DomainError("w_branch_m1: argument must lie in [-1/e, 0)");
    if (x == -kInvE) return -1.0;
    double w;
    if (x < -0.25) {
        w = branch_point_series(-std::sqrt(std::max(0.0, 2.0 * (kE * x + 1.0))));
    } else {
        const double l1 = std::log(-x);
        const double l2 = std::log(-l1);
        w = l1 - l2 + l2 / l1;
    }
    w = halley(w, x, opts);
    if (w > -1.0) {
        if (w > -1.0 + 1e-7) throw ConvergenceError("w_branch_m1: iteration left the -1 branch");
        w = -1.0;
    }
    require_residual(w, x, opts, "w_branch_m1");
    return w;
}

Complex w_derivative(Complex z, const OracleOptions& opts) {
    if (z == Complex(0.0)) return 1.0;
    if (z == Complex(-kInvE)) throw DomainError("w_derivative: W' is singular at the branch point -1/e");
    const Complex w = w_principal(z, opts);
    return w / (z * (1.0 + w));
}

namespace detail {

double v_cot_v(double v) noexcept {
    if (std::abs(v) < 1e-3) {
        const double v2 = v * v;
        return 1.0 - v2 / 3.0 - v2 * v2 / 45.0;
    }
    return v / std::tan(v);
}

double v_csc_v(double v) noexcept {
    if (std::abs(v) < 1e-3) {
        const double v2 = v * v;
        return 1.0 + v2 / 6.0 + 7.0 * v2 * v2 / 360.0;
    }
    return v / std::sin(v);
}

double t_of_v_unchecked(double v) noexcept { return -v_csc_v(v) * std::exp(-v_cot_v(v)); }

}  // namespace detail

double t_of_v(double v) {
    if (!(v >= 0.0 && v < kPi)) throw DomainError("t_of_v: v must lie in [0, pi)");
    if (v == 0.0) return -kInvE;
    return detail::t_of_v_unchecked(v);
}

double u_of_v(double v) {
    if (!(v >= 0.0 && v < kPi)) throw DomainError("u_of_v: v must lie in [0, pi)");
    return -detail::v_cot_v(v);
}

double s_of_v(double v) {
    if (!(v >= 0.0 && v < 0.5 * kPi)) throw DomainError("s_of_v: v must lie in [0, pi/2)");
    if (v == 0.0) return 0.0;
    const double tn = std::tan(v);
    return v / std::cos(v) * std::exp(v * tn);
}

double im_w_on_cut(double t) {
    if (!std::isfinite(t)) throw DomainError("im_w_on_cut: non-finite argument");
    if (t > -kInvE) throw DomainError("im_w_on_cut: t must satisfy t <= -1/e");
    if (t == -kInvE) return 0.0;
    // t(v) is strictly decreasing on (0, pi): bisect.
    double lo = 0.0;
    double hi = kPi;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (detail::t_of_v_unchecked(mid) > t)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

BranchCutPoint BranchCutPoint::from_v(double v) {
    if (!(v > 0.0 && v < kPi)) throw DomainError("BranchCutPoint: v must lie in (0, pi)");
    return {t_of_v(v), v};
}

BranchCutPoint BranchCutPoint::from_t(double t) {
    if (!(t < -kInvE)) throw DomainError("BranchCutPoint: t must satisfy t < -1/e");
    return {t, im_w_on_cut(t)};
}

}  // namespace lwik::oracle
