#pragma once

#include "lwik/types.hpp"

/// Reference evaluation of the Lambert W function.
///
/// The principal branch W0 is evaluated on the cut plane C \ (-inf, -1/e) by
/// Halley iteration on w*exp(w) = z. The branch W-1 is available on the real
/// interval [-1/e, 0). The branch-cut parameterizations t(v), u(v), s(v) tie a
/// point on the cut (or on the imaginary axis) to the imaginary part v of W
/// there, and are the change of variables behind every integral
/// representation in lwik::rep.
namespace lwik::oracle {

struct OracleOptions {
    double rel_tol = 1e-14;  ///< bound on |w e^w - z| / (|z| max(1, |1 + w|))
    int max_iter = 50;
};

/// W0(z). Throws DomainError for real z < -1/e (the open cut); z = -1/e is
/// accepted and returns -1. Off the real axis W0(conj z) == conj(W0(z)) exactly.
Complex w_principal(Complex z, const OracleOptions& opts = {});

/// W0 on the real half-line [-1/e, inf).
double w_principal_real(double x, const OracleOptions& opts = {});

/// W-1 on [-1/e, 0); the result is <= -1.
double w_branch_m1(double x, const OracleOptions& opts = {});

/// W0'(z) = W/(z(1+W)), with W0'(0) = 1. Throws DomainError at z = -1/e.
Complex w_derivative(Complex z, const OracleOptions& opts = {});

// Branch-cut parameterizations. For a point t < -1/e on the cut, with
// W(t + i0) = u + iv, 0 < v < pi:
//     u = -v cot v,   t = -v csc v exp(-v cot v).
// On the positive imaginary axis z = is, W(is) = u + iv with 0 < v < pi/2:
//     u = v tan v,    s = v sec v exp(v tan v).

/// t(v) on [0, pi); t(0) = -1/e. Saturates to -inf once exp overflows
/// (pi - v below roughly 4.4e-3).
double t_of_v(double v);

/// u(v) = -v cot v on [0, pi); u(0) = -1.
double u_of_v(double v);

/// s(v) on [0, pi/2); s(0) = 0. Saturates to +inf near pi/2.
double s_of_v(double v);

/// Inverse of t(v): Im W(t + i0) for t <= -1/e, by bisection.
double im_w_on_cut(double t);

/// A point on the cut together with Im W there.
struct BranchCutPoint {
    double t;
    double v;

    static BranchCutPoint from_v(double v);
    static BranchCutPoint from_t(double t);
};

namespace detail {

// v cot v and v csc v with series near v = 0; no domain checks.
double v_cot_v(double v) noexcept;
double v_csc_v(double v) noexcept;
double t_of_v_unchecked(double v) noexcept;

}  // namespace detail

}  // namespace lwik::oracle
