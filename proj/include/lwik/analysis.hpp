#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lwik/quadrature.hpp"
#include "lwik/types.hpp"

/// Checks of structural properties: the Stieltjes measure of W(z)/z and its
/// moments, Padé approximants, the Sokal functions, complete monotonicity and
/// closed-form definite integrals. Nothing here performs I/O.
namespace lwik::analysis {

// Stieltjes measure and moments.

/// Phi(u) = (1/pi) int_0^u Im W(-1/t) dt for 0 <= u <= e.
double phi_measure(double u, const quad::QuadratureSpec& spec);

/// Closed form m_n = (n+1)^(n-1) / n!.
double moment_exact(int n);

struct MomentTable {
    std::vector<double> moments;  ///< m_0 .. m_N
    int N = 0;
    double quad_err = 0.0;        ///< largest quadrature error estimate
    /// det [m_{i+j}]_{i,j=0..k} for k = 0 .. min(N/2, 5).
    std::vector<double> hankel;
    /// det [m_{i+j+1}]_{i,j=0..k} for k = 0 .. min((N-1)/2, 5).
    std::vector<double> hankel_shifted;

    bool hankel_positive() const noexcept;
};

/// m_n = int_0^e t^n dPhi(t) by quadrature, n = 0..N.
MomentTable stieltjes_moments(int N, const quad::QuadratureSpec& spec);

/// Determinants of the leading Hankel matrices [m_{offset+i+j}], orders 0..max_order.
std::vector<double> hankel_determinants(std::span<const double> m, int max_order, int offset = 0);

// Padé approximants of W(z)/z.

/// Taylor coefficient of z^k in W(z)/z: (-(k+1))^k / (k+1)!.
double w_over_z_coefficient(int k);

struct PadeApproximant {
    int L = 0;
    int M = 0;
    std::vector<double> num_coeffs;  ///< ascending powers of z
    std::vector<double> den_coeffs;  ///< ascending powers, den_coeffs[0] = 1
    std::vector<Complex> poles;      ///< sorted by real part, descending
    double condition = 1.0;          ///< 2-norm condition number of the linear system

    Complex operator()(Complex z) const;
    /// True when every pole has |Im| <= tol.
    bool poles_real(double tol = 1e-8) const noexcept;
    /// Real parts of the poles, ascending.
    std::vector<double> real_poles() const;
};

/// [L/M] approximant for 1 <= M <= 8, L in {M-1, M}. Throws SpecError for other
/// degrees and SingularSystemError when the system is numerically singular.
PadeApproximant pade_w_over_z(int L, int M);

/// Strict interlacing of `fewer` (size n) inside `more` (size n+1), both ascending:
/// more[i] < fewer[i] < more[i+1], each gap at least `slack`.
bool strictly_interlace(std::span<const double> fewer, std::span<const double> more, double slack = 1e-8);

// Sokal functions.

/// c = (1 + W(a))^2 / W(a), the residue of F0 and F1 at z = 0.
double sokal_residue(double a);
/// F0(z) = z/(1+z) W(a(1+z)) / [W(a(1+z)) - W(a)]^2, a in (0, e].
Complex sokal_f0(Complex z, double a);
/// F1(z) = z W(a/(1+z)) / [W(a) - W(a/(1+z))]^2 = -F0(-z/(1+z)).
Complex sokal_f1(Complex z, double a);
/// F0(z) - c/z and F1(z) - c/z.
Complex sokal_f0_regular(Complex z, double a);
Complex sokal_f1_regular(Complex z, double a);

using ComplexFunction = std::function<Complex(Complex)>;

struct HerglotzReport {
    std::string function_id;
    std::size_t points = 0;
    double max_imag = 0.0;  ///< max Im f over the grid
    Complex worst_z{};
    double slack = 1e-12;
    bool passed() const noexcept { return max_imag <= slack; }
};

/// Im f(z) <= slack for every grid point (all with Im z > 0).
HerglotzReport anti_herglotz_grid_check(std::string function_id, const ComplexFunction& f,
                                        std::span<const Complex> grid, double slack = 1e-12);

/// n_radii log-spaced radii in [r_min, r_max] times n_angles angles pi(k+1/2)/n_angles.
std::vector<Complex> upper_half_plane_grid(int n_radii, int n_angles, double r_min, double r_max);

// Complete monotonicity.

using RealFunction = std::function<double(double)>;

struct CMViolation {
    int order;
    double x;
    double value;  ///< (-1)^n f^(n)(x), below -slack
};

struct CMReport {
    std::string function_id;
    int orders_checked = 0;
    std::vector<double> grid;
    std::vector<CMViolation> violations;
    /// min over orders and grid of (-1)^n f^(n)(x) + slack; negative on failure.
    double max_margin = 0.0;

    bool passed() const noexcept { return violations.empty(); }
    /// Lowest order with a violation, or -1.
    int first_failing_order() const noexcept;
};

/// (-1)^n f^(n)(x) >= -slack for n = 0..order (order <= 8) at every x in the grid,
/// using central differences with step 0.01 x 2^(n/2). Throws StepTooSmallError
/// when rounding swamps the difference quotient.
CMReport cm_check(std::string function_id, const RealFunction& f, int order, std::span<const double> grid);

/// n log-spaced points in [lo, hi].
std::vector<double> log_grid(double lo, double hi, int n);

struct CMFunction {
    std::string id;           ///< e.g. "stieltjes-d", "w-over-x"
    std::string formula;      ///< human-readable
    std::vector<double> params;
    RealFunction f;
    bool expect_cm = true;    ///< false only for the negative control
};

/// Known function ids, sorted.
std::vector<std::string> cm_function_ids();
/// Number of parameters the id takes.
std::size_t cm_param_count(std::string_view id);
/// Instantiate a corpus function. Empty params select the first default set.
/// Throws SpecError for an unknown id or a wrong parameter count.
CMFunction cm_function(std::string_view id, std::span<const double> params = {});
/// The full corpus: each parameterized family with two interior parameter sets,
/// the parameter-free entries once, and the negative control W. Sorted by id.
std::vector<CMFunction> cm_corpus();

// Definite integrals.

struct IdentityResult {
    std::string name;
    double computed = 0.0;
    double expected = 0.0;
    double err_estimate = 0.0;

    double abs_error() const noexcept;
    double rel_error() const noexcept;
};

/// int_0^pi [sin v / v e^{v cot v}]^nu dv against pi nu^nu / nu!, 1 <= nu <= 12.
IdentityResult nuttall_identity(int nu, const quad::QuadratureSpec& spec);

/// The four integrals obtained by setting z = e in the W/z, 1/W, 1/(1+W)
/// and Cauer forms: pi, (e-1) pi / e, pi/2, pi/2.
std::vector<IdentityResult> closing_identities(const quad::QuadratureSpec& spec);

/// phi(xi)/xi, the Lévy density of W as a Bernstein function.
double bernstein_levy_density(double xi, const quad::QuadratureSpec& spec);

}  // namespace lwik::analysis
