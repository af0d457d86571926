#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lwik/quadrature.hpp"
#include "lwik/types.hpp"

/// Integral representations of W0 and of functions built from it.
///
/// Every evaluator takes its argument plus a QuadratureSpec and returns an
/// EvalResult whose `target` names the function of W that `value` approximates.
/// Arguments outside the representation's region of validity raise DomainError.
namespace lwik::rep {

enum class RepresentationId {
    StieltjesWOverZ,
    WPrime,
    InvOnePlusW,
    InvW,
    WLogForm,
    ThorinW,
    BernsteinW,
    PickW,
    PickExpForm,
    PickWOverZ,
    PickZOverW,
    CauerZ2,
    Poisson1,
    Poisson2,
    PoissonWright,
    BSLogModulus,
    BSArctan,
    BSSiewertComplex,
    BSSiewertReal2,
    BSSiewertReal3,
    BSBranchM1,
};

enum class Target { W, WPrime, WOverZ, InvOnePlusW, InvW, ZOverW, WBranchM1 };

std::string_view target_name(Target t) noexcept;

/// Region of validity in the z-plane.
struct Domain {
    enum class Kind {
        CutPlane,         ///< C minus (-inf, -1/e]
        CutPlaneNonzero,  ///< CutPlane minus {0}
        RightHalfClosed,  ///< Re z >= 0
        RightHalfOpen,    ///< Re z > 0
        RealInterval,     ///< real z in (lo, hi)
        OffNegativeAxis,  ///< C minus (-inf, 0]
    };
    Kind kind = Kind::CutPlane;
    double lo = 0.0;
    double hi = 0.0;

    bool contains(Complex z) const noexcept;
    std::string describe() const;
};

struct RepresentationInfo {
    RepresentationId id;
    std::string_view tag;  ///< kebab-case name used by the CLI
    Target target;
    Domain domain;         ///< for BSBranchM1, the window at the default c
    quad::Rule default_rule;
    bool real_only;        ///< argument must be real
};

/// All representations in declaration order.
std::span<const RepresentationInfo> all_representations() noexcept;
const RepresentationInfo& info(RepresentationId id) noexcept;
/// Throws SpecError for an unknown tag.
RepresentationId parse_representation(std::string_view tag);

struct EvalResult {
    Complex value{};
    double err_estimate = 0.0;
    long nodes_used = 0;
    RepresentationId rep = RepresentationId::StieltjesWOverZ;
    Target target = Target::W;
    bool converged = false;
};

/// The representation's default rule at the given tolerance.
quad::QuadratureSpec default_spec(RepresentationId id, double tol = 1e-10);

/// Oracle value of a target function at z.
Complex oracle_value(Target target, Complex z);

inline constexpr double kDefaultBranchC = 1.5;

/// Upper end -(2c-1) e^{1-2c} of the window (-1/e, .) where the branch -1 form holds.
double branch_m1_window_hi(double c);

/// Generic dispatcher. `c` is used only by BSBranchM1.
EvalResult evaluate(RepresentationId id, Complex z, const quad::QuadratureSpec& spec,
                    double c = kDefaultBranchC);

// Named evaluators.

EvalResult stieltjes_w_over_z(Complex z, const quad::QuadratureSpec& spec);
EvalResult w_prime(Complex z, const quad::QuadratureSpec& spec);
EvalResult inv_one_plus_w(Complex z, const quad::QuadratureSpec& spec);
EvalResult inv_w(Complex z, const quad::QuadratureSpec& spec);
EvalResult w_log_form(Complex z, const quad::QuadratureSpec& spec);
EvalResult thorin_w(Complex z, const quad::QuadratureSpec& spec);
/// The inner phi integral uses a fixed composite Gauss rule; `spec_inner.nodes`
/// is the order per panel and `spec_inner.max_refinements` the panel count.
EvalResult bernstein_w(Complex z, const quad::QuadratureSpec& spec_outer,
                       const quad::QuadratureSpec& spec_inner);
EvalResult bernstein_w(Complex z, const quad::QuadratureSpec& spec_outer);
EvalResult pick_w(Complex z, const quad::QuadratureSpec& spec);
EvalResult pick_exp_form(Complex z, const quad::QuadratureSpec& spec);
EvalResult pick_w_over_z(Complex z, const quad::QuadratureSpec& spec);
EvalResult pick_z_over_w(Complex z, const quad::QuadratureSpec& spec);
EvalResult cauer_w_over_z(Complex z, const quad::QuadratureSpec& spec);
EvalResult poisson_1(double x, const quad::QuadratureSpec& spec);
EvalResult poisson_2(double x, const quad::QuadratureSpec& spec);
EvalResult poisson_wright(double x, const quad::QuadratureSpec& spec);
EvalResult bs_log_modulus(double x, const quad::QuadratureSpec& spec);
EvalResult bs_arctan(double x, const quad::QuadratureSpec& spec);
EvalResult bs_siewert_complex(Complex z, const quad::QuadratureSpec& spec);
EvalResult bs_siewert_real_arctan(double x, const quad::QuadratureSpec& spec);
EvalResult bs_siewert_real_parts(double x, const quad::QuadratureSpec& spec);
/// W-1(x) for -1/e < x < branch_m1_window_hi(c), c > 1.
EvalResult bs_branch_m1(double x, double c, const quad::QuadratureSpec& spec);

/// phi(xi) = (1/pi) int_0^pi exp(-xi / g(v)) dv, g(v) = sin v / v * e^{v cot v}.
double varphi(double xi, const quad::QuadratureSpec& spec);

/// Real and imaginary parts of W(i), and the derived constants
/// gamma0 = exp(-alpha0), eta0 = Re[i / W(i)]. Computed once from the oracle.
struct PickConstants {
    double alpha0;
    double beta0;
    double gamma0;
    double eta0;
};
const PickConstants& pick_constants();

/// A point (z, v) at which the Pick kernel is evaluated.
struct PickKernelPoint {
    Complex z;
    double v;  ///< in (0, pi)
};

/// K(z, v) = (1 + z t)(v^2 + (1 - v cot v)^2) / ((z - t)(1 + t^2)) with
/// t = t(v), evaluated as n(v)(g - z)g^2 / ((1 + z g)(1 + g^2)), g = -1/t,
/// so that it stays finite as v -> pi.
Complex pick_kernel(const PickKernelPoint& p);

/// The raw integral that a representation reduces to, before the outer
/// algebra (prefactor, additive constant, logarithm, exponential).
struct IntegralForm {
    quad::Integrand f;
    double a;
    double b;
    bool semi_infinite;  ///< integrate over [0, inf); a and b are ignored
};

/// The integrals behind `id` at z. Bernstein and the branch -1 form are not
/// plain one-dimensional integrals and return an empty list.
std::vector<IntegralForm> integral_forms(RepresentationId id, Complex z, double c = kDefaultBranchC);

namespace kernel {

/// g(v) = sin v / v * e^{v cot v} in (0, e]; underflows to 0 as v -> pi.
double g(double v) noexcept;
/// v^2 + (1 - v cot v)^2.
double n(double v) noexcept;
/// n(v) * (sin v / v)^2, evaluated without the large factor n(v).
double n_s2(double v) noexcept;

}  // namespace kernel

}  // namespace lwik::rep
