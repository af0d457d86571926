#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "lwik/types.hpp"

/// Numerical integration of complex-valued integrands over a real interval.
///
/// All rules are open: no rule ever evaluates the integrand at an endpoint.
/// Error estimates are the difference between two successive refinements.
namespace lwik::quad {

using Integrand = std::function<Complex(double)>;

enum class Rule {
    MidpointPeriodic,  ///< composite midpoint, node count doubled per refinement
    GaussLegendre,     ///< composite Gauss-Legendre, panel count doubled per refinement
    Adaptive,          ///< adaptive bisection of Gauss-Legendre panels
    SemiInfinite,      ///< [0, inf) mapped onto [0, 1) by t = x/(1-x), then Adaptive
};

std::string_view rule_name(Rule rule) noexcept;
/// Accepts the names produced by rule_name(). Throws SpecError otherwise.
Rule parse_rule(std::string_view name);

struct QuadratureSpec {
    Rule rule = Rule::MidpointPeriodic;
    /// Initial node count (midpoint) or points per panel (Gauss, Adaptive).
    int nodes = 8;
    /// Target absolute error.
    double tol = 1e-10;
    /// Number of doublings (midpoint, Gauss) or maximum bisection depth (Adaptive).
    int max_refinements = 16;

    /// Throws SpecError unless nodes >= 2, tol > 0 and max_refinements >= 1.
    void validate() const;
};

/// Rule-appropriate defaults for the given tolerance.
QuadratureSpec default_spec(Rule rule, double tol = 1e-10);

struct QuadResult {
    Complex value{};
    double err_estimate = 0.0;
    long nodes_used = 0;
    bool converged = false;
};

QuadResult integrate_midpoint_periodic(const Integrand& f, double a, double b, const QuadratureSpec& spec);
QuadResult integrate_gauss_legendre(const Integrand& f, double a, double b, const QuadratureSpec& spec);
QuadResult integrate_adaptive(const Integrand& f, double a, double b, const QuadratureSpec& spec);
QuadResult integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec);

/// Dispatches on spec.rule. Rule::SemiInfinite on a finite interval means Adaptive.
QuadResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec);

/// f(x/(1-x)) / (1-x)^2 on (0, 1): the integrand of int_0^inf f(t) dt after the rational map.
Integrand map_semi_infinite(Integrand f);

// Single-resolution building blocks.

/// h * sum f(a + (j + 1/2) h), h = (b - a)/n.
Complex midpoint_sum(const Integrand& f, double a, double b, long n);

struct GaussRule {
    std::vector<double> nodes;    ///< on (-1, 1), ascending
    std::vector<double> weights;
};

/// Gauss-Legendre rule of the given order (Newton iteration on P_n).
GaussRule gauss_legendre_rule(int order);

/// Composite Gauss-Legendre on `panels` equal panels.
Complex gauss_legendre_sum(const Integrand& f, double a, double b, const GaussRule& rule, long panels);

/// Deterministic pairwise summation.
Complex pairwise_sum(std::span<const Complex> values);

}  // namespace lwik::quad
