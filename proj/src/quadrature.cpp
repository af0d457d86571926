#include "lwik/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <string>

namespace lwik::quad {

namespace {

Complex checked(const Integrand& f, double x) {
    const Complex y = f(x);
    if (!is_finite(y)) {
        std::ostringstream os;
        os.precision(17);
        os << "integrand is not finite at x = " << x;
        throw NonFiniteError(os.str());
    }
    return y;
}

void check_interval(double a, double b) {
    if (!(std::isfinite(a) && std::isfinite(b) && b > a))
        throw SpecError("integration interval must be finite with b > a");
}

Complex pairwise_sum_range(const Complex* v, std::size_t n) {
    if (n <= 32) {
        Complex s{};
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum_range(v, half) + pairwise_sum_range(v + half, n - half);
}

struct Panel {
    double a;
    double b;
    int depth;
    Complex coarse;   // one panel over [a, b]
    Complex left;     // panel over [a, m]
    Complex right;    // panel over [m, b]
    double err() const { return std::abs(left + right - coarse); }
};

struct PanelOrder {
    bool operator()(const Panel& x, const Panel& y) const {
        const double ex = x.err();
        const double ey = y.err();
        if (ex != ey) return ex < ey;
        return x.a > y.a;
    }
};

}  // namespace

std::string_view rule_name(Rule rule) noexcept {
    switch (rule) {
        case Rule::MidpointPeriodic: return "midpoint";
        case Rule::GaussLegendre: return "gauss";
        case Rule::Adaptive: return "adaptive";
        case Rule::SemiInfinite: return "semi-infinite";
    }
    return "?";
}

Rule parse_rule(std::string_view name) {
    for (Rule r : {Rule::MidpointPeriodic, Rule::GaussLegendre, Rule::Adaptive, Rule::SemiInfinite})
        if (rule_name(r) == name) return r;
    throw SpecError("unknown quadrature rule '" + std::string(name) + "'");
}

void QuadratureSpec::validate() const {
    if (nodes < 2) throw SpecError("QuadratureSpec.nodes must be >= 2");
    if (!(tol > 0.0)) throw SpecError("QuadratureSpec.tol must be > 0");
    if (max_refinements < 1) throw SpecError("QuadratureSpec.max_refinements must be >= 1");
}

QuadratureSpec default_spec(Rule rule, double tol) {
    switch (rule) {
        case Rule::MidpointPeriodic: return {rule, 8, tol, 16};
        case Rule::GaussLegendre: return {rule, 10, tol, 14};
        case Rule::Adaptive:
        case Rule::SemiInfinite: return {rule, 10, tol, 60};
    }
    return {};
}

Complex pairwise_sum(std::span<const Complex> values) { return pairwise_sum_range(values.data(), values.size()); }

Complex midpoint_sum(const Integrand& f, double a, double b, long n) {
    const double h = (b - a) / static_cast<double>(n);
    std::vector<Complex> vals(static_cast<std::size_t>(n));
    for (long j = 0; j < n; ++j) vals[static_cast<std::size_t>(j)] = checked(f, a + (static_cast<double>(j) + 0.5) * h);
    return h * pairwise_sum(vals);
}

GaussRule gauss_legendre_rule(int order) {
    if (order < 1) throw SpecError("Gauss-Legendre order must be >= 1");
    const int n = order;
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

Complex gauss_legendre_sum(const Integrand& f, double a, double b, const GaussRule& rule, long panels) {
    const double h = (b - a) / static_cast<double>(panels);
    std::vector<Complex> vals;
    vals.reserve(static_cast<std::size_t>(panels) * rule.nodes.size());
    for (long p = 0; p < panels; ++p) {
        const double lo = a + static_cast<double>(p) * h;
        const double mid = lo + 0.5 * h;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            vals.push_back(rule.weights[i] * checked(f, mid + 0.5 * h * rule.nodes[i]));
    }
    return 0.5 * h * pairwise_sum(vals);
}

QuadResult integrate_midpoint_periodic(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    check_interval(a, b);
    long n = spec.nodes;
    QuadResult res;
    Complex prev = midpoint_sum(f, a, b, n);
    res.nodes_used = n;
    for (int k = 0; k < spec.max_refinements; ++k) {
        n *= 2;
        const Complex cur = midpoint_sum(f, a, b, n);
        res.nodes_used += n;
        res.value = cur;
        res.err_estimate = std::abs(cur - prev);
        if (res.err_estimate <= spec.tol) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    return res;
}

QuadResult integrate_gauss_legendre(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    check_interval(a, b);
    const GaussRule rule = gauss_legendre_rule(spec.nodes);
    long panels = 1;
    QuadResult res;
    Complex prev = gauss_legendre_sum(f, a, b, rule, panels);
    res.nodes_used = spec.nodes;
    for (int k = 0; k < spec.max_refinements; ++k) {
        panels *= 2;
        const Complex cur = gauss_legendre_sum(f, a, b, rule, panels);
        res.nodes_used += panels * spec.nodes;
        res.value = cur;
        res.err_estimate = std::abs(cur - prev);
        if (res.err_estimate <= spec.tol) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    return res;
}

QuadResult integrate_adaptive(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    check_interval(a, b);
    constexpr std::size_t kMaxPanels = 20000;
    const GaussRule rule = gauss_legendre_rule(spec.nodes);
    QuadResult res;
    auto panel_sum = [&](double lo, double hi) {
        res.nodes_used += spec.nodes;
        return gauss_legendre_sum(f, lo, hi, rule, 1);
    };
    auto make = [&](double lo, double hi, int depth, Complex coarse) {
        const double m = 0.5 * (lo + hi);
        return Panel{lo, hi, depth, coarse, panel_sum(lo, m), panel_sum(m, hi)};
    };

    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> work;
    std::vector<Panel> done;
    double total_err = 0.0;
    double parked_err = 0.0;
    {
        Panel p = make(a, b, 0, panel_sum(a, b));
        total_err = p.err();
        work.push(p);
    }
    while (total_err > spec.tol && work.size() + done.size() < kMaxPanels) {
        Panel p = work.top();
        const double m = 0.5 * (p.a + p.b);
        if (p.depth >= spec.max_refinements || m <= p.a || m >= p.b) {
            // Cannot split further; park it and keep refining the others.
            work.pop();
            done.push_back(p);
            parked_err += p.err();
            if (work.empty() || parked_err > spec.tol) break;
            continue;
        }
        work.pop();
        Panel l = make(p.a, m, p.depth + 1, p.left);
        Panel r = make(m, p.b, p.depth + 1, p.right);
        total_err += l.err() + r.err() - p.err();
        work.push(l);
        work.push(r);
    }
    while (!work.empty()) {
        done.push_back(work.top());
        work.pop();
    }
    std::sort(done.begin(), done.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    std::vector<Complex> vals;
    vals.reserve(done.size());
    double err = 0.0;
    for (const Panel& p : done) {
        vals.push_back(p.left + p.right);
        err += p.err();
    }
    res.value = pairwise_sum(vals);
    res.err_estimate = err;
    res.converged = err <= spec.tol;
    return res;
}

Integrand map_semi_infinite(Integrand f) {
    return [f = std::move(f)](double x) -> Complex {
        const double om = 1.0 - x;
        const double t = x / om;
        if (!std::isfinite(t)) return 0.0;
        const Complex y = f(t);
        return y / (om * om);
    };
}

QuadResult integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec) {
    return integrate_adaptive(map_semi_infinite(f), 0.0, 1.0, spec);
}

QuadResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
    switch (spec.rule) {
        case Rule::MidpointPeriodic: return integrate_midpoint_periodic(f, a, b, spec);
        case Rule::GaussLegendre: return integrate_gauss_legendre(f, a, b, spec);
        case Rule::Adaptive:
        case Rule::SemiInfinite: return integrate_adaptive(f, a, b, spec);
    }
    throw SpecError("unknown quadrature rule");
}

}  // namespace lwik::quad
