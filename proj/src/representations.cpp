#include "lwik/representations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "lwik/w_oracle.hpp"

namespace lwik::rep {

namespace {

using quad::QuadratureSpec;
using quad::QuadResult;
using quad::Rule;

constexpr Complex kI{0.0, 1.0};

// 1 - v cot v, with the series near 0 to keep relative accuracy.
double one_minus_vcot(double v) noexcept {
    if (std::abs(v) < 1e-3) {
        const double v2 = v * v;
        return v2 / 3.0 + v2 * v2 / 45.0;
    }
    return 1.0 - v / std::tan(v);
}

double sinc(double v) noexcept { return 1.0 / oracle::detail::v_csc_v(v); }

std::string describe(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << z.real() << ", " << z.imag() << ")";
    return os.str();
}

// Poisson-type data R(theta), I(theta) for real x.
double r_of(double x, double th) noexcept { return 1.0 - x * std::exp(-std::cos(th)) * std::cos(th + std::sin(th)); }
double i_of(double x, double th) noexcept { return x * std::exp(-std::cos(th)) * std::sin(th + std::sin(th)); }

double guard_denominator(double den, double th) {
    if (!(std::abs(den) >= 1e-300)) {
        std::ostringstream os;
        os.precision(17);
        os << "integrand denominator vanishes at theta = " << th;
        throw NonFiniteError(os.str());
    }
    return den;
}

Complex stieltjes_weight(Complex z, double g) { return 1.0 + z * g; }

std::array<RepresentationInfo, 21> build_table() {
    using D = Domain;
    using K = Domain::Kind;
    const D cut{K::CutPlane, 0, 0};
    const D cut_nz{K::CutPlaneNonzero, 0, 0};
    const D poisson{K::RealInterval, -kInvE, kE};
    const double inf = std::numeric_limits<double>::infinity();
    using R = RepresentationId;
    using T = Target;
    return {{
        {R::StieltjesWOverZ, "stieltjes-w-over-z", T::WOverZ, cut, Rule::MidpointPeriodic, false},
        {R::WPrime, "w-prime", T::WPrime, cut, Rule::MidpointPeriodic, false},
        {R::InvOnePlusW, "inv-one-plus-w", T::InvOnePlusW, cut, Rule::MidpointPeriodic, false},
        {R::InvW, "inv-w", T::InvW, cut_nz, Rule::Adaptive, false},
        {R::WLogForm, "w-log-form", T::W, cut_nz, Rule::Adaptive, false},
        {R::ThorinW, "thorin", T::W, cut, Rule::MidpointPeriodic, false},
        {R::BernsteinW, "bernstein", T::W, {K::RightHalfClosed, 0, 0}, Rule::SemiInfinite, false},
        {R::PickW, "pick-w", T::W, cut, Rule::MidpointPeriodic, false},
        {R::PickExpForm, "pick-exp-form", T::WOverZ, cut, Rule::MidpointPeriodic, false},
        {R::PickWOverZ, "pick-w-over-z", T::WOverZ, cut, Rule::MidpointPeriodic, false},
        {R::PickZOverW, "pick-z-over-w", T::ZOverW, cut_nz, Rule::Adaptive, false},
        {R::CauerZ2, "cauer-z2", T::WOverZ, {K::RightHalfOpen, 0, 0}, Rule::Adaptive, false},
        {R::Poisson1, "poisson1", T::W, poisson, Rule::Adaptive, true},
        {R::Poisson2, "poisson2", T::W, poisson, Rule::Adaptive, true},
        {R::PoissonWright, "poisson-wright", T::W, {K::RealInterval, 0.0, kE}, Rule::Adaptive, true},
        {R::BSLogModulus, "bs-log-modulus", T::W, poisson, Rule::Adaptive, true},
        {R::BSArctan, "bs-arctan", T::W, poisson, Rule::Adaptive, true},
        {R::BSSiewertComplex, "bs-siewert-complex", T::W, {K::OffNegativeAxis, 0, 0}, Rule::SemiInfinite, false},
        {R::BSSiewertReal2, "bs-siewert-real2", T::W, {K::RealInterval, kInvE, inf}, Rule::SemiInfinite, true},
        {R::BSSiewertReal3, "bs-siewert-real3", T::W, {K::RealInterval, kInvE, inf}, Rule::SemiInfinite, true},
        {R::BSBranchM1, "bs-branch-m1", T::WBranchM1,
         {K::RealInterval, -kInvE, branch_m1_window_hi(kDefaultBranchC)}, Rule::MidpointPeriodic, true},
    }};
}

const std::array<RepresentationInfo, 21>& table() {
    static const std::array<RepresentationInfo, 21> t = build_table();
    return t;
}

void require_domain(RepresentationId id, Complex z, double c) {
    const RepresentationInfo& in = info(id);
    Domain d = in.domain;
    if (id == RepresentationId::BSBranchM1) {
        if (!(c > 1.0) || !std::isfinite(c)) throw DomainError("bs-branch-m1: c must be a finite number > 1");
        d.hi = branch_m1_window_hi(c);
    }
    if (!d.contains(z))
        throw DomainError(std::string(in.tag) + ": z = " + describe(z) + " is outside " + d.describe());
}

// Integrate one form with the given spec; semi-infinite forms are mapped onto (0, 1).
QuadResult run(const IntegralForm& form, QuadratureSpec spec) {
    if (spec.rule == Rule::SemiInfinite) spec.rule = Rule::Adaptive;
    if (form.semi_infinite) return quad::integrate(quad::map_semi_infinite(form.f), 0.0, 1.0, spec);
    return quad::integrate(form.f, form.a, form.b, spec);
}

struct Raw {
    Complex value{};
    double err = 0.0;
    long nodes = 0;
    bool converged = true;
};

Raw integrate_forms(RepresentationId id, Complex z, const QuadratureSpec& spec, double c = kDefaultBranchC) {
    Raw raw;
    for (const IntegralForm& f : integral_forms(id, z, c)) {
        const QuadResult r = run(f, spec);
        raw.value += r.value;
        raw.err += r.err_estimate;
        raw.nodes += r.nodes_used;
        raw.converged = raw.converged && r.converged;
    }
    return raw;
}

EvalResult make(RepresentationId id, Complex value, double err, const Raw& raw) {
    EvalResult out;
    out.value = value;
    out.err_estimate = err;
    out.nodes_used = raw.nodes;
    out.rep = id;
    out.target = info(id).target;
    out.converged = raw.converged;
    if (!is_finite(value)) throw NonFiniteError(std::string(info(id).tag) + ": result is not finite");
    return out;
}

// value = J
EvalResult direct(RepresentationId id, Complex z, const QuadratureSpec& spec) {
    const Raw raw = integrate_forms(id, z, spec);
    return make(id, raw.value, raw.err, raw);
}

// value = 1 + (ln z - 1) exp(J)
EvalResult siewert(RepresentationId id, Complex z, const QuadratureSpec& spec) {
    const Raw raw = integrate_forms(id, z, spec);
    const Complex lm1 = std::log(z) - 1.0;
    const Complex factor = lm1 * std::exp(raw.value);
    return make(id, 1.0 + factor, std::abs(factor) * raw.err, raw);
}

Complex branch_m1_sum(double x, double c, long n) {
    const double h = 2.0 * kPi / static_cast<double>(n);
    std::vector<Complex> vals(static_cast<std::size_t>(n));
    double prev_arg = 0.0;
    for (long j = 0; j < n; ++j) {
        const double th = -kPi + (static_cast<double>(j) + 0.5) * h;
        const Complex e = std::polar(1.0, th);
        const Complex zeta = -c + (c - 1.0) * e;
        const Complex f = zeta - x * std::exp(-zeta);
        const Complex hz = f / (zeta * ((c - 1.0) * e));
        double arg = std::arg(hz);
        if (j > 0) {
            // Keep the logarithm continuous along the contour.
            arg += 2.0 * kPi * std::round((prev_arg - arg) / (2.0 * kPi));
        }
        prev_arg = arg;
        const Complex lg{std::log(std::abs(hz)), arg};
        vals[static_cast<std::size_t>(j)] = lg * (c - 1.0) * e;
    }
    return h / (2.0 * kPi) * quad::pairwise_sum(vals);
}

}  // namespace

std::string_view target_name(Target t) noexcept {
    switch (t) {
        case Target::W: return "W";
        case Target::WPrime: return "WPrime";
        case Target::WOverZ: return "WOverZ";
        case Target::InvOnePlusW: return "InvOnePlusW";
        case Target::InvW: return "InvW";
        case Target::ZOverW: return "ZOverW";
        case Target::WBranchM1: return "WBranchM1";
    }
    return "?";
}

bool Domain::contains(Complex z) const noexcept {
    if (!is_finite(z)) return false;
    const bool real = z.imag() == 0.0;
    switch (kind) {
        case Kind::CutPlane: return !(real && z.real() <= -kInvE);
        case Kind::CutPlaneNonzero: return !(real && z.real() <= -kInvE) && z != Complex(0.0);
        case Kind::RightHalfClosed: return z.real() >= 0.0;
        case Kind::RightHalfOpen: return z.real() > 0.0;
        case Kind::RealInterval: return real && z.real() > lo && z.real() < hi;
        case Kind::OffNegativeAxis: return !(real && z.real() <= 0.0);
    }
    return false;
}

std::string Domain::describe() const {
    std::ostringstream os;
    os.precision(10);
    switch (kind) {
        case Kind::CutPlane: os << "the cut plane C \\ (-inf, -1/e]"; break;
        case Kind::CutPlaneNonzero: os << "the cut plane C \\ (-inf, -1/e] without 0"; break;
        case Kind::RightHalfClosed: os << "the closed half-plane Re z >= 0"; break;
        case Kind::RightHalfOpen: os << "the open half-plane Re z > 0"; break;
        case Kind::RealInterval: os << "the real interval (" << lo << ", " << hi << ")"; break;
        case Kind::OffNegativeAxis: os << "C \\ (-inf, 0]"; break;
    }
    return os.str();
}

std::span<const RepresentationInfo> all_representations() noexcept { return table(); }

const RepresentationInfo& info(RepresentationId id) noexcept { return table()[static_cast<std::size_t>(id)]; }

RepresentationId parse_representation(std::string_view tag) {
    for (const RepresentationInfo& r : table())
        if (r.tag == tag) return r.id;
    throw SpecError("unknown representation '" + std::string(tag) + "'");
}

QuadratureSpec default_spec(RepresentationId id, double tol) { return quad::default_spec(info(id).default_rule, tol); }

Complex oracle_value(Target target, Complex z) {
    switch (target) {
        case Target::W: return oracle::w_principal(z);
        case Target::WPrime: return oracle::w_derivative(z);
        case Target::WOverZ: return z == Complex(0.0) ? Complex(1.0) : oracle::w_principal(z) / z;
        case Target::InvOnePlusW: return 1.0 / (1.0 + oracle::w_principal(z));
        case Target::InvW:
            if (z == Complex(0.0)) throw DomainError("1/W is singular at z = 0");
            return 1.0 / oracle::w_principal(z);
        case Target::ZOverW: return z == Complex(0.0) ? Complex(1.0) : z / oracle::w_principal(z);
        case Target::WBranchM1:
            if (z.imag() != 0.0) throw DomainError("W-1 is only available on the real axis");
            return oracle::w_branch_m1(z.real());
    }
    throw SpecError("unknown target");
}

double branch_m1_window_hi(double c) { return -(2.0 * c - 1.0) * std::exp(1.0 - 2.0 * c); }

namespace kernel {

double g(double v) noexcept { return sinc(v) * std::exp(oracle::detail::v_cot_v(v)); }

double n(double v) noexcept {
    const double d = one_minus_vcot(v);
    return v * v + d * d;
}

double n_s2(double v) noexcept {
    const double s = std::sin(v);
    double d;
    if (std::abs(v) < 1e-3) {
        const double v2 = v * v;
        d = v2 / 3.0 - v2 * v2 / 30.0;
    } else {
        d = s / v - std::cos(v);
    }
    return s * s + d * d;
}

}  // namespace kernel

const PickConstants& pick_constants() {
    static const PickConstants k = [] {
        const Complex w = oracle::w_principal(kI);
        return PickConstants{w.real(), w.imag(), std::exp(-w.real()), (kI / w).real()};
    }();
    return k;
}

Complex pick_kernel(const PickKernelPoint& p) {
    if (!(p.v > 0.0 && p.v < kPi)) throw DomainError("pick_kernel: v must lie in (0, pi)");
    const double g = kernel::g(p.v);
    return kernel::n(p.v) * (g - p.z) * g * g / (stieltjes_weight(p.z, g) * (1.0 + g * g));
}

std::vector<IntegralForm> integral_forms(RepresentationId id, Complex z, double c) {
    using R = RepresentationId;
    require_domain(id, z, c);
    const double ip = 1.0 / kPi;
    const double x = z.real();
    std::vector<IntegralForm> out;
    auto add = [&](quad::Integrand f, double a, double b) { out.push_back({std::move(f), a, b, false}); };
    auto add_inf = [&](quad::Integrand f) { out.push_back({std::move(f), 0.0, 0.0, true}); };

    switch (id) {
        case R::StieltjesWOverZ:
            add([=](double v) -> Complex {
                const double g = kernel::g(v);
                return ip * kernel::n(v) * g / stieltjes_weight(z, g);
            }, 0.0, kPi);
            break;
        case R::WPrime:
            add([=](double v) -> Complex {
                const double g = kernel::g(v);
                return ip * g / stieltjes_weight(z, g);
            }, 0.0, kPi);
            break;
        case R::InvOnePlusW:
            add([=](double v) -> Complex { return ip / stieltjes_weight(z, kernel::g(v)); }, 0.0, kPi);
            break;
        case R::InvW:
        case R::WLogForm:
            add([=](double v) -> Complex { return ip * kernel::n_s2(v) / stieltjes_weight(z, kernel::g(v)); }, 0.0,
                kPi);
            break;
        case R::ThorinW:
            add([=](double v) -> Complex {
                const Complex a = stieltjes_weight(z, kernel::g(v));
                if (a.imag() == 0.0 && a.real() <= 0.0)
                    throw DomainError("thorin: logarithm argument crossed the principal-branch cut");
                return ip * std::log(a);
            }, 0.0, kPi);
            break;
        case R::PickW:
        case R::PickExpForm:
            add([=](double v) -> Complex {
                const double g = kernel::g(v);
                return -ip * kernel::n(v) * (g - z) * g / (stieltjes_weight(z, g) * (1.0 + g * g));
            }, 0.0, kPi);
            break;
        case R::PickWOverZ:
            add([=](double v) -> Complex { return ip * pick_kernel({z, v}); }, 0.0, kPi);
            break;
        case R::PickZOverW:
            add([=](double v) -> Complex {
                const double g = kernel::g(v);
                return ip * kernel::n_s2(v) * (g - z) / (stieltjes_weight(z, g) * (1.0 + g * g));
            }, 0.0, kPi);
            break;
        case R::CauerZ2:
            add([=](double v) -> Complex {
                const double tn = std::tan(v);
                const double vt = v * tn;
                const double m = v * v + (1.0 + vt) * (1.0 + vt);
                const double s = v / std::cos(v) * std::exp(vt);
                if (s <= 1.0) return 2.0 * ip * m * tn * s / (z * z + s * s);
                // Divide through by s^2 once s is large.
                const double q = std::cos(v) / v * std::exp(-vt);
                return 2.0 * ip * m * sinc(v) * std::exp(-vt) / (1.0 + z * z * q * q);
            }, 0.0, 0.5 * kPi);
            break;
        case R::Poisson1:
            add([=](double th) -> Complex {
                const double ec = x * std::exp(-std::cos(th));
                const double num = std::cos(1.5 * th) - ec * std::cos(2.5 * th + std::sin(th));
                const double den = guard_denominator(1.0 - 2.0 * ec * std::cos(th + std::sin(th)) + ec * ec, th);
                return 2.0 * ip * num / den * std::cos(0.5 * th);
            }, 0.0, kPi);
            break;
        case R::Poisson2:
            add([=](double th) -> Complex {
                const double ec = x * std::exp(std::cos(th));
                const double num = std::sin(1.5 * th) + ec * std::sin(2.5 * th - std::sin(th));
                const double den = guard_denominator(1.0 + 2.0 * ec * std::cos(th - std::sin(th)) + ec * ec, th);
                return -2.0 * ip * num / den * std::sin(0.5 * th);
            }, 0.0, kPi);
            break;
        case R::PoissonWright: {
            const double lx = std::log(x);
            add([=](double t) -> Complex {
                const double a = lx + t - std::log(t);
                return (t - 1.0) / (kPi * kPi + a * a);
            }, 0.0, 1.0);
            add([=](double th) -> Complex {
                const double num = std::cos(0.5 * th) + th * std::sin(1.5 * th) - std::cos(1.5 * th) * lx;
                const double den =
                    guard_denominator(1.0 + 2.0 * th * std::sin(th) + th * th - 2.0 * std::cos(th) * lx + lx * lx, th);
                return 2.0 * ip * num / den * std::cos(0.5 * th);
            }, 0.0, kPi);
            break;
        }
        case R::BSLogModulus:
            add([=](double th) -> Complex {
                const double r = r_of(x, th);
                const double i = i_of(x, th);
                return 0.5 * ip * std::log(r * r + i * i);
            }, 0.0, kPi);
            break;
        case R::BSArctan:
            add([=](double th) -> Complex {
                const double r = r_of(x, th);
                const double i = i_of(x, th);
                return 0.5 * ip * (2.0 * std::atan2(i, r) * std::sin(th) - std::log(r * r + i * i) * std::cos(th));
            }, 0.0, kPi);
            break;
        case R::BSSiewertComplex: {
            const Complex lz = std::log(z);
            add_inf([=](double t) -> Complex {
                const Complex a = lz + t - std::log(t);
                const Complex d = std::log(a + kI * kPi) - std::log(a - kI * kPi);
                return kI / (2.0 * kPi) * d / (1.0 + t);
            });
            break;
        }
        case R::BSSiewertReal2: {
            const double lx = std::log(x);
            add_inf([=](double t) -> Complex {
                const double a = lx + t - std::log(t);
                return -ip * std::atan(kPi / a) / (1.0 + t);
            });
            break;
        }
        case R::BSSiewertReal3: {
            const double lx = std::log(x);
            add_inf([=](double t) -> Complex {
                const double a = lx + t - std::log(t);
                const double k = t == 0.0 ? 1.0 : std::log1p(t) / t;
                return -(t - 1.0) / (kPi * kPi + a * a) * k;
            });
            break;
        }
        case R::BernsteinW:
        case R::BSBranchM1: break;
    }
    return out;
}

EvalResult stieltjes_w_over_z(Complex z, const QuadratureSpec& spec) {
    return direct(RepresentationId::StieltjesWOverZ, z, spec);
}

EvalResult w_prime(Complex z, const QuadratureSpec& spec) { return direct(RepresentationId::WPrime, z, spec); }

EvalResult inv_one_plus_w(Complex z, const QuadratureSpec& spec) {
    return direct(RepresentationId::InvOnePlusW, z, spec);
}

EvalResult inv_w(Complex z, const QuadratureSpec& spec) {
    const auto id = RepresentationId::InvW;
    const Raw raw = integrate_forms(id, z, spec);
    return make(id, 1.0 / z + raw.value, raw.err, raw);
}

EvalResult w_log_form(Complex z, const QuadratureSpec& spec) {
    const auto id = RepresentationId::WLogForm;
    const Raw raw = integrate_forms(id, z, spec);
    const Complex a = 1.0 + z * raw.value;
    return make(id, std::log(a), std::abs(z) * raw.err / std::abs(a), raw);
}

EvalResult thorin_w(Complex z, const QuadratureSpec& spec) { return direct(RepresentationId::ThorinW, z, spec); }

EvalResult pick_w(Complex z, const QuadratureSpec& spec) {
    const auto id = RepresentationId::PickW;
    const Raw raw = integrate_forms(id, z, spec);
    return make(id, pick_constants().alpha0 + raw.value, raw.err, raw);
}

EvalResult pick_exp_form(Complex z, const QuadratureSpec& spec) {
    const auto id = RepresentationId::PickExpForm;
    const Raw raw = integrate_forms(id, z, spec);
    const Complex v = pick_constants().gamma0 * std::exp(-raw.value);
    return make(id, v, std::abs(v) * raw.err, raw);
}

EvalResult pick_w_over_z(Complex z, const QuadratureSpec& spec) {
    const auto id = RepresentationId::PickWOverZ;
    const Raw raw = integrate_forms(id, z, spec);
    return make(id, pick_constants().beta0 + raw.value, raw.err, raw);
}

EvalResult pick_z_over_w(Complex z, const QuadratureSpec& spec) {
    const auto id = RepresentationId::PickZOverW;
    const Raw raw = integrate_forms(id, z, spec);
    return make(id, pick_constants().eta0 - raw.value, raw.err, raw);
}

EvalResult cauer_w_over_z(Complex z, const QuadratureSpec& spec) { return direct(RepresentationId::CauerZ2, z, spec); }

EvalResult poisson_1(double x, const QuadratureSpec& spec) { return direct(RepresentationId::Poisson1, x, spec); }

EvalResult poisson_2(double x, const QuadratureSpec& spec) { return direct(RepresentationId::Poisson2, x, spec); }

EvalResult poisson_wright(double x, const QuadratureSpec& spec) {
    return direct(RepresentationId::PoissonWright, x, spec);
}

EvalResult bs_log_modulus(double x, const QuadratureSpec& spec) {
    return direct(RepresentationId::BSLogModulus, x, spec);
}

EvalResult bs_arctan(double x, const QuadratureSpec& spec) { return direct(RepresentationId::BSArctan, x, spec); }

EvalResult bs_siewert_complex(Complex z, const QuadratureSpec& spec) {
    return siewert(RepresentationId::BSSiewertComplex, z, spec);
}

EvalResult bs_siewert_real_arctan(double x, const QuadratureSpec& spec) {
    return siewert(RepresentationId::BSSiewertReal2, x, spec);
}

EvalResult bs_siewert_real_parts(double x, const QuadratureSpec& spec) {
    return siewert(RepresentationId::BSSiewertReal3, x, spec);
}

EvalResult bs_branch_m1(double x, double c, const QuadratureSpec& spec) {
    const auto id = RepresentationId::BSBranchM1;
    spec.validate();
    require_domain(id, x, c);
    // W-1 = -c - (1/2 pi i) oint log H dzeta with H = F/(zeta (zeta + c)); the
    // log(zeta) and log(zeta + c) parts integrate in closed form.
    long n = std::max(64L, static_cast<long>(spec.nodes));
    Raw raw;
    Complex prev = branch_m1_sum(x, c, n);
    raw.nodes = n;
    raw.converged = false;
    Complex cur = prev;
    for (int k = 0; k < spec.max_refinements; ++k) {
        n *= 2;
        cur = branch_m1_sum(x, c, n);
        raw.nodes += n;
        raw.err = std::abs(cur - prev);
        if (raw.err <= spec.tol) {
            raw.converged = true;
            break;
        }
        prev = cur;
    }
    return make(id, -c - cur, raw.err, raw);
}

double varphi(double xi, const QuadratureSpec& spec) {
    if (!(xi >= 0.0) || !std::isfinite(xi)) throw DomainError("varphi: xi must be finite and >= 0");
    if (xi == 0.0) return 1.0;
    const QuadResult r = quad::integrate(
        [xi](double v) -> Complex { return std::exp(-xi / kernel::g(v)) / kPi; }, 0.0, kPi, spec);
    return r.value.real();
}

EvalResult bernstein_w(Complex z, const QuadratureSpec& spec_outer, const QuadratureSpec& spec_inner) {
    const auto id = RepresentationId::BernsteinW;
    spec_outer.validate();
    spec_inner.validate();
    require_domain(id, z, kDefaultBranchC);

    // Fixed composite Gauss rule for phi, shared by every outer node.
    const quad::GaussRule rule = quad::gauss_legendre_rule(spec_inner.nodes);
    const long panels = spec_inner.max_refinements;
    std::vector<double> weight;
    std::vector<double> inv_g;
    const double h = kPi / static_cast<double>(panels);
    for (long p = 0; p < panels; ++p) {
        const double mid = (static_cast<double>(p) + 0.5) * h;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            weight.push_back(0.5 * h * rule.weights[i] / kPi);
            inv_g.push_back(1.0 / kernel::g(mid + 0.5 * h * rule.nodes[i]));
        }
    }
    std::unordered_map<double, double> memo;
    auto phi = [&](double xi) {
        auto it = memo.find(xi);
        if (it != memo.end()) return it->second;
        std::vector<Complex> terms(weight.size());
        for (std::size_t k = 0; k < weight.size(); ++k) terms[k] = weight[k] * std::exp(-xi * inv_g[k]);
        const double v = quad::pairwise_sum(terms).real();
        memo.emplace(xi, v);
        return v;
    };
    auto outer = [&](double xi) -> Complex {
        if (xi == 0.0) return z;
        const Complex q = z * xi;
        Complex kern;
        if (std::abs(q) < 1e-3)
            kern = z * (1.0 - q / 2.0 + q * q / 6.0 - q * q * q / 24.0);
        else
            kern = (1.0 - std::exp(-q)) / xi;
        return kern * phi(xi);
    };
    QuadratureSpec s = spec_outer;
    if (s.rule == Rule::SemiInfinite) s.rule = Rule::Adaptive;
    const QuadResult r = quad::integrate(quad::map_semi_infinite(outer), 0.0, 1.0, s);
    Raw raw;
    raw.nodes = r.nodes_used * static_cast<long>(weight.size());
    raw.converged = r.converged;
    return make(id, r.value, r.err_estimate, raw);
}

EvalResult bernstein_w(Complex z, const QuadratureSpec& spec_outer) {
    return bernstein_w(z, spec_outer, {Rule::GaussLegendre, 64, spec_outer.tol, 4});
}

EvalResult evaluate(RepresentationId id, Complex z, const QuadratureSpec& spec, double c) {
    using R = RepresentationId;
    const RepresentationInfo& in = info(id);
    if (in.real_only && z.imag() != 0.0)
        throw DomainError(std::string(in.tag) + ": argument must be real");
    switch (id) {
        case R::StieltjesWOverZ: return stieltjes_w_over_z(z, spec);
        case R::WPrime: return w_prime(z, spec);
        case R::InvOnePlusW: return inv_one_plus_w(z, spec);
        case R::InvW: return inv_w(z, spec);
        case R::WLogForm: return w_log_form(z, spec);
        case R::ThorinW: return thorin_w(z, spec);
        case R::BernsteinW: return bernstein_w(z, spec);
        case R::PickW: return pick_w(z, spec);
        case R::PickExpForm: return pick_exp_form(z, spec);
        case R::PickWOverZ: return pick_w_over_z(z, spec);
        case R::PickZOverW: return pick_z_over_w(z, spec);
        case R::CauerZ2: return cauer_w_over_z(z, spec);
        case R::Poisson1: return poisson_1(z.real(), spec);
        case R::Poisson2: return poisson_2(z.real(), spec);
        case R::PoissonWright: return poisson_wright(z.real(), spec);
        case R::BSLogModulus: return bs_log_modulus(z.real(), spec);
        case R::BSArctan: return bs_arctan(z.real(), spec);
        case R::BSSiewertComplex: return bs_siewert_complex(z, spec);
        case R::BSSiewertReal2: return bs_siewert_real_arctan(z.real(), spec);
        case R::BSSiewertReal3: return bs_siewert_real_parts(z.real(), spec);
        case R::BSBranchM1: return bs_branch_m1(z.real(), c, spec);
    }
    throw SpecError("unknown representation");
}

}  // namespace lwik::rep
