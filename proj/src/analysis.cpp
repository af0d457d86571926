#include "lwik/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "lwik/representations.hpp"
#include "lwik/w_oracle.hpp"

namespace lwik::analysis {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double w(double x) { return oracle::w_principal_real(x); }

// Im W(-1/t) for 0 <= t <= e.
double im_w_of_inverse(double t) {
    if (t <= 1e-300) return kPi;
    return oracle::im_w_on_cut(-1.0 / t);
}

double factorial(int n) { return std::tgamma(n + 1.0); }

// e^d - 1 without cancellation for small |d|.
Complex expm1c(Complex d) {
    const double half = std::sin(0.5 * d.imag());
    return {std::expm1(d.real()) * std::cos(d.imag()) - 2.0 * half * half, std::exp(d.real()) * std::sin(d.imag())};
}

// delta = W(a(1+z)) - W(a), refined by Newton on
// w0 (e^delta - 1) + delta e^delta = w0 z so that it keeps full relative accuracy as z -> 0.
Complex w_increment(double a, Complex z, Complex w1) {
    const double w0 = w(a);
    Complex d = w1 - w0;
    if (std::abs(z) >= 0.5) return d;
    if (std::abs(d) < 1e-3 * std::abs(z) * w0 / (1.0 + w0)) d = w0 * z / (1.0 + w0);
    for (int it = 0; it < 50; ++it) {
        const Complex ed = std::exp(d);
        const Complex h = w0 * expm1c(d) + d * ed - w0 * z;
        const Complex step = h / (ed * (1.0 + w0 + d));
        d -= step;
        if (std::abs(step) <= 4.0 * kEps * std::abs(d)) break;
    }
    return d;
}

void check_sokal_a(double a) {
    if (!(a > 0.0 && a <= kE)) throw DomainError("Sokal functions require a in (0, e]");
}

bool on_w_cut(Complex y) { return y.imag() == 0.0 && y.real() < -kInvE; }

// Central difference quotient of order n with step h.
double difference(const RealFunction& f, double x, int n, double h, double* fmax) {
    double sum = 0.0;
    double binom = 1.0;
    double mx = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double fx = f(x + (0.5 * n - k) * h);
        mx = std::max(mx, std::abs(fx));
        sum += ((k % 2 == 0) ? 1.0 : -1.0) * binom * fx;
        binom = binom * (n - k) / (k + 1.0);
    }
    if (fmax) *fmax = mx;
    return sum / std::pow(h, n);
}

struct Family {
    std::string formula;
    std::size_t arity;
    std::vector<std::vector<double>> defaults;
    std::function<double(double, const std::vector<double>&)> f;
    bool expect_cm = true;
};

const std::map<std::string, Family, std::less<>>& families() {
    static const std::map<std::string, Family, std::less<>> m = [] {
        std::map<std::string, Family, std::less<>> r;
        using P = const std::vector<double>&;
        r["stieltjes-a"] = {"1/(c + W(x))", 1, {{0.5}, {2.0}}, [](double x, P p) { return 1.0 / (p[0] + w(x)); }};
        r["stieltjes-b"] = {"W(1/x)^alpha", 1, {{0.3}, {0.7}}, [](double x, P p) { return std::pow(w(1.0 / x), p[0]); }};
        r["stieltjes-c"] = {"x^beta W(1/x)^beta", 1, {{-0.3}, {-0.7}},
                            [](double x, P p) { return std::pow(x * w(1.0 / x), p[0]); }};
        r["stieltjes-d"] = {"W(x) / (x (c + W(x)))", 1, {{0.5}, {2.0}}, [](double x, P p) {
                                const double wx = w(x);
                                return wx / (x * (p[0] + wx));
                            }};
        r["stieltjes-e"] = {"1/W(x) - 1/x", 0, {{}}, [](double x, P) { return 1.0 / w(x) - 1.0 / x; }};
        r["stieltjes-f"] = {"c + W(x^beta)", 2, {{0.5, -0.3}, {1.0, -0.8}},
                            [](double x, P p) { return p[0] + w(std::pow(x, p[1])); }};
        r["stieltjes-g"] = {"1/(c + W(x^alpha))", 2, {{0.5, 0.3}, {2.0, 0.8}},
                            [](double x, P p) { return 1.0 / (p[0] + w(std::pow(x, p[1]))); }};
        r["stieltjes-h"] = {"x^(alpha beta gamma) W(x^beta)^(-alpha gamma) (1 + W(x^beta))^(1 - gamma)", 3,
                            {{0.5, -0.5, 0.5}, {0.3, -0.8, 0.7}}, [](double x, P p) {
                                const double a = p[0], b = p[1], g = p[2];
                                const double wb = w(std::pow(x, b));
                                return std::pow(x, a * b * g) * std::pow(wb, -a * g) * std::pow(1.0 + wb, 1.0 - g);
                            }};
        r["stieltjes-i"] = {"1/(c + x^alpha)", 2, {{0.5, 0.3}, {2.0, 0.8}},
                            [](double x, P p) { return 1.0 / (p[0] + std::pow(x, p[1])); }};
        r["stieltjes-j"] = {"1 - x^alpha W(1/x)^alpha", 1, {{0.3}, {0.7}},
                            [](double x, P p) { return -std::expm1(p[0] * std::log(x * w(1.0 / x))); }};
        r["stieltjes-k"] = {"1 - x^(-alpha beta) W(x^beta)^alpha (1 + W(x^beta))^(-alpha)", 2,
                            {{0.5, -0.5}, {0.3, -0.8}}, [](double x, P p) {
                                const double a = p[0], b = p[1];
                                const double y = std::pow(x, b);
                                const double wb = w(y);
                                return -std::expm1(a * (std::log(wb / y) - std::log1p(wb)));
                            }};
        r["cm-a"] = {"x^lambda W(x)", 1, {{-1.5}, {-2.5}}, [](double x, P p) { return std::pow(x, p[0]) * w(x); }};
        r["cm-b"] = {"x^lambda W(x^beta)^alpha (1 + W(x^beta))^gamma", 4,
                     {{-0.5, 1.0, -0.5, 0.5}, {-1.0, 2.0, -0.3, 1.5}}, [](double x, P p) {
                         const double wb = w(std::pow(x, p[2]));
                         return std::pow(x, p[0]) * std::pow(wb, p[1]) * std::pow(1.0 + wb, p[3]);
                     }};
        r["cm-c"] = {"x^lambda W(x^-beta)^alpha (1 + W(x^-beta))^gamma", 4,
                     {{-0.5, -1.0, -0.5, -0.5}, {-0.2, -0.7, -0.3, -1.5}}, [](double x, P p) {
                         const double wb = w(std::pow(x, -p[2]));
                         return std::pow(x, p[0]) * std::pow(wb, p[1]) * std::pow(1.0 + wb, p[3]);
                     }};
        r["cm-d"] = {"1 - x^(-alpha beta gamma) W(x^beta)^(alpha gamma) (1 + W(x^beta))^(gamma - 1)", 3,
                     {{0.5, -0.5, 0.5}, {0.3, -0.8, 0.7}}, [](double x, P p) {
                         const double a = p[0], b = p[1], g = p[2];
                         const double y = std::pow(x, b);
                         const double wb = w(y);
                         return -std::expm1(a * g * std::log(wb / y) + (g - 1.0) * std::log1p(wb));
                     }};
        r["w-over-x"] = {"W(x)/x", 0, {{}}, [](double x, P) { return w(x) / x; }};
        r["varphi"] = {"(1/pi) int_0^pi exp(-x v csc v e^{-v cot v}) dv", 0, {{}}, [](double x, P) {
                           return rep::varphi(x, {quad::Rule::MidpointPeriodic, 16, 1e-16, 14});
                       }};
        Family neg{"W(x)", 0, {{}}, [](double x, P) { return w(x); }};
        neg.expect_cm = false;
        r["w"] = neg;
        return r;
    }();
    return m;
}

std::string describe_params(std::span<const double> p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    return os.str();
}

}  // namespace

// Stieltjes measure and moments.

double phi_measure(double u, const quad::QuadratureSpec& spec) {
    if (!(u >= 0.0 && u <= kE)) throw DomainError("phi_measure: u must lie in [0, e]");
    if (u == 0.0) return 0.0;
    // t = e - s^2 removes the square-root behaviour at t = e.
    const double s_lo = std::sqrt(std::max(0.0, kE - u));
    const double s_hi = std::sqrt(kE);
    if (!(s_hi > s_lo)) return 0.0;
    const auto r = quad::integrate(
        [](double s) -> Complex { return im_w_of_inverse(kE - s * s) * 2.0 * s / kPi; }, s_lo, s_hi, spec);
    return r.value.real();
}

double moment_exact(int n) {
    if (n < 0) throw SpecError("moment index must be >= 0");
    return std::pow(n + 1.0, n - 1.0) / factorial(n);
}

bool MomentTable::hankel_positive() const noexcept {
    return std::all_of(hankel.begin(), hankel.end(), [](double d) { return d > 0.0; }) &&
           std::all_of(hankel_shifted.begin(), hankel_shifted.end(), [](double d) { return d > 0.0; });
}

MomentTable stieltjes_moments(int N, const quad::QuadratureSpec& spec) {
    if (N < 0) throw SpecError("stieltjes_moments: N must be >= 0");
    MomentTable t;
    t.N = N;
    const double s_hi = std::sqrt(kE);
    for (int n = 0; n <= N; ++n) {
        const auto r = quad::integrate(
            [n](double s) -> Complex {
                const double tt = kE - s * s;
                return std::pow(tt, n) * im_w_of_inverse(tt) * 2.0 * s / kPi;
            },
            0.0, s_hi, spec);
        t.moments.push_back(r.value.real());
        t.quad_err = std::max(t.quad_err, r.err_estimate);
    }
    t.hankel = hankel_determinants(t.moments, std::min(N / 2, 5));
    if (N >= 1) t.hankel_shifted = hankel_determinants(t.moments, std::min((N - 1) / 2, 5), 1);
    return t;
}

std::vector<double> hankel_determinants(std::span<const double> m, int max_order, int offset) {
    std::vector<double> out;
    for (int k = 0; k <= max_order; ++k) {
        if (offset + 2 * k >= static_cast<int>(m.size())) break;
        Eigen::MatrixXd h(k + 1, k + 1);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) h(i, j) = m[static_cast<std::size_t>(offset + i + j)];
        out.push_back(h.determinant());
    }
    return out;
}

// Padé approximants.

double w_over_z_coefficient(int k) {
    if (k < 0) throw SpecError("coefficient index must be >= 0");
    return static_cast<double>(std::pow(-static_cast<long double>(k + 1), k) / std::tgamma(static_cast<long double>(k + 2)));
}

Complex PadeApproximant::operator()(Complex z) const {
    Complex p = 0.0;
    for (auto it = num_coeffs.rbegin(); it != num_coeffs.rend(); ++it) p = p * z + *it;
    Complex q = 0.0;
    for (auto it = den_coeffs.rbegin(); it != den_coeffs.rend(); ++it) q = q * z + *it;
    if (q == Complex(0.0)) throw PoleError("Padé approximant evaluated at a pole");
    return p / q;
}

bool PadeApproximant::poles_real(double tol) const noexcept {
    return std::all_of(poles.begin(), poles.end(), [tol](Complex p) { return std::abs(p.imag()) <= tol; });
}

std::vector<double> PadeApproximant::real_poles() const {
    std::vector<double> r;
    for (Complex p : poles) r.push_back(p.real());
    std::sort(r.begin(), r.end());
    return r;
}

PadeApproximant pade_w_over_z(int L, int M) {
    if (M < 1 || M > 8 || (L != M - 1 && L != M))
        throw SpecError("pade_w_over_z: need 1 <= M <= 8 and L in {M-1, M}");
    using LD = long double;
    std::vector<LD> c(static_cast<std::size_t>(L + M + 1));
    for (int k = 0; k <= L + M; ++k) c[k] = std::pow(-static_cast<LD>(k + 1), k) / std::tgamma(static_cast<LD>(k + 2));

    // sum_{j=0}^{M} q_j c_{k-j} = 0 for k = L+1 .. L+M, q_0 = 1.
    std::vector<std::vector<LD>> a(M, std::vector<LD>(M + 1));
    Eigen::MatrixXd ad(M, M);
    for (int r = 0; r < M; ++r) {
        const int k = L + 1 + r;
        for (int j = 0; j < M; ++j) {
            const int idx = k - (j + 1);
            a[r][j] = idx >= 0 ? c[idx] : 0.0L;
            ad(r, j) = static_cast<double>(a[r][j]);
        }
        a[r][M] = -c[k];
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(ad);
    const auto& sv = svd.singularValues();
    const double cond = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : std::numeric_limits<double>::infinity();
    if (!(cond < 1e15)) {
        std::ostringstream os;
        os << "Padé system [" << L << "/" << M << "] is numerically singular";
        throw SingularSystemError(os.str(), cond);
    }
    // Gaussian elimination with partial pivoting in extended precision.
    for (int col = 0; col < M; ++col) {
        int piv = col;
        for (int r = col + 1; r < M; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (a[piv][col] == 0.0L) throw SingularSystemError("Padé system has a zero pivot", cond);
        std::swap(a[piv], a[col]);
        for (int r = col + 1; r < M; ++r) {
            const LD f = a[r][col] / a[col][col];
            for (int j = col; j <= M; ++j) a[r][j] -= f * a[col][j];
        }
    }
    std::vector<LD> q(static_cast<std::size_t>(M + 1));
    q[0] = 1.0L;
    for (int r = M - 1; r >= 0; --r) {
        LD s = a[r][M];
        for (int j = r + 1; j < M; ++j) s -= a[r][j] * q[j + 1];
        q[r + 1] = s / a[r][r];
    }

    PadeApproximant out;
    out.L = L;
    out.M = M;
    out.condition = cond;
    for (LD v : q) out.den_coeffs.push_back(static_cast<double>(v));
    for (int k = 0; k <= L; ++k) {
        LD s = 0.0L;
        for (int j = 0; j <= std::min(k, M); ++j) s += q[j] * c[k - j];
        out.num_coeffs.push_back(static_cast<double>(s));
    }

    int deg = M;
    while (deg > 0 && q[deg] == 0.0L) --deg;
    if (deg > 0) {
        Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
        for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
        for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -static_cast<double>(q[i] / q[deg]);
        const Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
        using CL = std::complex<LD>;
        for (int i = 0; i < deg; ++i) {
            CL root(es.eigenvalues()(i).real(), es.eigenvalues()(i).imag());
            // Polish with Newton on the extended-precision denominator.
            for (int it = 0; it < 3; ++it) {
                CL p = 0.0L;
                CL dp = 0.0L;
                for (int j = deg; j >= 0; --j) {
                    dp = dp * root + p;
                    p = p * root + q[j];
                }
                if (dp == CL(0.0L)) break;
                root -= p / dp;
            }
            out.poles.emplace_back(static_cast<double>(root.real()), static_cast<double>(root.imag()));
        }
        std::sort(out.poles.begin(), out.poles.end(), [](Complex x, Complex y) { return x.real() > y.real(); });
    }
    return out;
}

bool strictly_interlace(std::span<const double> fewer, std::span<const double> more, double slack) {
    if (more.size() != fewer.size() + 1) return false;
    for (std::size_t i = 0; i < fewer.size(); ++i)
        if (!(more[i] + slack < fewer[i] && fewer[i] + slack < more[i + 1])) return false;
    return true;
}

// Sokal functions.

double sokal_residue(double a) {
    check_sokal_a(a);
    const double wa = w(a);
    return (1.0 + wa) * (1.0 + wa) / wa;
}

Complex sokal_f0(Complex z, double a) {
    check_sokal_a(a);
    if (z == Complex(0.0)) throw PoleError("F0 has a simple pole at z = 0");
    const Complex y = a * (1.0 + z);
    if (!is_finite(z) || on_w_cut(y) || y == Complex(-kInvE)) throw DomainError("F0: z lies on its branch cut");
    const Complex w1 = oracle::w_principal(y);
    const Complex d = w_increment(a, z, w1);
    // z/(1+z) W(a(1+z)) -> a z as z -> -1.
    const Complex lead = (1.0 + z == Complex(0.0)) ? a * z : z / (1.0 + z) * w1;
    return lead / (d * d);
}

Complex sokal_f1(Complex z, double a) {
    check_sokal_a(a);
    if (z == Complex(0.0)) throw PoleError("F1 has a simple pole at z = 0");
    if (!is_finite(z) || 1.0 + z == Complex(0.0)) throw DomainError("F1 is singular at z = -1");
    const Complex y = a / (1.0 + z);
    if (on_w_cut(y) || y == Complex(-kInvE)) throw DomainError("F1: z lies on its branch cut");
    const Complex w1 = oracle::w_principal(y);
    const Complex d = w_increment(a, -z / (1.0 + z), w1);
    return z * w1 / (d * d);
}

Complex sokal_f0_regular(Complex z, double a) { return sokal_f0(z, a) - sokal_residue(a) / z; }

Complex sokal_f1_regular(Complex z, double a) { return sokal_f1(z, a) - sokal_residue(a) / z; }

HerglotzReport anti_herglotz_grid_check(std::string function_id, const ComplexFunction& f,
                                        std::span<const Complex> grid, double slack) {
    HerglotzReport rep;
    rep.function_id = std::move(function_id);
    rep.slack = slack;
    rep.max_imag = -std::numeric_limits<double>::infinity();
    for (Complex z : grid) {
        if (!(z.imag() > 0.0)) throw DomainError("anti_herglotz_grid_check: grid points need Im z > 0");
        const double im = f(z).imag();
        if (im > rep.max_imag) {
            rep.max_imag = im;
            rep.worst_z = z;
        }
        ++rep.points;
    }
    return rep;
}

std::vector<Complex> upper_half_plane_grid(int n_radii, int n_angles, double r_min, double r_max) {
    std::vector<Complex> g;
    for (double r : log_grid(r_min, r_max, n_radii))
        for (int k = 0; k < n_angles; ++k) g.push_back(std::polar(r, kPi * (k + 0.5) / n_angles));
    return g;
}

// Complete monotonicity.

int CMReport::first_failing_order() const noexcept {
    int o = -1;
    for (const auto& v : violations)
        if (o < 0 || v.order < o) o = v.order;
    return o;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    if (!(lo > 0.0 && hi >= lo) || n < 1) throw SpecError("log_grid: need 0 < lo <= hi and n >= 1");
    std::vector<double> g;
    if (n == 1) return {lo};
    for (int i = 0; i < n; ++i) g.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    return g;
}

CMReport cm_check(std::string function_id, const RealFunction& f, int order, std::span<const double> grid) {
    if (order < 0 || order > 8) throw SpecError("cm_check: order must lie in 0..8");
    CMReport rep;
    rep.function_id = std::move(function_id);
    rep.orders_checked = order;
    rep.grid.assign(grid.begin(), grid.end());
    rep.max_margin = std::numeric_limits<double>::infinity();
    for (double x : grid) {
        if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("cm_check: grid points must be positive");
        const double fx = f(x);
        for (int n = 0; n <= order; ++n) {
            double value;
            double slack = 1e-10;
            if (n == 0) {
                value = fx;
            } else {
                const double h = 0.01 * x * std::pow(2.0, 0.5 * n);
                double fmax = 0.0;
                const double d = difference(f, x, n, h, &fmax);
                const double d_half = difference(f, x, n, 0.5 * h, nullptr);
                slack = std::max(1e-10, 1e-3 * h * h * std::abs(fx) * factorial(n));
                const double noise = 8.0 * kEps * std::pow(2.0, n) * fmax / std::pow(0.5 * h, n);
                if (noise > std::max(0.5 * std::abs(d), slack) || std::abs(d - d_half) > std::max(std::abs(d), slack)) {
                    std::ostringstream os;
                    os << rep.function_id << ": difference tower of order " << n << " at x = " << x
                       << " lost its significant digits";
                    throw StepTooSmallError(os.str());
                }
                value = d;
            }
            const double signed_value = (n % 2 == 0) ? value : -value;
            rep.max_margin = std::min(rep.max_margin, signed_value + slack);
            if (signed_value < -slack) rep.violations.push_back({n, x, signed_value});
        }
    }
    return rep;
}

std::vector<std::string> cm_function_ids() {
    std::vector<std::string> ids;
    for (const auto& [k, v] : families()) ids.push_back(k);
    return ids;
}

std::size_t cm_param_count(std::string_view id) {
    const auto it = families().find(id);
    if (it == families().end()) throw SpecError("unknown CM function '" + std::string(id) + "'");
    return it->second.arity;
}

CMFunction cm_function(std::string_view id, std::span<const double> params) {
    const auto it = families().find(id);
    if (it == families().end()) throw SpecError("unknown CM function '" + std::string(id) + "'");
    const Family& fam = it->second;
    std::vector<double> p(params.begin(), params.end());
    if (p.empty()) p = fam.defaults.front();
    if (p.size() != fam.arity) {
        std::ostringstream os;
        os << "CM function '" << id << "' takes " << fam.arity << " parameter(s), got " << p.size();
        throw SpecError(os.str());
    }
    CMFunction out;
    out.id = std::string(id);
    out.formula = fam.formula;
    out.params = p;
    out.expect_cm = fam.expect_cm;
    out.f = [f = fam.f, p](double x) { return f(x, p); };
    if (!p.empty()) out.id += "[" + describe_params(p) + "]";
    return out;
}

std::vector<CMFunction> cm_corpus() {
    std::vector<CMFunction> out;
    for (const auto& [id, fam] : families())
        for (const auto& p : fam.defaults) out.push_back(cm_function(id, p));
    return out;
}

// Definite integrals.

double IdentityResult::abs_error() const noexcept { return std::abs(computed - expected); }

double IdentityResult::rel_error() const noexcept { return abs_error() / std::abs(expected); }

IdentityResult nuttall_identity(int nu, const quad::QuadratureSpec& spec) {
    if (nu < 1 || nu > 12) throw SpecError("nuttall_identity: nu must lie in 1..12");
    const auto r = quad::integrate([nu](double v) -> Complex { return std::pow(rep::kernel::g(v), nu); }, 0.0, kPi,
                                   spec);
    IdentityResult out;
    out.name = "nuttall nu=" + std::to_string(nu);
    out.computed = r.value.real();
    out.expected = kPi * std::pow(nu, nu) / factorial(nu);
    out.err_estimate = r.err_estimate;
    return out;
}

std::vector<IdentityResult> closing_identities(const quad::QuadratureSpec& spec) {
    using rep::kernel::g;
    using rep::kernel::n;
    using rep::kernel::n_s2;
    auto run = [&](std::string name, quad::Integrand f, double b, double expected) {
        const auto r = quad::integrate(f, 0.0, b, spec);
        return IdentityResult{std::move(name), r.value.real(), expected, r.err_estimate};
    };
    std::vector<IdentityResult> out;
    out.push_back(run("w-over-z at e", [](double v) -> Complex { return kE * n(v) * g(v) / (1.0 + kE * g(v)); }, kPi,
                      kPi));
    out.push_back(run("inv-w at e", [](double v) -> Complex { return n_s2(v) / (1.0 + kE * g(v)); }, kPi,
                      (kE - 1.0) / kE * kPi));
    out.push_back(run("inv-one-plus-w at e", [](double v) -> Complex { return 1.0 / (1.0 + kE * g(v)); }, kPi,
                      0.5 * kPi));
    out.push_back(run("cauer at e",
                      [](double v) -> Complex {
                          const double tn = std::tan(v);
                          const double vt = v * tn;
                          const double m = v * v + (1.0 + vt) * (1.0 + vt);
                          const double s = v / std::cos(v) * std::exp(vt - 1.0);
                          if (s <= 1.0) return m * s * tn / (1.0 + s * s);
                          const double q = std::cos(v) / v * std::exp(1.0 - vt);
                          return m * std::sin(v) / v * std::exp(1.0 - vt) / (1.0 + q * q);
                      },
                      0.5 * kPi, 0.5 * kPi));
    return out;
}

double bernstein_levy_density(double xi, const quad::QuadratureSpec& spec) {
    if (!(xi > 0.0) || !std::isfinite(xi)) throw DomainError("bernstein_levy_density: xi must be > 0");
    return rep::varphi(xi, spec) / xi;
}

}  // namespace lwik::analysis
