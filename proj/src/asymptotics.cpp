#include "qpwalk/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "qpwalk/genfun.hpp"

namespace qpwalk {

namespace detail {

void fft_radix2(std::vector<cplx>& a, bool inverse) {
    const size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::domain_error("fft_radix2: size must be a power of two");
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
        const cplx wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            cplx w(1.0);
            for (size_t j = 0; j < len / 2; ++j) {
                const cplx u = a[i + j];
                const cplx v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (cplx& v : a) v /= static_cast<double>(n);
}

std::vector<double> least_squares(const std::vector<std::vector<double>>& cols,
                                  std::vector<double> b, double* condition,
                                  double* residual) {
    const size_t n = cols.size();
    const size_t m = b.size();
    if (n == 0 || m < n) throw std::domain_error("least_squares: need m >= n >= 1");
    // column scaling for a meaningful condition estimate
    std::vector<std::vector<double>> A(cols);
    std::vector<double> scale(n, 0.0);
    for (size_t j = 0; j < n; ++j) {
        if (A[j].size() != m) throw std::domain_error("least_squares: ragged matrix");
        double s = 0.0;
        for (double v : A[j]) s += v * v;
        scale[j] = std::sqrt(s);
        if (scale[j] == 0.0) scale[j] = 1.0;
        for (double& v : A[j]) v /= scale[j];
    }
    // Householder QR on the scaled columns
    std::vector<double> rdiag(n, 0.0);
    for (size_t j = 0; j < n; ++j) {
        double nrm = 0.0;
        for (size_t i = j; i < m; ++i) nrm += A[j][i] * A[j][i];
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) throw std::domain_error("least_squares: rank deficient");
        if (A[j][j] < 0) nrm = -nrm;
        for (size_t i = j; i < m; ++i) A[j][i] /= nrm;
        A[j][j] += 1.0;
        for (size_t k = j + 1; k < n; ++k) {
            double dot = 0.0;
            for (size_t i = j; i < m; ++i) dot += A[j][i] * A[k][i];
            dot /= A[j][j];
            for (size_t i = j; i < m; ++i) A[k][i] -= dot * A[j][i];
        }
        double dotb = 0.0;
        for (size_t i = j; i < m; ++i) dotb += A[j][i] * b[i];
        dotb /= A[j][j];
        for (size_t i = j; i < m; ++i) b[i] -= dotb * A[j][i];
        rdiag[j] = -nrm;
    }
    // back substitution on R (strict upper part lives in A[k][i], i<k)
    std::vector<double> x(n, 0.0);
    for (size_t jj = n; jj-- > 0;) {
        double s = b[jj];
        for (size_t k = jj + 1; k < n; ++k) s -= A[k][jj] * x[k];
        x[jj] = s / rdiag[jj];
    }
    if (condition) {
        double mx = 0.0, mn = std::abs(rdiag[0]);
        for (double v : rdiag) {
            mx = std::max(mx, std::abs(v));
            mn = std::min(mn, std::abs(v));
        }
        *condition = mx / mn;
    }
    if (residual) {
        double s = 0.0;
        for (size_t i = n; i < m; ++i) s += b[i] * b[i];
        *residual = std::sqrt(s / static_cast<double>(m));
    }
    for (size_t j = 0; j < n; ++j) x[j] /= scale[j];
    return x;
}

}  // namespace detail

double CoefficientSeries::noise_floor(int k) const {
    return 5e-14 * std::pow(radius, -static_cast<double>(k));
}

bool CoefficientSeries::reliable(int k) const {
    if (k < 0 || k >= M) return false;
    return std::abs(coefficients[k]) > 100.0 * noise_floor(k);
}

CoefficientSeries extract_coefficients(int x0, int y0, double r, int M) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("extract_coefficients: r in (0,1)");
    if (r > 0.95) throw std::domain_error("extract_coefficients: r <= 0.95");
    if (M < 2 || (M & (M - 1)) != 0)
        throw std::domain_error("extract_coefficients: M must be a power of two");
    std::vector<cplx> h(M);
    double sup = 0.0;
    for (int j = 0; j <= M / 2; ++j) {
        const double th = 2.0 * M_PI * j / M;
        const cplx z = r * cplx(std::cos(th), std::sin(th));
        h[j] = h_total(1.0, z, x0, y0).value;
        sup = std::max(sup, std::abs(h[j]));
    }
    for (int j = M / 2 + 1; j < M; ++j) h[j] = std::conj(h[M - j]);
    detail::fft_radix2(h, false);
    CoefficientSeries out;
    out.radius = r;
    out.M = M;
    out.coefficients.resize(M);
    out.aliasing_bound = std::pow(r, M) * sup;
    double rk = 1.0;
    std::vector<double> imag(M);
    for (int k = 0; k < M; ++k) {
        const cplx c = h[k] / static_cast<double>(M) / rk;
        out.coefficients[k] = c.real();
        imag[k] = std::abs(c.imag());
        rk *= r;
    }
    // imaginary residue is meaningful only where the r^{-k} amplification has
    // not swamped the coefficient
    for (int k = 0; k < M; ++k)
        if (out.reliable(k))
            out.max_imag_residue = std::max(out.max_imag_residue, imag[k]);
    return out;
}

double asymptotic_constant(int x0, int y0) {
    if (x0 < 1 || y0 < 1) throw std::domain_error("asymptotic_constant: x0,y0 >= 1");
    return (9.0 / 16.0) * std::sqrt(3.0 / M_PI) * x0 * y0 * (x0 + y0);
}

double tau_tail_constant(int x0, int y0) { return 3.0 * asymptotic_constant(x0, y0); }

double PowerAsymptote::operator()(double k) const {
    return amplitude * std::pow(k, -exponent);
}

PowerAsymptote pringsheim_transfer(double theta, double c) {
    if (theta >= 0.0 && theta == std::floor(theta))
        throw std::domain_error("pringsheim_transfer: theta must not be a non-negative integer");
    return PowerAsymptote{c / std::tgamma(-theta), theta + 1.0};
}

TailFit tail_fit(std::span<const double> series, int k_min, int k_max) {
    if (k_min < 1 || k_max >= static_cast<int>(series.size()) || k_max - k_min + 1 < 10)
        throw std::domain_error("tail_fit: window of length >= 10 inside the data");
    std::vector<double> lx, ly;
    for (int k = k_min; k <= k_max; ++k) {
        if (!(series[k] > 0.0))
            throw std::domain_error("tail_fit: non-positive value in window");
        lx.push_back(std::log(static_cast<double>(k)));
        ly.push_back(std::log(series[k]));
    }
    const size_t n = lx.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += lx[i]; sy += ly[i]; sxx += lx[i] * lx[i]; sxy += lx[i] * ly[i];
    }
    const double det = n * sxx - sx * sx;
    const double slope = (n * sxy - sx * sy) / det;
    const double icept = (sy * sxx - sx * sxy) / det;
    double rss = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double e = ly[i] - (icept + slope * lx[i]);
        rss += e * e;
    }
    TailFit out;
    out.k_min = k_min;
    out.k_max = k_max;
    out.exponent = -slope;
    out.constant = std::exp(icept);
    out.residual = std::sqrt(rss / n);
    return out;
}

namespace {

std::vector<double> fit_ladder() {
    static const double mult[] = {1.0, 1.78, 3.16, 5.62};
    std::vector<double> eps;
    for (int j = 5; j >= 2; --j)
        for (double m : mult) eps.push_back(m * std::pow(10.0, -j));
    std::sort(eps.begin(), eps.end());
    return eps;
}

std::vector<std::vector<double>> singular_design(const std::vector<double>& eps) {
    const size_t m = eps.size();
    std::vector<std::vector<double>> cols(10, std::vector<double>(m));
    for (size_t i = 0; i < m; ++i) {
        const double e = eps[i], le = std::log(e);
        cols[0][i] = 1.0;
        cols[1][i] = e;
        cols[2][i] = e * e;
        cols[3][i] = e * e * e;
        cols[4][i] = std::sqrt(e);
        cols[5][i] = e * std::sqrt(e);
        cols[6][i] = e * e * std::sqrt(e);
        cols[7][i] = e * le;
        cols[8][i] = e * e * le;
        cols[9][i] = e * e * e * le;
    }
    return cols;
}

}  // namespace

const std::vector<std::string>& SingularFit::basis_names() {
    static const std::vector<std::string> names = {
        "1", "(1-z)", "(1-z)^2", "(1-z)^3", "(1-z)^1/2", "(1-z)^3/2",
        "(1-z)^5/2", "(1-z)ln(1-z)", "(1-z)^2ln(1-z)", "(1-z)^3ln(1-z)"};
    return names;
}

SingularFit singular_coefficient_fit(int x0, int y0) {
    const std::vector<double> eps = fit_ladder();
    const size_t m = eps.size();
    std::array<std::vector<double>, 3> parts;
    std::vector<double> total(m);
    for (auto& p : parts) p.resize(m);
    for (size_t i = 0; i < m; ++i) {
        const cplx z = 1.0 - eps[i];
        std::array<HEvaluation, 3> hv{};
        cplx prev = 0.0;
        for (int n = 511; n <= 4095; n = 2 * n + 1) {
            const QuadratureRule rule(n);
            hv = h_parts(1.0, z, x0, y0, rule);
            const cplx tot = hv[0].value + hv[1].value + hv[2].value;
            if (n > 511 && std::abs(tot - prev) <= 1e-13 * (1.0 + std::abs(tot))) break;
            prev = tot;
        }
        for (int p = 0; p < 3; ++p) parts[p][i] = hv[p].value.real();
        total[i] = (hv[0].value + hv[1].value + hv[2].value).real();
    }
    const auto cols = singular_design(eps);
    SingularFit out;
    double cond = 0.0;
    for (int p = 0; p < 3; ++p)
        out.part_coefficients[p] =
            detail::least_squares(cols, parts[p], &cond, &out.fit_residuals[p]);
    out.total_coefficients =
        detail::least_squares(cols, total, &cond, &out.fit_residuals[3]);
    out.condition = cond;
    return out;
}

SlitIntegralIdentity slit_integral_identity(int k, double z) {
    if (k < 0 || k > 2) throw std::domain_error("slit_integral_identity: k in {0,1,2}");
    if (!(z > 0.0 && z < 1.0)) throw std::domain_error("slit_integral_identity: z in (0,1)");
    SlitIntegralIdentity out;
    double prev = 0.0;
    for (int n = 255; n <= 4095; n = 2 * n + 1) {
        const QuadratureRule rule(n);
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
            const double u = rule.nodes[j];
            s += rule.weights[j] * std::pow(1.0 - u, k) / (1.0 - z * (1.0 + 2.0 * u) / 3.0);
        }
        if (n > 255 && std::abs(s - prev) <= 1e-14 * (1.0 + std::abs(s))) { prev = s; break; }
        prev = s;
    }
    out.lhs = prev;
    const double Z = 3.0 / (2.0 * z) - 0.5;
    double P = 0.0;
    switch (k) {
        case 0: P = Z; break;
        case 1: P = -Z * Z + Z + 0.5; break;
        default: P = Z * Z * Z - 2.0 * Z * Z + 0.5 * Z + 1.0; break;
    }
    out.rhs = (3.0 * M_PI / (2.0 * z)) *
              (std::sqrt(1.0 + z / 3.0) * std::pow(-3.0 / (2.0 * z), k + 1) *
                   std::pow(1.0 - z, k + 0.5) + P);
    out.diff = std::abs(out.lhs - out.rhs);
    return out;
}

LogFit log_singularity_fit(double exponent, int k) {
    if (exponent != 0.5 && exponent != 1.5)
        throw std::domain_error("log_singularity_fit: exponent 1/2 or 3/2");
    if (k < 0 || k > 1) throw std::domain_error("log_singularity_fit: k in {0,1}");
    const int power = (exponent == 0.5) ? k + 1 : k;
    const std::vector<double> eps = fit_ladder();
    const size_t m = eps.size();
    std::vector<double> vals(m);
    for (size_t i = 0; i < m; ++i) {
        const double z = 1.0 - eps[i];
        double prev = 0.0;
        for (int n = 255; n <= 4095; n = 2 * n + 1) {
            const QuadratureRule rule(n);
            double s = 0.0;
            for (int j = 0; j < n; ++j) {
                const double u = rule.nodes[j];
                s += rule.weights[j] * std::pow(1.0 - u, k) /
                     std::pow(1.0 - z * (1.0 + 2.0 * u) / 3.0, exponent);
            }
            if (n > 255 && std::abs(s - prev) <= 5e-14 * (1.0 + std::abs(s))) { prev = s; break; }
            prev = s;
        }
        vals[i] = prev;
    }
    const size_t mm = eps.size();
    std::vector<std::vector<double>> cols;
    std::vector<double> c0(mm), c1(mm), c2(mm), c3(mm), c4(mm), c5(mm);
    for (size_t i = 0; i < mm; ++i) {
        const double e = eps[i], le = std::log(e);
        c0[i] = le * std::pow(e, power);
        c1[i] = le * std::pow(e, power + 1);
        c2[i] = 1.0;
        c3[i] = e;
        c4[i] = e * e;
        c5[i] = e * e * e;
    }
    cols = {c0, c1, c2, c3, c4, c5};
    if (exponent == 0.5) {
        // the half-power family also carries plain sqrt terms
        std::vector<double> c6(mm);
        for (size_t i = 0; i < mm; ++i) c6[i] = std::sqrt(eps[i]);
        cols.push_back(c6);
    }
    LogFit out;
    const std::vector<double> coef =
        detail::least_squares(cols, vals, &out.condition, &out.residual);
    out.coefficient = coef[0];
    return out;
}

}  // namespace qpwalk
