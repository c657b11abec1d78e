#include "qpwalk/gluing.hpp"

#include <cmath>
#include <numeric>
#include <random>

namespace qpwalk {

cplx cgf(cplx t, double z) {
    const BranchPoints bp = branch_points(z);
    const double sx3 = std::sqrt(bp.x3);
    const cplx den = (t - bp.x2) * (t - sx3) * (t - sx3);
    if (std::abs(den) == 0.0)
        throw std::domain_error("cgf: evaluation at a pole");
    return t * (1.0 + t) / den;
}

cplx mu(cplx t, cplx z, int y0) {
    if (y0 < 1) throw std::domain_error("mu: y0 >= 1 required");
    const cplx a = kernel_a(t, z);
    if (std::abs(a) == 0.0) throw std::domain_error("mu: pole of 1/(2a)^y0");
    const cplx b = kernel_b(t, z);
    const cplx d = kernel_d(t, z);
    cplx sum = 0.0;
    double binom = static_cast<double>(y0);  // C(y0, 1)
    cplx dk = 1.0;
    for (int k = 0; 2 * k + 1 <= y0; ++k) {
        if (k > 0) {
            binom *= static_cast<double>(y0 - 2 * k + 1) * (y0 - 2 * k) /
                     ((2.0 * k) * (2.0 * k + 1));
            dk *= d;
        }
        cplx mb = 1.0;
        for (int j = 0; j < y0 - (2 * k + 1); ++j) mb *= -b;
        sum += binom * dk * mb;
    }
    cplx twoa = 1.0;
    for (int j = 0; j < y0; ++j) twoa *= 2.0 * a;
    return sum / twoa;
}

cplx slit_edge_value(double u, double z) {
    const BranchPoints bp = branch_points(z);
    if (!(u > bp.x1 && u < bp.x2))
        throw std::domain_error("slit_edge_value: u must lie in (x1,x2)");
    const double a = std::real(kernel_a(u, z));
    const double b = std::real(kernel_b(u, z));
    const double negd = -std::real(kernel_d(u, z));
    return cplx(-b / (2.0 * a), std::sqrt(negd) / (2.0 * a));
}

CurveSample curve_sample(double z, int n) {
    if (!(z > 0.0 && z < 1.0)) throw std::domain_error("curve_sample: z in (0,1)");
    if (n < 2) throw std::domain_error("curve_sample: n >= 2");
    const BranchPoints bp = branch_points(z);
    const double mid = 0.5 * (bp.x1 + bp.x2);
    const double half = 0.5 * (bp.x2 - bp.x1);
    CurveSample cs;
    cs.z = z;
    cs.abscissae.reserve(n);
    cs.points.reserve(n);
    for (int j = 1; j <= n; ++j) {
        const double u = mid + half * std::cos(j * M_PI / (n + 1));
        cs.abscissae.push_back(u);
        cs.points.push_back(slit_edge_value(u, z));
    }
    return cs;
}

namespace {

// minimal exact rational over int64; inputs are small so no overflow guard
struct Rat {
    long long n, d;
    Rat(long long nn = 0, long long dd = 1) : n(nn), d(dd) { norm(); }
    void norm() {
        if (d < 0) { n = -n; d = -d; }
        const long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
    }
    friend Rat operator*(Rat a, Rat b) { return Rat(a.n * b.n, a.d * b.d); }
    friend Rat operator/(Rat a, Rat b) {
        if (b.n == 0) throw std::domain_error("rational division by zero");
        return Rat(a.n * b.d, a.d * b.n);
    }
    friend bool operator==(Rat a, Rat b) { return a.n == b.n && a.d == b.d; }
};

using RatPair = std::pair<Rat, Rat>;
RatPair xi(RatPair p) { return {p.first, p.first / p.second}; }
RatPair eta(RatPair p) { return {p.second / p.first, p.second}; }

}  // namespace

bool group_order_check(int samples) {
    if (samples < 1) throw std::domain_error("group_order_check: samples >= 1");
    std::mt19937_64 gen(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<long long> num(1, 19);
    std::uniform_int_distribution<int> sgn(0, 1);
    for (int i = 0; i < samples; ++i) {
        Rat x(num(gen) * (sgn(gen) ? 1 : -1), num(gen));
        Rat y(num(gen) * (sgn(gen) ? 1 : -1), num(gen));
        RatPair p{x, y};
        if (!(xi(xi(p)) == p) || !(eta(eta(p)) == p)) return false;
        // (xi o eta)(x,y) = (y/x, 1/x)
        RatPair q = xi(eta(p));
        if (!(q == RatPair{y / x, Rat(1) / x})) return false;
        RatPair r = xi(eta(xi(eta(xi(eta(p))))));
        if (!(r == p)) return false;
    }
    return true;
}

}  // namespace qpwalk
