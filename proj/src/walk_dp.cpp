#include "qpwalk/walk_dp.hpp"

#include <cmath>
#include <stdexcept>

namespace qpwalk {

double ExactProb::to_double() const {
    bigint den = 1;
    for (int i = 0; i < scale_exponent; ++i) den *= 6;
    return numerator.convert_to<double>() / den.convert_to<double>();
}

std::string ExactProb::to_fraction_string() const {
    bigint den = 1;
    for (int i = 0; i < scale_exponent; ++i) den *= 6;
    bigint g = boost::multiprecision::gcd(numerator, den);
    if (g == 0) g = 1;
    bigint n = numerator / g, d = den / g;
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

namespace {

// Dense time-major sweep over the reachable rectangle {1..x0+k} x {1..y0+k}.
// Grid is padded with a zero ring; absorbed mass leaves the grid the step it
// arrives. T = double (probabilities) or bigint (numerators over 6^k, where
// one step is a plain 6-neighbor sum).
template <typename T>
struct DpResult {
    std::vector<T> pS, pT;            // length K+1
    std::vector<std::vector<T>> sx, sy;  // optional site hits
    T interior_sum_final;             // for conservation checks
};

template <typename T>
DpResult<T> run_dp(int x0, int y0, int K, bool with_sites) {
    const int W = x0 + K + 2;  // x = 0..W-1
    const int H = y0 + K + 2;
    std::vector<T> cur(static_cast<size_t>(W) * H), nxt(cur.size());
    auto at = [W](std::vector<T>& g, int y, int x) -> T& {
        return g[static_cast<size_t>(y) * W + x];
    };
    at(cur, y0, x0) = T(1);
    DpResult<T> r;
    r.pS.assign(K + 1, T(0));
    r.pT.assign(K + 1, T(0));
    if (with_sites) {
        r.sx.assign(K + 1, {});
        r.sy.assign(K + 1, {});
        r.sx[0].assign(W, T(0));
        r.sy[0].assign(H, T(0));
    }
    for (int k = 0; k < K; ++k) {
        const int xmax = std::min(x0 + k, W - 2);
        const int ymax = std::min(y0 + k, H - 2);
        // axis hits produced by this step (numerator scale 6^{k+1})
        T rowmass(0), colmass(0);
        for (int x = 1; x <= xmax; ++x) rowmass += at(cur, 1, x);
        for (int y = 1; y <= ymax; ++y) colmass += at(cur, y, 1);
        r.pS[k + 1] = rowmass * T(2);
        r.pT[k + 1] = colmass * T(2);
        if (with_sites) {
            r.sx[k + 1].assign(W, T(0));
            r.sy[k + 1].assign(H, T(0));
            for (int x = 1; x <= xmax; ++x) {
                r.sx[k + 1][x] += at(cur, 1, x);      // jump (0,-1)
                r.sx[k + 1][x + 1] += at(cur, 1, x);  // jump (1,-1)
            }
            for (int y = 1; y <= ymax; ++y) {
                r.sy[k + 1][y] += at(cur, y, 1);      // jump (-1,0)
                r.sy[k + 1][y + 1] += at(cur, y, 1);  // jump (-1,1)
            }
        }
        const int nxmax = std::min(x0 + k + 1, W - 2);
        const int nymax = std::min(y0 + k + 1, H - 2);
        for (int y = 1; y <= nymax; ++y) {
            T* up = &at(cur, y + 1, 0);
            T* row = &at(cur, y, 0);
            T* dn = &at(cur, y - 1, 0);
            T* out = &at(nxt, y, 0);
            for (int x = 1; x <= nxmax; ++x) {
                T s = row[x - 1] + up[x - 1] + up[x] + row[x + 1] +
                      dn[x + 1] + dn[x];
                if constexpr (std::is_same_v<T, double>)
                    out[x] = s / 6.0;  // probabilities
                else
                    out[x] = s;        // numerators pick up the 6^{k+1} scale
            }
        }
        std::swap(cur, nxt);
        // clear the band we will write next round (nxt still holds step k)
        for (int y = 0; y <= std::min(nymax + 1, H - 1); ++y)
            for (int x = 0; x <= std::min(nxmax + 1, W - 1); ++x)
                at(nxt, y, x) = T(0);
    }
    T tot(0);
    for (const T& v : cur) tot += v;
    r.interior_sum_final = tot;
    return r;
}

void scale_vec(const std::vector<bigint>& num, int k, std::vector<double>& out) {
    bigint den = 1;
    for (int i = 0; i < k; ++i) den *= 6;
    const double d = den.convert_to<double>();
    out.resize(num.size());
    for (size_t i = 0; i < num.size(); ++i)
        out[i] = num[i].convert_to<double>() / d;
}

}  // namespace

AbsorptionTable dp_absorption(int x0, int y0, int K, DpMode mode,
                              bool with_sites) {
    if (x0 < 1 || y0 < 1)
        throw std::domain_error("dp_absorption: start point must be interior");
    if (K < 0) throw std::domain_error("dp_absorption: K >= 0");
    if (mode == DpMode::exact && K > kExactHorizonCap)
        throw std::domain_error("dp_absorption: exact mode capped at K = 200");

    AbsorptionTable t;
    t.x0 = x0; t.y0 = y0; t.horizon = K;
    t.mode = mode;
    t.has_sites = with_sites;
    t.p_S.assign(K + 1, 0.0);
    t.p_T.assign(K + 1, 0.0);
    t.p_tau.assign(K + 1, 0.0);
    t.survival.assign(K + 1, 0.0);

    if (mode == DpMode::floating) {
        auto r = run_dp<double>(x0, y0, K, with_sites);
        for (int k = 0; k <= K; ++k) {
            t.p_S[k] = r.pS[k] / 6.0;
            t.p_T[k] = r.pT[k] / 6.0;
        }
        if (with_sites) {
            t.site_hits_x.assign(K + 1, {});
            t.site_hits_y.assign(K + 1, {});
            for (int k = 0; k <= K; ++k) {
                t.site_hits_x[k] = r.sx[k];
                t.site_hits_y[k] = r.sy[k];
                for (double& v : t.site_hits_x[k]) v /= 6.0;
                for (double& v : t.site_hits_y[k]) v /= 6.0;
            }
        }
    } else {
        auto r = run_dp<bigint>(x0, y0, K, with_sites);
        t.p_S_num.assign(K + 1, 0);
        t.p_T_num.assign(K + 1, 0);
        t.survival_num.assign(K + 1, 0);
        bigint absorbed = 0, pow6 = 1;
        for (int k = 0; k <= K; ++k) {
            t.p_S_num[k] = r.pS[k];
            t.p_T_num[k] = r.pT[k];
            absorbed = absorbed * 6 + r.pS[k] + r.pT[k];
            t.survival_num[k] = pow6 - absorbed;
            t.p_S[k] = ExactProb{r.pS[k], k}.to_double();
            t.p_T[k] = ExactProb{r.pT[k], k}.to_double();
            pow6 *= 6;
        }
        if (r.interior_sum_final != t.survival_num[K])
            throw std::logic_error("dp_absorption: exact mass conservation failed");
        if (with_sites) {
            t.site_hits_x_num = std::move(r.sx);
            t.site_hits_y_num = std::move(r.sy);
            t.site_hits_x.assign(K + 1, {});
            t.site_hits_y.assign(K + 1, {});
            for (int k = 0; k <= K; ++k) {
                scale_vec(t.site_hits_x_num[k], k, t.site_hits_x[k]);
                scale_vec(t.site_hits_y_num[k], k, t.site_hits_y[k]);
            }
        }
    }

    double surv = 1.0;
    for (int k = 0; k <= K; ++k) {
        t.p_tau[k] = t.p_S[k] + t.p_T[k];
        surv -= t.p_tau[k];
        t.survival[k] = (mode == DpMode::exact)
                            ? ExactProb{t.survival_num[k], k}.to_double()
                            : surv;
    }
    return t;
}

std::vector<double> survival_tail(const AbsorptionTable& table) {
    std::vector<double> out(table.horizon + 2);
    out[0] = 1.0;
    for (int k = 1; k <= table.horizon + 1; ++k) out[k] = table.survival[k - 1];
    return out;
}

bool swap_symmetry_check(int x0, int y0, int K, DpMode mode) {
    const AbsorptionTable a = dp_absorption(x0, y0, K, mode);
    const AbsorptionTable b = dp_absorption(y0, x0, K, mode);
    if (mode == DpMode::exact) {
        for (int k = 0; k <= K; ++k)
            if (a.p_T_num[k] != b.p_S_num[k]) return false;
        return true;
    }
    for (int k = 0; k <= K; ++k)
        if (std::abs(a.p_T[k] - b.p_S[k]) > 1e-14) return false;
    return true;
}

std::vector<cplx> occupation_series(int x0, int y0, int K,
                                    std::span<const OccupationPoint> pts) {
    if (x0 < 1 || y0 < 1)
        throw std::domain_error("occupation_series: start point must be interior");
    const int W = x0 + K + 2;
    const int H = y0 + K + 2;
    std::vector<double> cur(static_cast<size_t>(W) * H), nxt(cur.size());
    cur[static_cast<size_t>(y0) * W + x0] = 1.0;
    std::vector<cplx> acc(pts.size(), 0.0), zpow(pts.size(), 1.0);
    std::vector<std::vector<cplx>> xp(pts.size()), yp(pts.size());
    for (size_t p = 0; p < pts.size(); ++p) {
        xp[p].assign(W, 0.0);
        yp[p].assign(H, 0.0);
        cplx v = 1.0;
        for (int i = 1; i < W; ++i) { xp[p][i] = v; v *= pts[p].x; }
        v = 1.0;
        for (int j = 1; j < H; ++j) { yp[p][j] = v; v *= pts[p].y; }
    }
    for (int k = 0; k <= K; ++k) {
        const int xmax = std::min(x0 + k, W - 2);
        const int ymax = std::min(y0 + k, H - 2);
        for (size_t p = 0; p < pts.size(); ++p) {
            cplx sk = 0.0;
            for (int y = 1; y <= ymax; ++y) {
                cplx row = 0.0;
                const double* r = &cur[static_cast<size_t>(y) * W];
                for (int x = 1; x <= xmax; ++x) row += r[x] * xp[p][x];
                sk += row * yp[p][y];
            }
            acc[p] += zpow[p] * sk;
            zpow[p] *= pts[p].z;
        }
        if (k == K) break;
        for (int y = 1; y <= std::min(y0 + k + 1, H - 2); ++y) {
            const double* up = &cur[static_cast<size_t>(y + 1) * W];
            const double* row = &cur[static_cast<size_t>(y) * W];
            const double* dn = &cur[static_cast<size_t>(y - 1) * W];
            double* out = &nxt[static_cast<size_t>(y) * W];
            for (int x = 1; x <= std::min(x0 + k + 1, W - 2); ++x)
                out[x] = (row[x - 1] + up[x - 1] + up[x] + row[x + 1] +
                          dn[x + 1] + dn[x]) / 6.0;
        }
        std::swap(cur, nxt);
        std::fill(nxt.begin(), nxt.end(), 0.0);
    }
    return acc;
}

}  // namespace qpwalk
