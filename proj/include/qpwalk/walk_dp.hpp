#pragma once

#include <array>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qpwalk {

using bigint = boost::multiprecision::cpp_int;
using cplx = std::complex<double>;

/// Interior displacement kernel: six unit jumps, probability 1/6 each.
struct StepKernel {
    struct Step { int dx, dy; };
    static constexpr std::array<Step, 6> steps{{
        {1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};
    static constexpr double prob = 1.0 / 6.0;
};

enum class DpMode { exact, floating };

/// Probability stored as numerator over the implicit denominator 6^scale.
struct ExactProb {
    bigint numerator;
    int scale_exponent = 0;
    double to_double() const;
    std::string to_fraction_string() const;  // reduced num/den form
};

/// Law of the absorbed walk truncated at horizon K: per-step absorption mass
/// on each axis, survival, and (optionally) site-resolved axis hits.
struct AbsorptionTable {
    int x0 = 0, y0 = 0, horizon = 0;
    DpMode mode = DpMode::floating;
    std::vector<double> p_S, p_T, p_tau, survival;  // length K+1
    bool has_sites = false;
    // site_hits_x[k][i] = P[hit (i,0) at time k]; same shape on the other axis
    std::vector<std::vector<double>> site_hits_x, site_hits_y;

    // exact-mode companions (numerators at scale 6^k), empty in float mode
    std::vector<bigint> p_S_num, p_T_num, survival_num;
    std::vector<std::vector<bigint>> site_hits_x_num, site_hits_y_num;

    ExactProb exact_p_S(int k) const { return {p_S_num.at(k), k}; }
    ExactProb exact_p_T(int k) const { return {p_T_num.at(k), k}; }
    ExactProb exact_survival(int k) const { return {survival_num.at(k), k}; }
};

inline constexpr int kExactHorizonCap = 200;

/// Exact or floating-point law of (S, T, tau, absorption site) up to time K.
/// Exact mode is capped at K <= 200; site retention is flag-controlled.
AbsorptionTable dp_absorption(int x0, int y0, int K, DpMode mode,
                              bool with_sites = false);

/// k -> P[tau >= k] for k = 0..K+1, from a computed table.
std::vector<double> survival_tail(const AbsorptionTable& table);

/// Checks P_{(x0,y0)}[T = k] = P_{(y0,x0)}[S = k] entrywise up to K.
bool swap_symmetry_check(int x0, int y0, int K,
                         DpMode mode = DpMode::floating);

/// Truncated interior-occupation sums: for each requested (x,y,z) returns
/// sum_{k<=K} z^k sum_{i,j>=1} P[(X(k),Y(k)) = (i,j)] x^{i-1} y^{j-1}.
struct OccupationPoint { cplx x, y, z; };
std::vector<cplx> occupation_series(int x0, int y0, int K,
                                    std::span<const OccupationPoint> pts);

}  // namespace qpwalk
