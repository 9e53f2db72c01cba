#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cluster/seed.hpp"

namespace cluster {

/// Dilogarithm Li2 on [0, 1]: power series below 1/2, Euler reflection
/// above. Arguments y/(1+y) with y > 0 always land in this range.
inline double dilog(double x) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("dilog: argument outside [0, 1]");
    if (x == 1.0) return std::numbers::pi * std::numbers::pi / 6.0;
    if (x > 0.5)
        return std::numbers::pi * std::numbers::pi / 6.0 - std::log(x) * std::log1p(-x) -
               dilog(1.0 - x);
    double sum = 0.0, pw = x;
    for (int k = 1; k < 200; ++k) {
        double term = pw / (static_cast<double>(k) * k);
        sum += term;
        if (term < 1e-18 * (sum + 1e-300)) break;
        pw *= x;
    }
    return sum;
}

struct RogersEval {
    double x = 0.0;
    double value = 0.0;
    double abs_err_bound = 0.0;
};

/// Rogers form L(x) = Li2(x) + log(x)·log(1-x)/2, continuous on [0, 1]
/// with L(0) = 0 and L(1) = pi^2/6.
inline RogersEval rogers_L(double x) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("rogers_L: argument outside [0, 1]");
    RogersEval r;
    r.x = x;
    r.abs_err_bound = 1e-13;
    if (x == 0.0) {
        r.value = 0.0;
    } else if (x == 1.0) {
        r.value = std::numbers::pi * std::numbers::pi / 6.0;
    } else {
        r.value = dilog(x) + 0.5 * std::log(x) * std::log1p(-x);
    }
    return r;
}

/// L(x) + L(y) minus the three-term right side of the five-term
/// relation; vanishes identically for x, y in (0, 1).
inline double five_term_check(double x, double y) {
    if (x <= 0.0 || x >= 1.0 || y <= 0.0 || y >= 1.0)
        throw std::domain_error("five_term_check: arguments must lie in (0, 1)");
    double d = 1.0 - x * y;
    return rogers_L(x).value + rogers_L(y).value - rogers_L(x * (1.0 - y) / d).value -
           rogers_L(x * y).value - rogers_L(y * (1.0 - x) / d).value;
}

/// Which side of each mutation supplies the coefficient value fed to
/// the classical identity. pre_mutation zeroes the loop sum on the
/// recorded fixtures and is the default.
enum class YConvention { pre_mutation, post_mutation };

/// Signed Rogers sum over a loop trace: step t contributes
/// ε_t · L(v/(1+v)) with v = y_{k_t}^{ε_t} in the chosen convention.
inline double loop_dilog_sum(const std::vector<StepTrace>& trace,
                             YConvention conv = YConvention::pre_mutation) {
    double sum = 0.0;
    for (const StepTrace& st : trace) {
        Rat v = conv == YConvention::pre_mutation ? st.y : st.y.inv();
        if (st.eps < 0) v = v.inv();
        double vd = v.to_double();
        sum += st.eps * rogers_L(vd / (1.0 + vd)).value;
    }
    return sum;
}

/// Runs the loop and returns the signed Rogers sum; the caller is
/// responsible for seq being a verified loop.
inline double loop_sum_check(const ExchangeMatrix& B, const std::vector<Rat>& y,
                             const std::vector<int>& seq,
                             YConvention conv = YConvention::pre_mutation) {
    SeedState s = make_seed(B, y);
    std::vector<StepTrace> trace = apply_sequence(s, seq);
    return loop_dilog_sum(trace, conv);
}

}  // namespace cluster
