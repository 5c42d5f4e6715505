#pragma once

#include <cstddef>
#include <vector>

#include "strtherm/ensemble.hpp"

namespace strtherm {

/// Equilibrium (normal / adjusted binomial) description of a histogram,
/// fixed analytically by the mean measure.
struct EquilibriumModel {
    double c_bar = 0.0;     // mean measure
    double density = 0.0;   // c_bar / M
    double k_factor = 0.0;  // 1 - sqrt|1 - 2 density|
    double sigma2 = 0.0;    // M * K * density * (1 - density)
    double temperature = 0.0;
    double peak = 0.0;      // N0 = 2N / sqrt(2 pi sigma2); zero when degenerate
    std::size_t observations = 0;
    std::size_t bits = 0;

    bool degenerate() const noexcept { return !(sigma2 > 0.0); }
};

EquilibriumModel fit(const Histogram& h);

/// Same model with the mean measure supplied by the caller, e.g. the mean of
/// a larger ensemble that `h` was drawn from. N is taken from `h`.
EquilibriumModel fit(const Histogram& h, double c_bar);

/// Expected count N0 exp(-(c - c_bar)^2 / (2 sigma2)). Throws DegenerateModel.
double normal_counts(const EquilibriumModel& m, double c);

/// Adjusted binomial expected count, evaluated in log space with x! = Gamma(x + 1).
/// Throws DegenerateModel when K = 0 or the density is 0 or 1.
double binomial_counts(const EquilibriumModel& m, double c);

/// RMS of (observed N_i - normal_counts(C_i)) over observed values, divided by N0.
double fit_quality(const Histogram& h, const EquilibriumModel& m);

struct CurvePoint {
    std::size_t value;
    double normal;
    double binomial;
};

/// Model curve at every value of the same parity as `max_value` inside
/// [c_bar - 5 sigma, c_bar + 5 sigma] clipped to [0, max_value].
/// Empty for a degenerate model.
std::vector<CurvePoint> model_curve(const EquilibriumModel& m, std::size_t max_value);

}  // namespace strtherm
