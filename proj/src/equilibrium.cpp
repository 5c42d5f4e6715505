#include "strtherm/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "strtherm/error.hpp"

namespace strtherm {

namespace {

void require_non_degenerate(const EquilibriumModel& m) {
    if (m.degenerate()) {
        throw Error(ErrorCode::DegenerateModel, "equilibrium model has zero variance");
    }
}

}  // namespace

EquilibriumModel fit(const Histogram& h) {
    if (h.observations == 0 || h.bits == 0) {
        throw Error(ErrorCode::InvalidArgument, "cannot fit an empty histogram");
    }
    return fit(h, ensemble_mean(h));
}

EquilibriumModel fit(const Histogram& h, double c_bar) {
    if (h.observations == 0 || h.bits == 0) {
        throw Error(ErrorCode::InvalidArgument, "cannot fit an empty histogram");
    }
    EquilibriumModel m;
    m.observations = h.observations;
    m.bits = h.bits;
    m.c_bar = c_bar;
    const double M = static_cast<double>(h.bits);
    m.density = m.c_bar / M;
    m.k_factor = 1.0 - std::sqrt(std::abs(1.0 - 2.0 * m.density));
    m.temperature = m.k_factor * m.density * (1.0 - m.density);
    if (m.temperature < 0.0) {
        m.temperature = 0.0;  // density outside [0, 1] cannot occur; guards rounding
    }
    m.sigma2 = M * m.temperature;
    if (!m.degenerate()) {
        m.peak = 2.0 * static_cast<double>(h.observations) /
                 std::sqrt(2.0 * std::numbers::pi * m.sigma2);
    }
    return m;
}

double normal_counts(const EquilibriumModel& m, double c) {
    require_non_degenerate(m);
    const double d = c - m.c_bar;
    return m.peak * std::exp(-d * d / (2.0 * m.sigma2));
}

double binomial_counts(const EquilibriumModel& m, double c) {
    if (!(m.k_factor > 0.0) || !(m.density > 0.0 && m.density < 1.0)) {
        throw Error(ErrorCode::DegenerateModel,
                    "adjusted binomial needs K > 0 and density in (0, 1)");
    }
    const double M = static_cast<double>(m.bits);
    if (!(c >= 0.0 && c <= M)) {
        throw Error(ErrorCode::InvalidArgument, "measure value outside [0, M]");
    }
    const double K = m.k_factor;
    const double log_terms = std::lgamma(M / K + 1.0) - std::lgamma(c / K + 1.0) -
                             std::lgamma((M - c) / K + 1.0) + (c / K) * std::log(m.density) +
                             ((M - c) / K) * std::log1p(-m.density);
    return 2.0 * static_cast<double>(m.observations) / K * std::exp(log_terms);
}

double fit_quality(const Histogram& h, const EquilibriumModel& m) {
    require_non_degenerate(m);
    if (h.entries.empty()) {
        return 0.0;
    }
    double sum_sq = 0.0;
    for (const auto& entry : h.entries) {
        const double r =
            static_cast<double>(entry.count) - normal_counts(m, static_cast<double>(entry.value));
        sum_sq += r * r;
    }
    return std::sqrt(sum_sq / static_cast<double>(h.entries.size())) / m.peak;
}

std::vector<CurvePoint> model_curve(const EquilibriumModel& m, std::size_t max_value) {
    std::vector<CurvePoint> curve;
    if (m.degenerate()) {
        return curve;
    }
    const double sigma = std::sqrt(m.sigma2);
    const double lo = std::max(0.0, m.c_bar - 5.0 * sigma);
    const double hi = std::min(static_cast<double>(max_value), m.c_bar + 5.0 * sigma);
    auto c = static_cast<std::size_t>(std::ceil(lo));
    if ((c % 2) != (max_value % 2)) {
        ++c;
    }
    for (; static_cast<double>(c) <= hi; c += 2) {
        const auto x = static_cast<double>(c);
        const double binomial = c <= m.bits ? binomial_counts(m, x) : 0.0;
        curve.push_back({c, normal_counts(m, x), binomial});
    }
    return curve;
}

}  // namespace strtherm
