#include "strtherm/thermo.hpp"

#include <cmath>
#include <numbers>

#include "strtherm/error.hpp"

namespace strtherm {

namespace {

void require_positive_temperature(double temperature) {
    if (!(temperature > 0.0)) {
        throw Error(ErrorCode::DegenerateModel, "temperature must be positive");
    }
}

}  // namespace

EnergyLevel energy_level(double c, double c_bar, std::size_t bits) {
    if (bits == 0) {
        throw Error(ErrorCode::InvalidArgument, "energy level needs M >= 1");
    }
    const double momentum = c - c_bar;
    return {momentum, momentum * momentum / (2.0 * static_cast<double>(bits))};
}

double internal_energy(const Histogram& h, double c_bar) {
    if (h.observations == 0) {
        throw Error(ErrorCode::InvalidArgument, "internal energy of an empty histogram");
    }
    double sum = 0.0;
    for (const auto& entry : h.entries) {
        sum += static_cast<double>(entry.count) *
               energy_level(static_cast<double>(entry.value), c_bar, h.bits).energy;
    }
    return sum / static_cast<double>(h.observations);
}

HistogramEntropy entropy(const Histogram& h) {
    if (h.observations == 0) {
        throw Error(ErrorCode::InvalidArgument, "entropy of an empty histogram");
    }
    const double N = static_cast<double>(h.observations);
    const double M = static_cast<double>(h.bits);
    const double lg_m = std::lgamma(M + 1.0);

    double occupation = std::lgamma(N + 1.0);
    double arrangements = 0.0;
    for (const auto& entry : h.entries) {
        if (entry.value > h.bits) {
            throw Error(ErrorCode::InvalidArgument, "measure value exceeds string length");
        }
        const double c = static_cast<double>(entry.value);
        const double n_i = static_cast<double>(entry.count);
        occupation -= std::lgamma(n_i + 1.0);
        arrangements += n_i * (lg_m - std::lgamma(c + 1.0) - std::lgamma(M - c + 1.0));
    }
    constexpr double log2e = std::numbers::log2e;
    return {log2e / N * occupation, 1.0 + log2e / N * arrangements};
}

double partition_function(std::size_t bits, double temperature) {
    require_positive_temperature(temperature);
    return std::sqrt(std::numbers::pi * static_cast<double>(bits) * temperature / 2.0);
}

double equilibrium_internal_energy(double temperature) {
    if (temperature < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "temperature must be non-negative");
    }
    return temperature / 2.0;
}

EquilibriumEntropy equilibrium_entropy(std::size_t bits, double temperature, double c_bar) {
    require_positive_temperature(temperature);
    const double M = static_cast<double>(bits);
    if (!(c_bar > 0.0 && c_bar < M)) {
        throw Error(ErrorCode::DegenerateModel, "mean measure must lie strictly inside (0, M)");
    }
    constexpr double pi = std::numbers::pi;
    constexpr double e = std::numbers::e;
    const double thermo = 0.5 * std::log2(pi * e * M * temperature / 2.0);
    const double micro = (c_bar * std::log2(M / c_bar) + (M - c_bar) * std::log2(M / (M - c_bar))) / M;
    return {thermo, micro};
}

EnsembleThermo ensemble_thermo(std::size_t observations, std::size_t bits, double temperature) {
    require_positive_temperature(temperature);
    if (observations == 0 || bits == 0) {
        throw Error(ErrorCode::InvalidArgument, "ensemble relations need N, M >= 1");
    }
    constexpr double pi = std::numbers::pi;
    constexpr double e = std::numbers::e;
    const double N = static_cast<double>(observations);
    const double v = std::sqrt(static_cast<double>(bits));
    const double v2 = static_cast<double>(bits);
    return {
        N / 2.0 * std::log(pi * e * v2 * temperature / 2.0),
        -N * temperature / 2.0 * std::log(pi * v2 * temperature / 2.0),
        N * temperature / v,
        v,
    };
}

ThermoReport thermo_report(const Histogram& h, const EquilibriumModel& m) {
    ThermoReport r;
    r.temperature = m.temperature;
    r.u_bar = internal_energy(h, m.c_bar);
    const HistogramEntropy s = entropy(h);
    r.s_thermo = s.thermo;
    r.s_micro = s.micro;
    r.s_micro_per_bit = s.micro / static_cast<double>(h.bits);
    r.volume = std::sqrt(static_cast<double>(h.bits));
    r.degenerate = m.degenerate();
    if (r.degenerate) {
        return r;
    }
    r.u_bar_eq = equilibrium_internal_energy(m.temperature);
    const EquilibriumEntropy eq = equilibrium_entropy(h.bits, m.temperature, m.c_bar);
    r.s_thermo_eq = eq.thermo;
    r.s_micro_eq_per_bit = eq.micro_per_bit;
    r.z = partition_function(h.bits, m.temperature);
    const EnsembleThermo ens = ensemble_thermo(h.observations, h.bits, m.temperature);
    r.s_nats = ens.entropy_nats;
    r.free_energy = ens.free_energy;
    r.pressure = ens.pressure;
    r.fit_quality = fit_quality(h, m);
    return r;
}

}  // namespace strtherm
