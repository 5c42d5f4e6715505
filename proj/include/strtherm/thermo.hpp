#pragma once

#include <cstddef>
#include <optional>

#include "strtherm/ensemble.hpp"
#include "strtherm/equilibrium.hpp"

namespace strtherm {

struct EnergyLevel {
    double momentum;  // C - c_bar
    double energy;    // momentum^2 / (2M)
};

EnergyLevel energy_level(double c, double c_bar, std::size_t bits);

/// Mean energy level over the histogram.
double internal_energy(const Histogram& h, double c_bar);

/// Entropy per particle in bits, split into the occupation-number
/// (thermodynamic) part and the bit-arrangement (microstate) part.
/// The microstate part includes the one-bit degeneracy of k vs M - k.
struct HistogramEntropy {
    double thermo;
    double micro;
};

HistogramEntropy entropy(const Histogram& h);

/// Z = sqrt(pi M T / 2), the Gaussian sum over exp(-E / T). Throws DegenerateModel for T <= 0.
double partition_function(std::size_t bits, double temperature);

/// T / 2, the one-dimensional Maxwell-Boltzmann mean energy.
double equilibrium_internal_energy(double temperature);

struct EquilibriumEntropy {
    double thermo;        // bits per particle
    double micro_per_bit; // binary entropy of c_bar / M
};

EquilibriumEntropy equilibrium_entropy(std::size_t bits, double temperature, double c_bar);

/// Whole-ensemble relations with volume V = sqrt(M).
struct EnsembleThermo {
    double entropy_nats;
    double free_energy;
    double pressure;
    double volume;
};

EnsembleThermo ensemble_thermo(std::size_t observations, std::size_t bits, double temperature);

/// Observed and equilibrium quantities for one histogram. Equilibrium
/// fields are empty when the model is degenerate.
struct ThermoReport {
    double temperature = 0.0;
    double u_bar = 0.0;
    std::optional<double> u_bar_eq;
    double s_thermo = 0.0;                  // bits/particle
    std::optional<double> s_thermo_eq;      // bits/particle
    double s_micro = 0.0;                   // bits/particle
    double s_micro_per_bit = 0.0;           // bits/bit
    std::optional<double> s_micro_eq_per_bit;
    std::optional<double> z;
    std::optional<double> s_nats;           // nats, whole ensemble
    std::optional<double> free_energy;
    std::optional<double> pressure;
    double volume = 0.0;
    bool degenerate = false;
    std::optional<double> fit_quality;
};

ThermoReport thermo_report(const Histogram& h, const EquilibriumModel& m);

}  // namespace strtherm
