#pragma once
// Link-gain models for the three V2X link classes: composite path loss
// (free-space + atmospheric + scintillation + clutter + shadowing), the
// Rician vehicle-to-HAPS channel, and large/small-scale terrestrial fading.
// All gains at the module boundary are dimensionless linear power gains.

#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <stdexcept>

namespace hapsv2x {

struct PathLossParams {
    double carrier_frequency_hz = 2.0e9;
    double atmospheric_loss_db = 0.0;
    double scintillation_loss_db = 0.0;
    double clutter_loss_db = 0.0;
    double shadowing_sigma_db = 0.0; // std of the log-normal shadow fading term

    void validate() const {
        if (!(carrier_frequency_hz > 0.0) || !std::isfinite(carrier_frequency_hz))
            throw std::invalid_argument("PathLossParams: carrier_frequency_hz must be positive");
        for (double v : {atmospheric_loss_db, scintillation_loss_db, clutter_loss_db,
                         shadowing_sigma_db}) {
            if (!(v >= 0.0) || !std::isfinite(v))
                throw std::invalid_argument(
                    "PathLossParams: loss terms must be finite and non-negative");
        }
    }
};

// LoS/NLoS mixture weights of the Rician HAPS link. The probabilities are
// fixed configuration constants; p_nlos is derived so the pair always sums
// to one.
class RicianParams {
  public:
    explicit RicianParams(double p_los, double los_phase_rad = 0.0)
        : p_los_(p_los), p_nlos_(1.0 - p_los), los_phase_rad_(los_phase_rad) {
        if (!(p_los >= 0.0 && p_los <= 1.0))
            throw std::invalid_argument("RicianParams: p_los must lie in [0,1]");
        if (!std::isfinite(los_phase_rad))
            throw std::invalid_argument("RicianParams: los_phase_rad must be finite");
    }

    double p_los() const { return p_los_; }
    double p_nlos() const { return p_nlos_; }
    double los_phase_rad() const { return los_phase_rad_; }

  private:
    double p_los_;
    double p_nlos_;
    double los_phase_rad_;
};

// Dimensionless linear power gain of one link on one sub-channel.
struct LinkGain {
    double value = 0.0;

    explicit LinkGain(double v) : value(v) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("LinkGain: value must be finite and non-negative");
    }
};

// One realization of the terrestrial two-factor fading model: large-scale
// (path loss + shadowing) times small-scale envelope power.
struct FadingSample {
    double large_scale = 0.0;
    double small_scale = 0.0;

    FadingSample(double ls, double ss) : large_scale(ls), small_scale(ss) {
        if (!(ls >= 0.0) || !std::isfinite(ls) || !(ss >= 0.0) || !std::isfinite(ss))
            throw std::invalid_argument("FadingSample: components must be finite and >= 0");
    }
};

// Free-space path loss, dB. Frequency in MHz and distance in km inside the
// usual 32.45 constant.
inline double free_space_path_loss_db(double distance_m, double carrier_frequency_hz) {
    const double f_mhz = carrier_frequency_hz / 1.0e6;
    const double d_km = distance_m / 1.0e3;
    return 32.45 + 20.0 * std::log10(f_mhz) + 20.0 * std::log10(d_km);
}

// Composite path loss: FSPL plus the fixed atmospheric/scintillation/clutter
// losses plus the caller-supplied shadowing draw.
inline double path_loss_db(double distance_m, const PathLossParams& params, double shadow_db) {
    if (!(distance_m > 0.0))
        throw std::domain_error("path_loss_db: distance_m must be positive");
    return free_space_path_loss_db(distance_m, params.carrier_frequency_hz) +
           params.atmospheric_loss_db + params.scintillation_loss_db + params.clutter_loss_db +
           shadow_db;
}

// Rician V2H gain: amplitude 10^(-PL/20) * (sqrt(pL) a + sqrt(pN) g) with a
// unit-magnitude deterministic LoS component; returned as squared magnitude.
inline LinkGain v2h_gain(double pl_db, const RicianParams& rician,
                         std::complex<double> small_scale) {
    const std::complex<double> los =
        std::polar(1.0, rician.los_phase_rad());
    const std::complex<double> amplitude =
        std::pow(10.0, -pl_db / 20.0) *
        (std::sqrt(rician.p_los()) * los + std::sqrt(rician.p_nlos()) * small_scale);
    return LinkGain(std::norm(amplitude));
}

// Terrestrial V2I/V2V gain: product of the two fading factors.
inline LinkGain v2x_gain(const FadingSample& fading) {
    return LinkGain(fading.large_scale * fading.small_scale);
}

// Zero-mean unit-variance complex Gaussian scattering term of the V2H link.
inline std::complex<double> sample_v2h_small_scale(std::mt19937_64& rng) {
    std::normal_distribution<double> component(0.0, std::sqrt(0.5));
    const double re = component(rng);
    const double im = component(rng);
    return {re, im};
}

// Rayleigh envelope power of the terrestrial links: unit-mean exponential.
inline double sample_v2x_envelope_power(std::mt19937_64& rng) {
    std::exponential_distribution<double> power(1.0);
    return power(rng);
}

inline double sample_shadowing_db(std::mt19937_64& rng, double sigma_db) {
    if (sigma_db == 0.0) return 0.0;
    std::normal_distribution<double> shadow(0.0, sigma_db);
    return shadow(rng);
}

} // namespace hapsv2x
