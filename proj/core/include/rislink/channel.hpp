#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "rislink/geometry.hpp"
#include "rislink/units.hpp"

namespace rislink {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// 3GPP TR 38.901 convention; also used for the wavelength.
inline constexpr double kSpeedOfLight = 3.0e8;

struct PathLossParams {
    double fc_ghz = 28.0;
    double bs_gain_dbi = 5.0;
    double ue_gain_dbi = 0.0;
    // Deterministic channels only: both must stay 0.
    double shadow_sigma_inh_db = 0.0;
    double shadow_sigma_uma_db = 0.0;

    void validate() const;
};

double wavelength_m(double fc_ghz);

/// InH-Office LOS channel gain in dB for an antenna of `antenna_gain_dbi`.
double inh_gain_db(const PathLossParams& params, double distance_m, double antenna_gain_dbi);

/// LOS breakpoint distance with a 1 m effective environment height.
double uma_breakpoint_distance(const PathLossParams& params, double h_bs, double h_ut);

/// UMa LOS channel gain in dB on the BS to transmission-RIS link, including
/// the BS antenna gain. Valid for 10 m <= d_st <= 5 km.
double uma_los_gain_db(const PathLossParams& params, const ScenarioGeometry& geom);

/// Linear power gains of the three cascaded links plus transmit and noise power.
struct LinkGains {
    double beta_st = 0.0;
    double beta_tr = 0.0;
    double beta_rd = 0.0;
    double p = 0.0;         // transmit power, W
    double delta_sq = 0.0;  // noise power, W

    void validate() const;
    LinkGains with_transmit_power(double watts) const;
};

LinkGains link_gains(const PathLossParams& params, const ScenarioGeometry& geom,
                     PowerLevel transmit, PowerLevel noise);

/// LOS channel matrix q * g_rx * g_tx^T between the transmission RIS and a
/// reflective surface. Rows index reflective elements, columns transmission
/// elements.
struct RankOneChannel {
    Complex q;
    ComplexVector g_rx;
    ComplexVector g_tx;

    std::size_t n_rx() const noexcept { return static_cast<std::size_t>(g_rx.size()); }
    std::size_t n_tx() const noexcept { return static_cast<std::size_t>(g_tx.size()); }
    ComplexMatrix matrix() const;
};

RankOneChannel synthesize_rank_one(std::size_t n_rx, std::size_t n_tx, double amplitude,
                                   std::uint64_t seed);

/// amplitude * e^{j theta_k} with seed-deterministic phases.
ComplexVector synthesize_link_vector(std::size_t n, double amplitude, std::uint64_t seed);

/// One phase realization of every link, with amplitudes sqrt(beta) taken from `gains`.
struct ChannelRealization {
    ComplexVector h_st;
    RankOneChannel h_tr;
    ComplexVector h_rd;
};

ChannelRealization synthesize_channels(std::size_t n_t, std::size_t n_refl, const LinkGains& gains,
                                       std::uint64_t seed);

struct FarFieldCheck {
    bool holds = false;
    double ratio = 0.0;        // d_tr / (sqrt(n_rx) l^2 / lambda)
    double threshold_m = 0.0;  // sqrt(n_rx) l^2 / lambda
};

inline constexpr double kFarFieldMargin = 10.0;

/// Rank-one validity: d_tr >> sqrt(n_rx) l^2 / lambda, read as a ratio of at least 10.
FarFieldCheck farfield_holds(double d_tr, std::size_t n_rx, double element_spacing_m,
                             double wavelength);

}  // namespace rislink
