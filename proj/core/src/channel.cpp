#include "rislink/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rislink/errors.hpp"

namespace rislink {
namespace {

constexpr double kMaxUmaDistance = 5000.0;

// splitmix64; fixed arithmetic so phase streams are identical on every platform.
class PhaseStream {
public:
    explicit PhaseStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    Complex next_phasor() {
        const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return std::polar(1.0, 2.0 * std::numbers::pi * u);
    }

private:
    std::uint64_t state_;
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    PhaseStream s(seed ^ (0xD1B54A32D192ED03ULL * (stream + 1)));
    return s.next_u64();
}

void require_positive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw InvalidArgument(std::string(what) + " must be positive and finite");
    }
}

}  // namespace

void PathLossParams::validate() const {
    require_positive(fc_ghz, "carrier frequency");
    if (!std::isfinite(bs_gain_dbi) || !std::isfinite(ue_gain_dbi)) {
        throw InvalidArgument("antenna gains must be finite");
    }
    if (shadow_sigma_inh_db != 0.0 || shadow_sigma_uma_db != 0.0) {
        throw InvalidArgument("shadow fading is not supported; sigma must be 0");
    }
}

double wavelength_m(double fc_ghz) {
    require_positive(fc_ghz, "carrier frequency");
    return kSpeedOfLight / (fc_ghz * 1e9);
}

double inh_gain_db(const PathLossParams& params, double distance_m, double antenna_gain_dbi) {
    params.validate();
    require_positive(distance_m, "InH distance");
    return antenna_gain_dbi - 32.4 - 17.3 * std::log10(distance_m) -
           20.0 * std::log10(params.fc_ghz) - params.shadow_sigma_inh_db;
}

double uma_breakpoint_distance(const PathLossParams& params, double h_bs, double h_ut) {
    params.validate();
    const double h_e = 1.0;
    return 4.0 * (h_bs - h_e) * (h_ut - h_e) * params.fc_ghz * 1e9 / kSpeedOfLight;
}

double uma_los_gain_db(const PathLossParams& params, const ScenarioGeometry& geom) {
    params.validate();
    const double d_st = geom.d_st();
    if (d_st < kMinUmaDistance || d_st > kMaxUmaDistance) {
        throw OutOfModelRange("UMa LOS is valid for 10 m <= d_st <= 5 km, got " +
                              std::to_string(d_st) + " m");
    }
    const double d3 = geom.d_st_prime();
    const double fc_term = 20.0 * std::log10(params.fc_ghz);
    const double d_bp = uma_breakpoint_distance(params, geom.h_bs(), geom.h_ut());

    double path_loss = 0.0;
    if (d_st <= d_bp) {
        path_loss = 28.0 + 22.0 * std::log10(d3) + fc_term;
    } else {
        const double dh = geom.h_bs() - geom.h_ut();
        path_loss = 28.0 + 40.0 * std::log10(d3) + fc_term - 9.0 * std::log10(d_bp * d_bp + dh * dh);
    }
    return params.bs_gain_dbi - (path_loss + params.shadow_sigma_uma_db);
}

void LinkGains::validate() const {
    for (double b : {beta_st, beta_tr, beta_rd}) {
        if (!(b > 0.0 && b < 1.0)) {
            throw InvalidArgument("link power gains must lie in (0, 1)");
        }
    }
    if (!(p >= 0.0) || !std::isfinite(p)) {
        throw InvalidArgument("transmit power must be non-negative");
    }
    require_positive(delta_sq, "noise power");
}

LinkGains LinkGains::with_transmit_power(double watts) const {
    LinkGains out = *this;
    out.p = watts;
    out.validate();
    return out;
}

LinkGains link_gains(const PathLossParams& params, const ScenarioGeometry& geom,
                     PowerLevel transmit, PowerLevel noise) {
    // BS gain enters once, on the outdoor link; indoor links use the 0 dBi UE-side gain.
    LinkGains g;
    g.beta_st = db_to_linear(uma_los_gain_db(params, geom));
    g.beta_tr = db_to_linear(inh_gain_db(params, geom.d_tr(), params.ue_gain_dbi));
    g.beta_rd = db_to_linear(inh_gain_db(params, geom.d_rd(), params.ue_gain_dbi));
    g.p = transmit.watts();
    g.delta_sq = noise.watts();
    g.validate();
    return g;
}

ComplexMatrix RankOneChannel::matrix() const { return q * g_rx * g_tx.transpose(); }

ComplexVector synthesize_link_vector(std::size_t n, double amplitude, std::uint64_t seed) {
    if (n == 0) {
        throw InvalidArgument("element count must be at least 1");
    }
    require_positive(amplitude, "channel amplitude");
    PhaseStream stream(seed);
    ComplexVector v(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v[i] = amplitude * stream.next_phasor();
    }
    return v;
}

RankOneChannel synthesize_rank_one(std::size_t n_rx, std::size_t n_tx, double amplitude,
                                   std::uint64_t seed) {
    if (n_rx == 0 || n_tx == 0) {
        throw InvalidArgument("rank-one channel needs n_rx, n_tx >= 1");
    }
    require_positive(amplitude, "path gain amplitude");
    PhaseStream path(derive_seed(seed, 0));
    RankOneChannel ch;
    ch.q = amplitude * path.next_phasor();
    ch.g_rx = synthesize_link_vector(n_rx, 1.0, derive_seed(seed, 1));
    ch.g_tx = synthesize_link_vector(n_tx, 1.0, derive_seed(seed, 2));
    return ch;
}

ChannelRealization synthesize_channels(std::size_t n_t, std::size_t n_refl, const LinkGains& gains,
                                       std::uint64_t seed) {
    gains.validate();
    ChannelRealization c;
    c.h_st = synthesize_link_vector(n_t, std::sqrt(gains.beta_st), derive_seed(seed, 10));
    c.h_tr = synthesize_rank_one(n_refl, n_t, std::sqrt(gains.beta_tr), derive_seed(seed, 11));
    c.h_rd = synthesize_link_vector(n_refl, std::sqrt(gains.beta_rd), derive_seed(seed, 12));
    return c;
}

FarFieldCheck farfield_holds(double d_tr, std::size_t n_rx, double element_spacing_m,
                             double wavelength) {
    require_positive(d_tr, "d_tr");
    require_positive(element_spacing_m, "element spacing");
    require_positive(wavelength, "wavelength");
    if (n_rx == 0) {
        throw InvalidArgument("n_rx must be at least 1");
    }
    FarFieldCheck out;
    out.threshold_m =
        std::sqrt(static_cast<double>(n_rx)) * element_spacing_m * element_spacing_m / wavelength;
    out.ratio = d_tr / out.threshold_m;
    // Relative slack of 1e-12 so a distance of exactly 10x the threshold passes.
    out.holds = out.ratio >= kFarFieldMargin * (1.0 - 1e-12);
    return out;
}

}  // namespace rislink
