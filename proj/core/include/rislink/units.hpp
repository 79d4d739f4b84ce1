#pragma once

// Power and gain unit conversions. Watts are the canonical internal unit;
// dB, dBm and dBW only appear at configuration boundaries.

namespace rislink {

double db_to_linear(double db);
double linear_to_db(double linear);

/// Dimensionless ratio expressed in dB.
class Decibel {
public:
    constexpr Decibel() = default;
    explicit Decibel(double value);

    static Decibel from_linear(double ratio);

    constexpr double value() const noexcept { return value_; }
    double linear() const { return db_to_linear(value_); }
    /// sqrt of the linear ratio, for dB-configured power gains applied as amplitudes.
    double amplitude() const;

private:
    double value_ = 0.0;
};

/// Non-negative power, stored in watts.
class PowerLevel {
public:
    constexpr PowerLevel() = default;

    static PowerLevel from_watts(double watts);
    static PowerLevel from_dbm(double dbm);
    static PowerLevel from_dbw(double dbw);

    constexpr double watts() const noexcept { return watts_; }
    double dbm() const;
    double dbw() const;

    friend constexpr bool operator==(PowerLevel, PowerLevel) = default;

private:
    explicit constexpr PowerLevel(double watts) : watts_(watts) {}
    double watts_ = 0.0;
};

PowerLevel dbm_to_watts(double dbm);
PowerLevel dbw_to_watts(double dbw);

}  // namespace rislink
