#include "rislink/units.hpp"

#include <cmath>
#include <string>

#include "rislink/errors.hpp"

namespace rislink {
namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw InvalidArgument(std::string(what) + " must be finite");
    }
}

}  // namespace

double db_to_linear(double db) {
    require_finite(db, "dB value");
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double linear) {
    if (!(linear > 0.0) || !std::isfinite(linear)) {
        throw InvalidArgument("linear ratio must be positive and finite");
    }
    return 10.0 * std::log10(linear);
}

Decibel::Decibel(double value) : value_(value) { require_finite(value, "dB value"); }

Decibel Decibel::from_linear(double ratio) { return Decibel(linear_to_db(ratio)); }

double Decibel::amplitude() const { return std::sqrt(linear()); }

PowerLevel PowerLevel::from_watts(double watts) {
    require_finite(watts, "power");
    if (watts < 0.0) {
        throw InvalidArgument("power must be non-negative");
    }
    return PowerLevel(watts);
}

PowerLevel PowerLevel::from_dbm(double dbm) {
    require_finite(dbm, "dBm value");
    return PowerLevel(std::pow(10.0, (dbm - 30.0) / 10.0));
}

PowerLevel PowerLevel::from_dbw(double dbw) {
    require_finite(dbw, "dBW value");
    return PowerLevel(std::pow(10.0, dbw / 10.0));
}

double PowerLevel::dbm() const { return linear_to_db(watts_) + 30.0; }

double PowerLevel::dbw() const { return linear_to_db(watts_); }

PowerLevel dbm_to_watts(double dbm) { return PowerLevel::from_dbm(dbm); }

PowerLevel dbw_to_watts(double dbw) { return PowerLevel::from_dbw(dbw); }

}  // namespace rislink
