#include "rislink/geometry.hpp"

#include <cmath>
#include <string>

#include "rislink/errors.hpp"

namespace rislink {
namespace {

bool finite(const Point3& p) {
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

}  // namespace

double distance(const Point3& a, const Point3& b) {
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

ScenarioGeometry::ScenarioGeometry(double h_bs, double h_ut, double d_st, Point3 pos_bs,
                                   Point3 pos_tris, Point3 pos_rris, Point3 pos_ue)
    : h_bs_(h_bs),
      h_ut_(h_ut),
      d_st_(d_st),
      pos_bs_(pos_bs),
      pos_tris_(pos_tris),
      pos_rris_(pos_rris),
      pos_ue_(pos_ue) {
    if (!finite(pos_bs) || !finite(pos_tris) || !finite(pos_rris) || !finite(pos_ue) ||
        !std::isfinite(h_bs) || !std::isfinite(h_ut) || !std::isfinite(d_st)) {
        throw InvalidArgument("geometry coordinates must be finite");
    }
    d_st_prime_ = distance(pos_bs_, pos_tris_);
    d_tr_ = distance(pos_tris_, pos_rris_);
    d_rd_ = distance(pos_rris_, pos_ue_);
    if (!(d_st_prime_ > 0.0) || !(d_tr_ > 0.0) || !(d_rd_ > 0.0)) {
        throw InvalidArgument("link distances must be positive");
    }
}

ScenarioGeometry build_reference_geometry(double d_st, double h_bs, double h_ut) {
    if (!std::isfinite(d_st) || !std::isfinite(h_bs) || !std::isfinite(h_ut)) {
        throw InvalidArgument("geometry parameters must be finite");
    }
    if (d_st < kMinUmaDistance) {
        throw OutOfModelRange("d_st = " + std::to_string(d_st) +
                              " m is below the 10 m UMa validity limit");
    }
    // The BS is offset horizontally by d_st and vertically by h_bs - h_ut,
    // so |BS - TRIS| = sqrt(d_st^2 + (h_bs - h_ut)^2).
    const Point3 bs{0.0, 0.0, h_bs};
    const Point3 tris{d_st, 0.0, h_ut};
    const Point3 rris{d_st + 2.0, 4.0, h_ut};
    const Point3 ue{d_st + 4.0, 2.0, h_ut};
    return ScenarioGeometry(h_bs, h_ut, d_st, bs, tris, rris, ue);
}

}  // namespace rislink
