#pragma once

namespace rislink {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

double distance(const Point3& a, const Point3& b);

/// Outdoor BS, window-mounted transmission RIS, indoor reflective RIS and UE.
///
/// The BS sits at the origin at height `h_bs`; the transmission RIS is
/// `d_st` metres away horizontally at height `h_ut`. The reflective RIS and
/// UE are placed at fixed offsets from the transmission RIS, also at `h_ut`,
/// so both indoor links are horizontal.
class ScenarioGeometry {
public:
    ScenarioGeometry(double h_bs, double h_ut, double d_st, Point3 pos_bs, Point3 pos_tris,
                     Point3 pos_rris, Point3 pos_ue);

    double h_bs() const noexcept { return h_bs_; }
    double h_ut() const noexcept { return h_ut_; }
    /// Horizontal BS to transmission-RIS distance.
    double d_st() const noexcept { return d_st_; }
    /// 3-D BS to transmission-RIS distance.
    double d_st_prime() const noexcept { return d_st_prime_; }
    double d_tr() const noexcept { return d_tr_; }
    double d_rd() const noexcept { return d_rd_; }

    const Point3& pos_bs() const noexcept { return pos_bs_; }
    const Point3& pos_tris() const noexcept { return pos_tris_; }
    const Point3& pos_rris() const noexcept { return pos_rris_; }
    const Point3& pos_ue() const noexcept { return pos_ue_; }

private:
    double h_bs_;
    double h_ut_;
    double d_st_;
    Point3 pos_bs_;
    Point3 pos_tris_;
    Point3 pos_rris_;
    Point3 pos_ue_;
    double d_st_prime_;
    double d_tr_;
    double d_rd_;
};

inline constexpr double kDefaultBsHeight = 25.0;
inline constexpr double kDefaultUtHeight = 19.5;
inline constexpr double kMinUmaDistance = 10.0;

/// Reference indoor-enhancement layout. Throws OutOfModelRange for d_st < 10 m.
ScenarioGeometry build_reference_geometry(double d_st, double h_bs = kDefaultBsHeight,
                                          double h_ut = kDefaultUtHeight);

}  // namespace rislink
