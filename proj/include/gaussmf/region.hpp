#pragma once

// Bounded Jordan regions U in the plane and the lattice sets k*U they cut out.
//
// Boundary conventions are fixed so that enumeration is deterministic:
// rectangles are half-open (x0 < x <= x1, y0 < y <= y1), disks are closed,
// annulus sectors are open. The shifted square is not a dilation of a fixed
// region; at scale k it is floor(k^(1+eps)) + {|Re z|, |Im z| < k}.

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace gmf {

struct Box {
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};

struct LatticeBox {
    std::int64_t x0 = 0, x1 = -1, y0 = 0, y1 = -1; // inclusive ranges

    [[nodiscard]] bool empty() const noexcept { return x1 < x0 || y1 < y0; }
    [[nodiscard]] std::uint64_t cells() const noexcept
    {
        return empty() ? 0 : static_cast<std::uint64_t>(x1 - x0 + 1) * static_cast<std::uint64_t>(y1 - y0 + 1);
    }
};

class JordanRegion {
public:
    enum class Kind { Rectangle, Disk, AnnulusSector, ShiftedSquare, Union };

    static JordanRegion rectangle(double x0, double x1, double y0, double y1);
    static JordanRegion disk(double cx, double cy, double r);
    // r0 < |z| < r1 and Arg z within the open interval (theta_lo, theta_hi),
    // measured as a signed offset from the midpoint so the interval may wrap.
    static JordanRegion annulus_sector(double r0, double r1, double theta_lo, double theta_hi);
    // B_eps: 1 - eps < |z| < 1 + eps, Arg z in (-pi eps, pi eps).
    static JordanRegion b_eps(double eps);
    static JordanRegion shifted_square(double eps);
    static JordanRegion make_union(std::vector<JordanRegion> parts);

    [[nodiscard]] Kind kind() const noexcept;
    [[nodiscard]] bool is_dilated() const noexcept { return kind() != Kind::ShiftedSquare; }

    // Membership of a point of U itself (dilated kinds only).
    [[nodiscard]] bool contains(double x, double y) const;
    // Membership of the lattice point x+iy in the scale-k set.
    [[nodiscard]] bool contains_scaled(std::int64_t x, std::int64_t y, double k) const;

    [[nodiscard]] Box bbox() const;
    [[nodiscard]] LatticeBox lattice_box(double k) const;

    // Closed form where available, quadrature for unions.
    [[nodiscard]] double area() const;

    [[nodiscard]] nlohmann::json to_json() const;
    // Accepts a descriptor object or one of the names "square" ((0,1]^2),
    // "centered_square" ((-1,1]^2), "disk" (closed unit disk).
    static JordanRegion from_json(const nlohmann::json& j);
    // Parses inline JSON, a bare name, or @path.
    static JordanRegion parse(const std::string& text);

private:
    struct Rect {
        double x0, x1, y0, y1;
    };
    struct Circle {
        double cx, cy, r;
    };
    struct Sector {
        double r0, r1, theta_lo, theta_hi;
    };
    struct Shifted {
        double eps;
    };
    struct Parts {
        std::vector<JordanRegion> parts;
    };
    using Shape = std::variant<Rect, Circle, Sector, Shifted, Parts>;

    explicit JordanRegion(Shape s) : shape_(std::move(s)) {}

    Shape shape_;
};

// Lebesgue measure of U in each quadrant Q1..Q4, where Q_{k+1} = i^k Q1 and
// Q1 = {Re > 0, Im >= 0}. Adaptive grid quadrature: a 512^2 coarse grid per
// quadrant, cells straddling the boundary refined to 64^2 midpoints.
[[nodiscard]] std::array<double, 4> quadrant_areas(const JordanRegion& region);
// quadrant_areas normalized to sum to 1.
[[nodiscard]] std::array<double, 4> quadrant_weights(const JordanRegion& region);

} // namespace gmf
