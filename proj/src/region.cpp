#include "gaussmf/region.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gaussmf/error.hpp"
#include "gaussmf/parallel.hpp"

namespace gmf {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double wrap_angle(double a)
{
    a = std::fmod(a + kPi, 2 * kPi);
    if (a < 0) a += 2 * kPi;
    return a - kPi;
}

double shift_of(double eps, double k) { return std::floor(std::pow(k, 1.0 + eps)); }

double required(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_number()) {
        throw DomainError(std::string("region descriptor needs numeric '") + key + "'");
    }
    return j[key].get<double>();
}

double optional(const nlohmann::json& j, const char* key, double fallback)
{
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw DomainError(std::string("region field '") + key + "' must be numeric");
    return j[key].get<double>();
}

constexpr int kCoarse = 512;
constexpr int kFine = 64;

double box_area(const JordanRegion& region, const Box& b)
{
    if (!(b.x1 > b.x0) || !(b.y1 > b.y0)) return 0.0;
    const double dx = (b.x1 - b.x0) / kCoarse;
    const double dy = (b.y1 - b.y0) / kCoarse;
    const double cell = dx * dy;
    std::vector<CompensatedSum> rows(kCoarse);

#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < kCoarse; ++i) {
        CompensatedSum s;
        const double x = b.x0 + i * dx;
        for (int j = 0; j < kCoarse; ++j) {
            const double y = b.y0 + j * dy;
            int inside = 0;
            for (int a = 0; a <= 2; ++a) {
                for (int c = 0; c <= 2; ++c) {
                    inside += region.contains(x + 0.5 * a * dx, y + 0.5 * c * dy);
                }
            }
            if (inside == 9) {
                s.add(cell);
            } else if (inside > 0) {
                int hits = 0;
                for (int a = 0; a < kFine; ++a) {
                    const double px = x + (a + 0.5) * dx / kFine;
                    for (int c = 0; c < kFine; ++c) {
                        hits += region.contains(px, y + (c + 0.5) * dy / kFine);
                    }
                }
                s.add(cell * hits / (kFine * kFine));
            }
        }
        rows[static_cast<std::size_t>(i)] = s;
    }
    return merge_in_order(rows).value();
}

} // namespace

JordanRegion JordanRegion::rectangle(double x0, double x1, double y0, double y1)
{
    if (!(x1 > x0) || !(y1 > y0)) throw DomainError("rectangle needs x1 > x0 and y1 > y0");
    return JordanRegion(Rect{x0, x1, y0, y1});
}

JordanRegion JordanRegion::disk(double cx, double cy, double r)
{
    if (!(r > 0)) throw DomainError("disk needs r > 0");
    return JordanRegion(Circle{cx, cy, r});
}

JordanRegion JordanRegion::annulus_sector(double r0, double r1, double theta_lo, double theta_hi)
{
    if (!(r0 >= 0) || !(r1 > r0)) throw DomainError("annulus sector needs 0 <= r0 < r1");
    if (!(theta_hi > theta_lo)) throw DomainError("annulus sector needs theta1 > theta0");
    return JordanRegion(Sector{r0, r1, theta_lo, theta_hi});
}

JordanRegion JordanRegion::b_eps(double eps)
{
    if (!(eps > 0 && eps < 1)) throw DomainError("B_eps needs eps in (0, 1)");
    return annulus_sector(1 - eps, 1 + eps, -kPi * eps, kPi * eps);
}

JordanRegion JordanRegion::shifted_square(double eps)
{
    if (!(eps > 0)) throw DomainError("shifted square needs eps > 0");
    return JordanRegion(Shifted{eps});
}

JordanRegion JordanRegion::make_union(std::vector<JordanRegion> parts)
{
    if (parts.empty()) throw DomainError("union needs at least one part");
    for (const auto& p : parts) {
        if (!p.is_dilated()) throw DomainError("union parts must be dilated regions");
    }
    return JordanRegion(Parts{std::move(parts)});
}

JordanRegion::Kind JordanRegion::kind() const noexcept
{
    return static_cast<Kind>(shape_.index());
}

bool JordanRegion::contains(double x, double y) const
{
    return std::visit(Overloaded{
                          [&](const Rect& r) { return x > r.x0 && x <= r.x1 && y > r.y0 && y <= r.y1; },
                          [&](const Circle& c) {
                              const double u = x - c.cx, v = y - c.cy;
                              return u * u + v * v <= c.r * c.r;
                          },
                          [&](const Sector& s) {
                              const double rr = x * x + y * y;
                              if (!(rr > s.r0 * s.r0 && rr < s.r1 * s.r1)) return false;
                              const double mid = 0.5 * (s.theta_lo + s.theta_hi);
                              const double half = 0.5 * (s.theta_hi - s.theta_lo);
                              if (half >= kPi) return true;
                              return std::fabs(wrap_angle(std::atan2(y, x) - mid)) < half;
                          },
                          [&](const Shifted&) -> bool {
                              throw DomainError("shifted square is not a fixed region");
                          },
                          [&](const Parts& p) {
                              return std::any_of(p.parts.begin(), p.parts.end(),
                                                 [&](const JordanRegion& r) { return r.contains(x, y); });
                          },
                      },
                      shape_);
}

bool JordanRegion::contains_scaled(std::int64_t x, std::int64_t y, double k) const
{
    const auto fx = static_cast<double>(x);
    const auto fy = static_cast<double>(y);
    return std::visit(Overloaded{
                          [&](const Rect& r) {
                              return fx > r.x0 * k && fx <= r.x1 * k && fy > r.y0 * k && fy <= r.y1 * k;
                          },
                          [&](const Circle& c) {
                              const double u = fx - c.cx * k, v = fy - c.cy * k;
                              return u * u + v * v <= c.r * c.r * k * k;
                          },
                          [&](const Sector&) { return contains(fx / k, fy / k); },
                          [&](const Shifted& s) {
                              const double c = shift_of(s.eps, k);
                              return std::fabs(fx - c) < k && std::fabs(fy) < k;
                          },
                          [&](const Parts& p) {
                              return std::any_of(p.parts.begin(), p.parts.end(), [&](const JordanRegion& r) {
                                  return r.contains_scaled(x, y, k);
                              });
                          },
                      },
                      shape_);
}

Box JordanRegion::bbox() const
{
    return std::visit(Overloaded{
                          [](const Rect& r) { return Box{r.x0, r.x1, r.y0, r.y1}; },
                          [](const Circle& c) { return Box{c.cx - c.r, c.cx + c.r, c.cy - c.r, c.cy + c.r}; },
                          [](const Sector& s) { return Box{-s.r1, s.r1, -s.r1, s.r1}; },
                          [](const Shifted&) -> Box { throw DomainError("shifted square has no fixed box"); },
                          [](const Parts& p) {
                              Box b = p.parts.front().bbox();
                              for (const auto& r : p.parts) {
                                  const Box c = r.bbox();
                                  b = {std::min(b.x0, c.x0), std::max(b.x1, c.x1), std::min(b.y0, c.y0),
                                       std::max(b.y1, c.y1)};
                              }
                              return b;
                          },
                      },
                      shape_);
}

LatticeBox JordanRegion::lattice_box(double k) const
{
    if (!(k > 0)) throw DomainError("scale must be positive");
    if (const auto* s = std::get_if<Shifted>(&shape_)) {
        const double c = shift_of(s->eps, k);
        return {static_cast<std::int64_t>(std::floor(c - k)) + 1, static_cast<std::int64_t>(std::ceil(c + k)) - 1,
                static_cast<std::int64_t>(std::floor(-k)) + 1, static_cast<std::int64_t>(std::ceil(k)) - 1};
    }
    const Box b = bbox();
    return {static_cast<std::int64_t>(std::ceil(b.x0 * k)), static_cast<std::int64_t>(std::floor(b.x1 * k)),
            static_cast<std::int64_t>(std::ceil(b.y0 * k)), static_cast<std::int64_t>(std::floor(b.y1 * k))};
}

double JordanRegion::area() const
{
    return std::visit(Overloaded{
                          [](const Rect& r) { return (r.x1 - r.x0) * (r.y1 - r.y0); },
                          [](const Circle& c) { return kPi * c.r * c.r; },
                          [](const Sector& s) {
                              const double half = std::min(0.5 * (s.theta_hi - s.theta_lo), kPi);
                              return half * (s.r1 * s.r1 - s.r0 * s.r0);
                          },
                          [](const Shifted&) -> double { throw DomainError("shifted square has no fixed area"); },
                          [this](const Parts&) {
                              const auto q = quadrant_areas(*this);
                              return q[0] + q[1] + q[2] + q[3];
                          },
                      },
                      shape_);
}

nlohmann::json JordanRegion::to_json() const
{
    return std::visit(Overloaded{
                          [](const Rect& r) {
                              return nlohmann::json{{"kind", "rectangle"}, {"x0", r.x0}, {"x1", r.x1},
                                                    {"y0", r.y0},          {"y1", r.y1}};
                          },
                          [](const Circle& c) {
                              return nlohmann::json{{"kind", "disk"}, {"cx", c.cx}, {"cy", c.cy}, {"r", c.r}};
                          },
                          [](const Sector& s) {
                              return nlohmann::json{{"kind", "annulus_sector"}, {"r0", s.r0},
                                                    {"r1", s.r1},               {"theta0", s.theta_lo},
                                                    {"theta1", s.theta_hi}};
                          },
                          [](const Shifted& s) { return nlohmann::json{{"kind", "shifted_square"}, {"eps", s.eps}}; },
                          [](const Parts& p) {
                              nlohmann::json parts = nlohmann::json::array();
                              for (const auto& r : p.parts) parts.push_back(r.to_json());
                              return nlohmann::json{{"kind", "union"}, {"parts", parts}};
                          },
                      },
                      shape_);
}

JordanRegion JordanRegion::from_json(const nlohmann::json& j)
{
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        if (name == "square") return rectangle(0, 1, 0, 1);
        if (name == "centered_square") return rectangle(-1, 1, -1, 1);
        if (name == "disk") return disk(0, 0, 1);
        throw DomainError("unknown region name '" + name + "'");
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw DomainError("region descriptor must be an object with a 'kind'");
    }
    const auto kind = j["kind"].get<std::string>();
    if (kind == "rectangle") {
        return rectangle(required(j, "x0"), required(j, "x1"), required(j, "y0"), required(j, "y1"));
    }
    if (kind == "disk") return disk(optional(j, "cx", 0), optional(j, "cy", 0), required(j, "r"));
    if (kind == "annulus_sector") {
        if (j.contains("eps")) return b_eps(required(j, "eps"));
        return annulus_sector(required(j, "r0"), required(j, "r1"), required(j, "theta0"), required(j, "theta1"));
    }
    if (kind == "shifted_square") return shifted_square(required(j, "eps"));
    if (kind == "union") {
        if (!j.contains("parts") || !j["parts"].is_array()) throw DomainError("union needs a 'parts' array");
        std::vector<JordanRegion> parts;
        for (const auto& p : j["parts"]) parts.push_back(from_json(p));
        return make_union(std::move(parts));
    }
    throw DomainError("unknown region kind '" + kind + "'");
}

JordanRegion JordanRegion::parse(const std::string& text)
{
    std::string body = text;
    if (!body.empty() && body[0] == '@') {
        std::ifstream in(body.substr(1));
        if (!in) throw DomainError("cannot open region file " + body.substr(1));
        std::ostringstream ss;
        ss << in.rdbuf();
        body = ss.str();
    }
    const auto first = body.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw DomainError("empty region descriptor");
    if (body[first] != '{' && body[first] != '"') {
        const auto last = body.find_last_not_of(" \t\r\n");
        return from_json(nlohmann::json(body.substr(first, last - first + 1)));
    }
    try {
        return from_json(nlohmann::json::parse(body));
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed region JSON: ") + e.what());
    }
}

std::array<double, 4> quadrant_areas(const JordanRegion& region)
{
    const Box b = region.bbox();
    const std::array<Box, 4> quadrants = {
        Box{std::max(b.x0, 0.0), b.x1, std::max(b.y0, 0.0), b.y1},
        Box{b.x0, std::min(b.x1, 0.0), std::max(b.y0, 0.0), b.y1},
        Box{b.x0, std::min(b.x1, 0.0), b.y0, std::min(b.y1, 0.0)},
        Box{std::max(b.x0, 0.0), b.x1, b.y0, std::min(b.y1, 0.0)},
    };
    std::array<double, 4> out{};
    for (std::size_t k = 0; k < 4; ++k) out[k] = box_area(region, quadrants[k]);
    return out;
}

std::array<double, 4> quadrant_weights(const JordanRegion& region)
{
    auto q = quadrant_areas(region);
    const double total = q[0] + q[1] + q[2] + q[3];
    if (!(total > 0)) throw DomainError("region has zero area");
    for (auto& w : q) w /= total;
    return q;
}

} // namespace gmf
