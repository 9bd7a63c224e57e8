#pragma once

#include <cmath>
#include <limits>
#include <vector>

namespace planreal {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::sqrt(x * x + y * y); }
    double norm_sq() const { return x * x + y * y; }

    Vec2 normalized() const {
        const double n = norm();
        return n > 0.0 ? Vec2{x / n, y / n} : Vec2{0.0, 0.0};
    }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}
    Vec3(const Vec2& xy, double z_) : x(xy.x), y(xy.y), z(z_) {}

    Vec2 xy() const { return {x, y}; }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    double norm_sq() const { return x * x + y * y + z * z; }

    Vec3 normalized() const {
        const double n = norm();
        return n > 0.0 ? Vec3{x / n, y / n, z / n} : Vec3{0.0, 0.0, 0.0};
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Axis-aligned rectangle in the ground plane.
struct Rect2 {
    Vec2 center;
    Vec2 size;  // full extents

    bool contains(const Vec2& p) const {
        return std::abs(p.x - center.x) <= 0.5 * size.x &&
               std::abs(p.y - center.y) <= 0.5 * size.y;
    }
    Vec2 min() const { return {center.x - 0.5 * size.x, center.y - 0.5 * size.y}; }
    Vec2 max() const { return {center.x + 0.5 * size.x, center.y + 0.5 * size.y}; }
};

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b);
Vec2 closest_point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b);
bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);
double segment_segment_distance(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

/// Convex polygon in the ground plane. Vertices are stored counter-clockwise;
/// construction does not reorder, call ensure_ccw() or validate via is_convex().
struct ConvexPolygon {
    std::vector<Vec2> vertices;

    std::size_t size() const { return vertices.size(); }
    double area() const;              // positive for CCW ordering
    Vec2 centroid() const;
    bool is_convex(double eps = 1e-12) const;
    void ensure_ccw();

    bool contains(const Vec2& p) const;

    /// Negative inside, positive outside, zero on the boundary. Exact.
    double signed_distance(const Vec2& p) const;

    /// Closest point on the polygon boundary.
    Vec2 closest_boundary_point(const Vec2& p) const;

    /// Direction of increasing signed distance at p (points out of the
    /// obstacle when outside, toward the nearest escape when inside).
    Vec2 sdf_gradient(const Vec2& p) const;

    /// Minimum distance from segment [a,b] to the polygon (0 if they overlap).
    double segment_distance(const Vec2& a, const Vec2& b) const;

    void bounds(Vec2& lo, Vec2& hi) const;
};

}  // namespace planreal
