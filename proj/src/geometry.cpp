#include "planreal/geometry.hpp"

#include <algorithm>

namespace planreal {

Vec2 closest_point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 ab = b - a;
    const double len_sq = ab.norm_sq();
    if (len_sq <= 0.0) return a;
    double t = (p - a).dot(ab) / len_sq;
    t = std::clamp(t, 0.0, 1.0);
    return a + ab * t;
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
    return (p - closest_point_on_segment(p, a, b)).norm();
}

namespace {

int orientation(const Vec2& a, const Vec2& b, const Vec2& c) {
    const double v = (b - a).cross(c - a);
    if (v > 1e-12) return 1;
    if (v < -1e-12) return -1;
    return 0;
}

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
    return std::min(a.x, b.x) - 1e-12 <= p.x && p.x <= std::max(a.x, b.x) + 1e-12 &&
           std::min(a.y, b.y) - 1e-12 <= p.y && p.y <= std::max(a.y, b.y) + 1e-12;
}

}  // namespace

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

double segment_segment_distance(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    if (segments_intersect(a, b, c, d)) return 0.0;
    double best = point_segment_distance(a, c, d);
    best = std::min(best, point_segment_distance(b, c, d));
    best = std::min(best, point_segment_distance(c, a, b));
    best = std::min(best, point_segment_distance(d, a, b));
    return best;
}

double ConvexPolygon::area() const {
    double s = 0.0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = vertices[i];
        const Vec2& b = vertices[(i + 1) % n];
        s += a.cross(b);
    }
    return 0.5 * s;
}

Vec2 ConvexPolygon::centroid() const {
    Vec2 c{0.0, 0.0};
    for (const Vec2& v : vertices) c += v;
    return c / static_cast<double>(vertices.size());
}

bool ConvexPolygon::is_convex(double eps) const {
    const std::size_t n = vertices.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = vertices[i];
        const Vec2& b = vertices[(i + 1) % n];
        const Vec2& c = vertices[(i + 2) % n];
        if ((b - a).cross(c - b) < -eps) return false;
    }
    return true;
}

void ConvexPolygon::ensure_ccw() {
    if (area() < 0.0) std::reverse(vertices.begin(), vertices.end());
}

bool ConvexPolygon::contains(const Vec2& p) const {
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = vertices[i];
        const Vec2& b = vertices[(i + 1) % n];
        if ((b - a).cross(p - a) < -1e-12) return false;
    }
    return true;
}

double ConvexPolygon::signed_distance(const Vec2& p) const {
    const std::size_t n = vertices.size();
    double boundary = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        boundary = std::min(boundary, point_segment_distance(p, vertices[i], vertices[(i + 1) % n]));
    }
    return contains(p) ? -boundary : boundary;
}

Vec2 ConvexPolygon::closest_boundary_point(const Vec2& p) const {
    const std::size_t n = vertices.size();
    double best = std::numeric_limits<double>::infinity();
    Vec2 best_point = vertices.empty() ? Vec2{} : vertices[0];
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 q = closest_point_on_segment(p, vertices[i], vertices[(i + 1) % n]);
        const double d = (p - q).norm();
        if (d < best) {
            best = d;
            best_point = q;
        }
    }
    return best_point;
}

Vec2 ConvexPolygon::sdf_gradient(const Vec2& p) const {
    const Vec2 cp = closest_boundary_point(p);
    const Vec2 d = p - cp;
    const double n = d.norm();
    if (n < 1e-12) {
        // On the boundary: fall back to outward direction from the centroid.
        return (p - centroid()).normalized();
    }
    return contains(p) ? (cp - p) / n : d / n;
}

double ConvexPolygon::segment_distance(const Vec2& a, const Vec2& b) const {
    if (contains(a) || contains(b)) return 0.0;
    const std::size_t n = vertices.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& c = vertices[i];
        const Vec2& d = vertices[(i + 1) % n];
        best = std::min(best, segment_segment_distance(a, b, c, d));
        if (best == 0.0) return 0.0;
    }
    return best;
}

void ConvexPolygon::bounds(Vec2& lo, Vec2& hi) const {
    lo = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    hi = {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const Vec2& v : vertices) {
        lo.x = std::min(lo.x, v.x);
        lo.y = std::min(lo.y, v.y);
        hi.x = std::max(hi.x, v.x);
        hi.y = std::max(hi.y, v.y);
    }
}

}  // namespace planreal
