#include "orthoext/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace orthoext {

std::optional<PortDir> step_dir(const Point& a, const Point& b) {
    if (a.x == b.x && b.y > a.y) return PortDir::North;
    if (a.x == b.x && b.y < a.y) return PortDir::South;
    if (a.y == b.y && b.x > a.x) return PortDir::East;
    if (a.y == b.y && b.x < a.x) return PortDir::West;
    return std::nullopt;
}

bool point_on_segment(const Point& p, const Segment& s) {
    if (s.horizontal()) {
        return p.y == s.a.y && p.x >= cmin(s.a.x, s.b.x) && p.x <= cmax(s.a.x, s.b.x);
    }
    if (s.vertical()) {
        return p.x == s.a.x && p.y >= cmin(s.a.y, s.b.y) && p.y <= cmax(s.a.y, s.b.y);
    }
    return false;
}

SegIntersection intersect_axis_segments(const Segment& s, const Segment& t) {
    SegIntersection out;
    const bool sh = s.horizontal(), th = t.horizontal();
    const bool sv = s.vertical(), tv = t.vertical();
    if (s.degenerate() || t.degenerate()) {
        // Degenerate segments are points.
        if (s.degenerate() && t.degenerate()) {
            if (s.a == t.a) { out.kind = SegContact::Point; out.at = s.a; }
            return out;
        }
        const Point p = s.degenerate() ? s.a : t.a;
        const Segment& seg = s.degenerate() ? t : s;
        if (point_on_segment(p, seg)) { out.kind = SegContact::Point; out.at = p; }
        return out;
    }
    if (sh && th) {
        if (s.a.y != t.a.y) return out;
        Coord lo = cmax(cmin(s.a.x, s.b.x), cmin(t.a.x, t.b.x));
        Coord hi = cmin(cmax(s.a.x, s.b.x), cmax(t.a.x, t.b.x));
        if (lo > hi) return out;
        if (lo == hi) { out.kind = SegContact::Point; out.at = {lo, s.a.y}; }
        else out.kind = SegContact::Overlap;
        return out;
    }
    if (sv && tv) {
        if (s.a.x != t.a.x) return out;
        Coord lo = cmax(cmin(s.a.y, s.b.y), cmin(t.a.y, t.b.y));
        Coord hi = cmin(cmax(s.a.y, s.b.y), cmax(t.a.y, t.b.y));
        if (lo > hi) return out;
        if (lo == hi) { out.kind = SegContact::Point; out.at = {s.a.x, lo}; }
        else out.kind = SegContact::Overlap;
        return out;
    }
    const Segment& h = sh ? s : t;
    const Segment& v = sh ? t : s;
    Coord hx_lo = cmin(h.a.x, h.b.x), hx_hi = cmax(h.a.x, h.b.x);
    Coord vy_lo = cmin(v.a.y, v.b.y), vy_hi = cmax(v.a.y, v.b.y);
    if (v.a.x >= hx_lo && v.a.x <= hx_hi && h.a.y >= vy_lo && h.a.y <= vy_hi) {
        out.kind = SegContact::Point;
        out.at = {v.a.x, h.a.y};
    }
    return out;
}

bool segments_conflict(const Segment& s, const Segment& t) {
    SegIntersection is = intersect_axis_segments(s, t);
    if (is.kind == SegContact::None) return false;
    if (is.kind == SegContact::Overlap) return true;
    const Point p = is.at;
    const bool end_s = (p == s.a || p == s.b);
    const bool end_t = (p == t.a || p == t.b);
    return !(end_s && end_t);
}

std::optional<Point> single_shared_endpoint(const Segment& s, const Segment& t) {
    SegIntersection is = intersect_axis_segments(s, t);
    if (is.kind != SegContact::Point) return std::nullopt;
    const Point p = is.at;
    if ((p == s.a || p == s.b) && (p == t.a || p == t.b)) return p;
    return std::nullopt;
}

Wide polygon_signed_area2(const std::vector<Point>& closed) {
    Wide acc = 0;
    const std::size_t n = closed.size();
    if (n < 3) return 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const Point& a = closed[i];
        const Point& b = closed[i + 1];
        acc += Wide(a.x) * b.y - Wide(b.x) * a.y;
    }
    if (closed.front() != closed.back()) {
        const Point& a = closed.back();
        const Point& b = closed.front();
        acc += Wide(a.x) * b.y - Wide(b.x) * a.y;
    }
    return acc;
}

bool point_strictly_inside(const Point& p, const std::vector<Point>& closed) {
    bool inside = false;
    const std::size_t n = closed.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = closed[i];
        const Point& b = closed[(i + 1) % n];
        if (a == b) continue;
        if (a.x == b.x) {
            Coord ylo = cmin(a.y, b.y), yhi = cmax(a.y, b.y);
            if (p.y >= ylo && p.y < yhi && a.x > p.x) inside = !inside;
        }
    }
    return inside;
}

bool point_on_polygon_boundary(const Point& p, const std::vector<Point>& closed) {
    const std::size_t n = closed.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = closed[i];
        const Point& b = closed[(i + 1) % n];
        if (point_on_segment(p, Segment{a, b})) return true;
    }
    return false;
}

Coord linf(const Point& a, const Point& b) {
    return cmax(std::llabs(a.x - b.x), std::llabs(a.y - b.y));
}

Coord point_segment_linf_distance(const Point& p, const Segment& s) {
    Coord xlo = cmin(s.a.x, s.b.x), xhi = cmax(s.a.x, s.b.x);
    Coord ylo = cmin(s.a.y, s.b.y), yhi = cmax(s.a.y, s.b.y);
    Coord dx = p.x < xlo ? xlo - p.x : (p.x > xhi ? p.x - xhi : 0);
    Coord dy = p.y < ylo ? ylo - p.y : (p.y > yhi ? p.y - yhi : 0);
    return cmax(dx, dy);
}

Coord segment_linf_distance(const Segment& s, const Segment& t) {
    Coord xlo_s = cmin(s.a.x, s.b.x), xhi_s = cmax(s.a.x, s.b.x);
    Coord ylo_s = cmin(s.a.y, s.b.y), yhi_s = cmax(s.a.y, s.b.y);
    Coord xlo_t = cmin(t.a.x, t.b.x), xhi_t = cmax(t.a.x, t.b.x);
    Coord ylo_t = cmin(t.a.y, t.b.y), yhi_t = cmax(t.a.y, t.b.y);
    Coord dx = xlo_t > xhi_s ? xlo_t - xhi_s : (xlo_s > xhi_t ? xlo_s - xhi_t : 0);
    Coord dy = ylo_t > yhi_s ? ylo_t - yhi_s : (ylo_s > yhi_t ? ylo_s - yhi_t : 0);
    return cmax(dx, dy);
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace orthoext
