#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace orthoext {

using Coord = std::int64_t;
using Wide = __int128;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(Coord s) const { return {x * s, y * s}; }
};

struct PointHash {
    std::size_t operator()(const Point& p) const {
        std::size_t h = std::hash<std::int64_t>()(p.x);
        return h ^ (std::hash<std::int64_t>()(p.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};

// The four axis directions at a vertex. The global rotation order used for
// "clockwise" throughout the library is N, W, S, E (visual clockwise when the
// y axis is rendered downward, as in SVG output).
enum class PortDir : int { North = 0, West = 1, South = 2, East = 3 };

inline Point dir_vector(PortDir d) {
    switch (d) {
        case PortDir::North: return {0, 1};
        case PortDir::West: return {-1, 0};
        case PortDir::South: return {0, -1};
        default: return {1, 0};
    }
}

inline PortDir opposite(PortDir d) { return PortDir((int(d) + 2) % 4); }

inline const char* port_name(PortDir d) {
    switch (d) {
        case PortDir::North: return "N";
        case PortDir::West: return "W";
        case PortDir::South: return "S";
        default: return "E";
    }
}

// Direction of the (axis-aligned) step from a to b; a != b and aligned.
std::optional<PortDir> step_dir(const Point& a, const Point& b);

// Rotate direction by one step clockwise in the N,W,S,E order.
inline PortDir clockwise_next(PortDir d) { return PortDir((int(d) + 1) % 4); }

// Traced faces lie to the right of their darts (y-up), so this is the normal
// pointing from a walk dart into its face.
inline PortDir face_normal(PortDir d) {
    switch (d) {
        case PortDir::North: return PortDir::East;
        case PortDir::East: return PortDir::South;
        case PortDir::South: return PortDir::West;
        default: return PortDir::North;
    }
}

struct Segment {
    Point a;
    Point b;

    bool horizontal() const { return a.y == b.y; }
    bool vertical() const { return a.x == b.x; }
    bool degenerate() const { return a == b; }
};

inline Coord cmin(Coord a, Coord b) { return a < b ? a : b; }
inline Coord cmax(Coord a, Coord b) { return a > b ? a : b; }

bool point_on_segment(const Point& p, const Segment& s);

// Intersection classification for two axis-aligned segments.
enum class SegContact { None, Point, Overlap };

struct SegIntersection {
    SegContact kind = SegContact::None;
    Point at{};  // valid when kind == Point
};

SegIntersection intersect_axis_segments(const Segment& s, const Segment& t);

// True if the two segments share any point other than a common endpoint.
bool segments_conflict(const Segment& s, const Segment& t);

// Shared endpoint of two segments, if the only contact is one common endpoint.
std::optional<Point> single_shared_endpoint(const Segment& s, const Segment& t);

// Twice the signed area of a closed polyline (shoelace). Positive for a
// counterclockwise (y-up) traversal. Bounded face walks are traced clockwise
// under the library convention, so their signed area is negative.
Wide polygon_signed_area2(const std::vector<Point>& closed);

// Strict point-in-polygon for a rectilinear closed polyline. The point must
// not lie on the boundary; crossing parity uses half-open vertical edges so
// collinear horizontal edges never miscount.
bool point_strictly_inside(const Point& p, const std::vector<Point>& closed);

bool point_on_polygon_boundary(const Point& p, const std::vector<Point>& closed);

// L-infinity distance between two points.
Coord linf(const Point& a, const Point& b);

// Minimum L-infinity distance between two non-intersecting axis segments.
Coord segment_linf_distance(const Segment& s, const Segment& t);

Coord point_segment_linf_distance(const Point& p, const Segment& s);

// Exact rational with normalized sign; used for reported quantities such as
// the face offset parameter. Arithmetic stays in int64 after normalization.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);
    static Rational whole(std::int64_t n) { return Rational(n, 1); }

    Rational operator*(std::int64_t s) const { return Rational(num * s, den); }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    std::string str() const;
};

}  // namespace orthoext
