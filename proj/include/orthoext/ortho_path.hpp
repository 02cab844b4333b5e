#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orthoext/geometry.hpp"

namespace orthoext {

// Chain of axis-aligned segments; endpoints are vertex locations, interior
// points are bends (consecutive segments are perpendicular by invariant).
struct OrthoPath {
    std::vector<Point> points;

    int bend_count() const { return points.size() >= 2 ? int(points.size()) - 2 : 0; }
    int segment_count() const { return points.empty() ? 0 : int(points.size()) - 1; }
    Segment segment(int i) const { return Segment{points[i], points[i + 1]}; }

    const Point& front() const { return points.front(); }
    const Point& back() const { return points.back(); }

    OrthoPath reversed() const {
        OrthoPath r;
        r.points.assign(points.rbegin(), points.rend());
        return r;
    }

    // Direction of the first segment when leaving `from`, which must be one
    // of the two endpoints.
    PortDir port_at(const Point& from) const;

    // nullopt when valid, otherwise a description of the violated invariant.
    std::optional<std::string> validate() const;

    // Drop collinear interior points; the result has only genuine bends.
    static OrthoPath simplified(const std::vector<Point>& pts);

    OrthoPath scaled(Coord s) const {
        OrthoPath r;
        r.points.reserve(points.size());
        for (const Point& p : points) r.points.push_back(p * s);
        return r;
    }
};

}  // namespace orthoext
