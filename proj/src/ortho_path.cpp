#include "orthoext/ortho_path.hpp"

#include <stdexcept>

namespace orthoext {

PortDir OrthoPath::port_at(const Point& from) const {
    if (points.size() < 2) throw std::logic_error("port of a path without segments");
    if (from == points.front()) return *step_dir(points[0], points[1]);
    if (from == points.back()) {
        std::size_t n = points.size();
        return *step_dir(points[n - 1], points[n - 2]);
    }
    throw std::logic_error("port_at: point is not a path endpoint");
}

std::optional<std::string> OrthoPath::validate() const {
    if (points.size() < 2) return "path must contain at least two points";
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (points[i] == points[i + 1]) return "repeated consecutive points";
        if (!step_dir(points[i], points[i + 1])) return "segment is not axis-aligned";
    }
    for (std::size_t i = 0; i + 2 < points.size(); ++i) {
        PortDir d1 = *step_dir(points[i], points[i + 1]);
        PortDir d2 = *step_dir(points[i + 1], points[i + 2]);
        if (d1 == d2) return "interior point is not a bend (collinear segments)";
        if (d1 == opposite(d2)) return "path doubles back on itself";
    }
    return std::nullopt;
}

OrthoPath OrthoPath::simplified(const std::vector<Point>& pts) {
    OrthoPath out;
    for (const Point& p : pts) {
        if (!out.points.empty() && out.points.back() == p) continue;
        out.points.push_back(p);
        while (out.points.size() >= 3) {
            std::size_t n = out.points.size();
            auto d1 = step_dir(out.points[n - 3], out.points[n - 2]);
            auto d2 = step_dir(out.points[n - 2], out.points[n - 1]);
            if (d1 && d2 && *d1 == *d2) {
                out.points.erase(out.points.end() - 2);
            } else {
                break;
            }
        }
    }
    return out;
}

}  // namespace orthoext
