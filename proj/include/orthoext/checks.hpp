#pragma once

#include <string>
#include <vector>

#include "orthoext/embedding.hpp"
#include "orthoext/instance.hpp"

namespace orthoext {

// A (possibly partial) drawing: null entries are undrawn elements.
struct DrawingView {
    const Graph* g = nullptr;
    std::vector<const Point*> point;      // per vertex
    std::vector<const OrthoPath*> path;   // per edge
};

DrawingView view_of_h(const Instance& ins);
DrawingView view_of(const Graph& g, const OrthoDrawing& d);

// True iff no two segments of distinct edges intersect except at a shared
// endpoint vertex, no edge self-intersects, and no vertex point lies on a
// foreign segment. Exact integer arithmetic; candidate pairs come from
// coordinate grouping and an x-sweep rather than the quadratic scan.
bool check_planar_drawing(const DrawingView& view, std::string* violation = nullptr);

// Quadratic reference oracle with the same contract (test use).
bool check_planar_drawing_naive(const DrawingView& view, std::string* violation = nullptr);

// Drawing extends the instance predrawing: restriction to H matches point for
// point (under the drawing's declared scale), the drawing is planar, and
// distinct edges use distinct ports everywhere.
bool check_extension(const OrthoDrawing& d, const Instance& ins, std::string* violation = nullptr);

}  // namespace orthoext
