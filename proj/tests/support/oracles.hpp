#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orthoext/checks.hpp"
#include "orthoext/instance.hpp"

namespace orthoext::testsupport {

// Independent quadratic planarity oracle. Classifies every feature pair with
// its own contact rules (shares only the exact segment primitives with the
// library).
bool planar_drawing_oracle(const DrawingView& view);

// Free ports at a predrawn vertex between two ports, walking clockwise from
// `from` to `to` in N,W,S,E order (direct enumeration of the four slots).
int port_gap_oracle(const Instance& ins, VertexId v, PortDir from, PortDir to);

}  // namespace orthoext::testsupport
