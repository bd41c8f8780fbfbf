#pragma once

#include "clustercat/rep.hpp"

namespace clustercat::samples {

/// 1 -> 2 -> ... -> n.
Quiver linear_a(int n);

/// Two arrows a, b : 1 -> 2.
Quiver kronecker();

/// One vertex with a loop l.
Quiver loop();

/// a : 1 -> 2, b : 2 -> 1.
Quiver two_cycle();

/// Kronecker representation k^2 => k^2 with a = identity, b = [[1,1],[0,1]].
Representation kronecker_v();

/// The two 1x1 Kronecker representations (a, b) = (0, 1) and (1, 0).
Representation kronecker_line(bool a_vanishes);

/// Nilpotent Jordan block of size d on the loop.
Representation loop_block(int d);

/// k^2 -> k -> k^2 around the 2-cycle, indecomposable.
Representation two_cycle_rep();

/// k^d on a single vertex without arrows.
Representation vector_space(int d);

}  // namespace clustercat::samples
