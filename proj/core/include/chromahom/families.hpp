// Named graph families and the DSL used by the command line
// ("P7", "K5", "W8", "Wout8", "Win8", "Pt:8", "Gts:3", "Gk:2").
#pragma once

#include "chromahom/graph.hpp"

namespace chromahom {

SimpleGraph polygon(int n);         // cycle, n >= 3, vertices 0..n-1 in order
SimpleGraph complete_graph_k(int n);  // K_n, n >= 1
// Wheel W_n = cone over the (n-1)-gon: hub 0, rim 1..n-1; n >= 4.
SimpleGraph wheel_graph(int n);
SimpleGraph wheel_out(int n);  // W_n minus the closing rim edge {1, n-1}
SimpleGraph wheel_in(int n);   // W_n minus the spoke {0, 1}
// P_{t,k} = triangle glued to a k-gon along an edge, v = k+1; k >= 3.
SimpleGraph pt_graph(int k);
// G_{t,s^k} = triangle plus a ladder of k squares glued in sequence,
// v = 3 + 2k; k >= 1. Apex 0; rung j is {1+2j, 2+2j}.
SimpleGraph gts_graph(int k);
// Annulus-band graph G_k, v = 4k+4, E = 9k+7; k >= 1. Inner cycle
// x_i = i (i = 0..2k+1) drawn as a k x 1 rectangle, outer cycle
// y_j = 2k+2+j, band edges {y_j,x_j} and {y_j,x_{j+1}}, plus the k-1
// interior rungs {x_i, x_{2k+1-i}} (i = 1..k-1) cutting the rectangle
// into k squares.
SimpleGraph gk_graph(int k);
// G_k with the k-1 interior rungs removed (every edge lies on a triangle).
SimpleGraph gk_prime_graph(int k);

// Parses the DSL above; throws std::invalid_argument on unknown name or
// out-of-range parameter.
SimpleGraph family(const std::string& descriptor);

// Human-readable list of accepted descriptors (one per line).
std::string family_help();

}  // namespace chromahom
