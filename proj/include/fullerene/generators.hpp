#pragma once

#include "fullerene/graph.hpp"

namespace fullerene {

/// The (5,0) zigzag nanotube fullerene: two caps of six pentagons joined by
/// `rings` rings of five hexagons; n = 20 + 10 * rings. rings = 0 is the
/// dodecahedron. Labeling is level by level, five vertices per level, so the
/// output is reproducible.
FullereneGraph generate_nanotube(int rings);

/// The truncated icosahedron (C60, n = 60, isolated pentagons).
FullereneGraph generate_buckyball();

inline FullereneGraph generate_dodecahedron() { return generate_nanotube(0); }

}  // namespace fullerene
