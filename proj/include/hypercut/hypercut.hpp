#pragma once

// Umbrella header: simplicial boundary algebra over F2 and Q, shadows,
// hypertrees and hypercuts, collapsibility, the arithmetic and collapsible
// constructions, and the extremal searches.

#include "hypercut/appendix.hpp"
#include "hypercut/arithmetic_complex.hpp"
#include "hypercut/boundary.hpp"
#include "hypercut/collapse.hpp"
#include "hypercut/collapsible_complex.hpp"
#include "hypercut/combinat.hpp"
#include "hypercut/exact_matrix.hpp"
#include "hypercut/extremal_family.hpp"
#include "hypercut/gf2_matrix.hpp"
#include "hypercut/homology.hpp"
#include "hypercut/io.hpp"
#include "hypercut/link_graph.hpp"
#include "hypercut/search.hpp"
#include "hypercut/simplex.hpp"
#include "hypercut/span.hpp"
#include "hypercut/verify.hpp"
