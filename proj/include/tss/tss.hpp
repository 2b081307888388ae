#pragma once

// Umbrella header.

#include "tss/bench.hpp"
#include "tss/bounds.hpp"
#include "tss/diffusion.hpp"
#include "tss/edge_list.hpp"
#include "tss/generators.hpp"
#include "tss/graph.hpp"
#include "tss/indexed_heap.hpp"
#include "tss/reference_solvers.hpp"
#include "tss/report.hpp"
#include "tss/thresholds.hpp"
#include "tss/tss_solver.hpp"
#include "tss/types.hpp"
