#pragma once

// Umbrella header: degree-constrained bipartitions and bisections of
// digraphs -- random-pairing bisection of tournaments, weighted-local-lemma
// resampling for bounded-in-degree digraphs, and minimal-core splits of
// multipartite tournaments, with exact-rational probability machinery and
// exhaustive small-instance oracles.

#include "degsplit/digraph.hpp"
#include "degsplit/edge_list.hpp"
#include "degsplit/generators.hpp"
#include "degsplit/lll.hpp"
#include "degsplit/oracle.hpp"
#include "degsplit/pairing.hpp"
#include "degsplit/peeling.hpp"
#include "degsplit/probability.hpp"
#include "degsplit/rational.hpp"
#include "degsplit/rng.hpp"
#include "degsplit/sweep.hpp"
