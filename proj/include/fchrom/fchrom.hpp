#pragma once

#include "fchrom/rational.hpp"
#include "fchrom/interval.hpp"
#include "fchrom/graph.hpp"
#include "fchrom/independent_sets.hpp"
#include "fchrom/exact_simplex.hpp"
#include "fchrom/fractional_lp.hpp"
#include "fchrom/order.hpp"
#include "fchrom/bound_witness.hpp"
#include "fchrom/harness.hpp"
#include "fchrom/serialize.hpp"
