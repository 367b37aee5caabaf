#pragma once

// Extremal index estimation toolkit: a one-parameter blocks estimator built
// on the tail dependence coefficient of an auxiliary bivariate sequence, the
// Ferro-Segers intervals and Northrop blocks comparators, six stationary
// process simulators with known extremal indices, and a Monte Carlo study
// harness.

#include "exind/bench.hpp"
#include "exind/comparators.hpp"
#include "exind/empirical.hpp"
#include "exind/estimator.hpp"
#include "exind/io.hpp"
#include "exind/rng.hpp"
#include "exind/series.hpp"
#include "exind/sim.hpp"
