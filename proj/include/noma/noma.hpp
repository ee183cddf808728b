#pragma once

// Umbrella header for the unified NOMA outage library.

#include "noma/config.hpp"
#include "noma/sinr.hpp"
#include "noma/special.hpp"
#include "noma/quadrature.hpp"
#include "noma/integrate.hpp"
#include "noma/cdf.hpp"
#include "noma/outage.hpp"
#include "noma/curve.hpp"
#include "noma/rng.hpp"
#include "noma/monte_carlo.hpp"
#include "noma/experiment.hpp"
#include "noma/output.hpp"
