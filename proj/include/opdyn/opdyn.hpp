#pragma once

// Umbrella header for the opinion-dynamics library.

#include "opdyn/types.hpp"
#include "opdyn/graph.hpp"
#include "opdyn/bias.hpp"
#include "opdyn/grid.hpp"
#include "opdyn/report.hpp"
#include "opdyn/verifier.hpp"
#include "opdyn/dynamics.hpp"
#include "opdyn/rng.hpp"
#include "opdyn/generate.hpp"
#include "opdyn/config.hpp"
#include "opdyn/io.hpp"
