#pragma once

// Umbrella header for the square-prime toolkit.

#include "spseq/analytics.hpp"
#include "spseq/farey.hpp"
#include "spseq/harmonic.hpp"
#include "spseq/sieve.hpp"
#include "spseq/sp_core.hpp"
#include "spseq/specfun.hpp"
