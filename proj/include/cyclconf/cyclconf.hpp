// cyclconf.hpp
// Umbrella header for the cyclic configuration library.

#pragma once

#include "baseline.hpp"
#include "bipartite_iso.hpp"
#include "circulant.hpp"
#include "config.hpp"
#include "counting.hpp"
#include "errors.hpp"
#include "iso.hpp"
#include "iso_dispatch.hpp"
#include "residue_ring.hpp"
#include "solving_sets.hpp"
#include "verify.hpp"
