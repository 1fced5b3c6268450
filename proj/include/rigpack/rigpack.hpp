#pragma once

#include "rigpack/certificates.hpp"
#include "rigpack/connectivity.hpp"
#include "rigpack/error.hpp"
#include "rigpack/flow.hpp"
#include "rigpack/generators.hpp"
#include "rigpack/graph.hpp"
#include "rigpack/matroid_union.hpp"
#include "rigpack/oracles.hpp"
#include "rigpack/orientation.hpp"
#include "rigpack/packing.hpp"
#include "rigpack/pebble_game.hpp"
#include "rigpack/rigidity.hpp"
