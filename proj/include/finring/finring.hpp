#pragma once

#include "finring/arith.hpp"
#include "finring/audit.hpp"
#include "finring/catalog.hpp"
#include "finring/census.hpp"
#include "finring/decomposition.hpp"
#include "finring/error.hpp"
#include "finring/galois.hpp"
#include "finring/io.hpp"
#include "finring/isomorphism.hpp"
#include "finring/lattice.hpp"
#include "finring/local.hpp"
#include "finring/presets.hpp"
#include "finring/ring.hpp"
#include "finring/structures.hpp"
#include "finring/subgroup.hpp"
