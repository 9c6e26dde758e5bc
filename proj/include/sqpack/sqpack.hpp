#pragma once

#include "sqpack/constructions.hpp"
#include "sqpack/geometry.hpp"
#include "sqpack/io.hpp"
#include "sqpack/lattice.hpp"
#include "sqpack/rational.hpp"
#include "sqpack/search.hpp"
#include "sqpack/sweep.hpp"
#include "sqpack/values.hpp"
#include "sqpack/witness.hpp"
