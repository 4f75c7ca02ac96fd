#pragma once

// Umbrella header.

#include "decomposition.hpp"
#include "dynamics.hpp"
#include "errors.hpp"
#include "games.hpp"
#include "io.hpp"
#include "linsolve.hpp"
#include "parse.hpp"
#include "polymat.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
