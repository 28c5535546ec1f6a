#pragma once

// Exact finite-dimensional representations of the extended Lorentz algebra:
// radical-number arithmetic, spinor-polynomial generator actions, ladder
// construction of labeled orthonormal bases, exact algebra verification and
// floating-point dispersion analysis.

#include "exlorentz/basis.hpp"
#include "exlorentz/dispersion.hpp"
#include "exlorentz/errors.hpp"
#include "exlorentz/exact_matrix.hpp"
#include "exlorentz/generators.hpp"
#include "exlorentz/golden.hpp"
#include "exlorentz/half_integer.hpp"
#include "exlorentz/json_io.hpp"
#include "exlorentz/monomial.hpp"
#include "exlorentz/polynomial.hpp"
#include "exlorentz/radical.hpp"
#include "exlorentz/rational.hpp"
#include "exlorentz/structure_constants.hpp"
#include "exlorentz/verification.hpp"
