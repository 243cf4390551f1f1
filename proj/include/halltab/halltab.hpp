#pragma once

// Umbrella header: transversals and the marriage condition, shellable
// families, configurations of a transversal and satisfying surjections,
// skew shapes with hook families and tableaux, exact counting, JSON
// serialization, and the property-test suites.

#include "halltab/config.hpp"
#include "halltab/counting.hpp"
#include "halltab/errors.hpp"
#include "halltab/family.hpp"
#include "halltab/io.hpp"
#include "halltab/numeric.hpp"
#include "halltab/shapes.hpp"
#include "halltab/shellability.hpp"
#include "halltab/solve.hpp"
#include "halltab/verify.hpp"
