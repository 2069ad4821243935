#pragma once

// Umbrella header for the hypell library: Jacobi-style elliptic-function
// analogues built from incomplete hypergeometric integrals, with exact
// Chebyshev machinery, local Weierstrass evaluation, and the identity
// verification suite.

#include "hypell/analogue.hpp"
#include "hypell/bigint.hpp"
#include "hypell/chebyshev.hpp"
#include "hypell/hypergeom.hpp"
#include "hypell/rational.hpp"
#include "hypell/report.hpp"
#include "hypell/series.hpp"
#include "hypell/verify.hpp"
#include "hypell/weierstrass.hpp"
