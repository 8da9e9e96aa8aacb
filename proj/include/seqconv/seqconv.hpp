#pragma once

// Umbrella header: exact second-order sequence engines, Chebyshev
// polynomials, and the convolution-identity verification catalog.

#include "seqconv/catalog.hpp"
#include "seqconv/chebyshev.hpp"
#include "seqconv/cli.hpp"
#include "seqconv/horadam.hpp"
#include "seqconv/identities.hpp"
#include "seqconv/polynomial.hpp"
#include "seqconv/quadext.hpp"
#include "seqconv/rational.hpp"
#include "seqconv/report.hpp"
#include "seqconv/scalar.hpp"
#include "seqconv/weights.hpp"
