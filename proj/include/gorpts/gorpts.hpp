#ifndef GORPTS_GORPTS_HPP
#define GORPTS_GORPTS_HPP

// Exact construction of Gorenstein point sets in P^3 with a prescribed
// h-vector, via coordinate-wise products of collinear point families and
// the resulting grid of lines. Everything is computed over the rationals
// with no tolerances.

#include "gorpts/construction.hpp"
#include "gorpts/errors.hpp"
#include "gorpts/gorenstein.hpp"
#include "gorpts/hvector.hpp"
#include "gorpts/matrix.hpp"
#include "gorpts/projgeom.hpp"
#include "gorpts/rational.hpp"
#include "gorpts/serialize.hpp"
#include "gorpts/verify.hpp"

#endif
