#ifndef STEKLOV_STEKLOV_HPP
#define STEKLOV_STEKLOV_HPP

#include "steklov/analytic_core.hpp"
#include "steklov/boundary_trace.hpp"
#include "steklov/cocycle.hpp"
#include "steklov/conformal.hpp"
#include "steklov/errors.hpp"
#include "steklov/poincare_steklov.hpp"
#include "steklov/semiflow.hpp"

#endif  // STEKLOV_STEKLOV_HPP
