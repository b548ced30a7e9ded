#ifndef MAXMIN_MAXMIN_HPP
#define MAXMIN_MAXMIN_HPP

#include "maxmin/convex.hpp"
#include "maxmin/errors.hpp"
#include "maxmin/grid.hpp"
#include "maxmin/oracle.hpp"
#include "maxmin/planar.hpp"
#include "maxmin/point.hpp"
#include "maxmin/scalar.hpp"
#include "maxmin/semispace.hpp"
#include "maxmin/separation.hpp"

#endif  // MAXMIN_MAXMIN_HPP
