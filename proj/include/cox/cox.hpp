#pragma once

// Umbrella header: exact Coxeter polynomials of trees, the Salem-tree
// family, classification and spectral-radius limits.

#include "cox/coxeter.hpp"
#include "cox/errors.hpp"
#include "cox/intmatrix.hpp"
#include "cox/intpoly.hpp"
#include "cox/realroot.hpp"
#include "cox/roots_numeric.hpp"
#include "cox/salem.hpp"
#include "cox/tree.hpp"
#include "cox/tree_expr.hpp"
