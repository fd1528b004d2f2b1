#pragma once

// Convenience umbrella for the whole library.

#include "gendet/bench.hpp"
#include "gendet/combinatorics.hpp"
#include "gendet/determinant.hpp"
#include "gendet/errors.hpp"
#include "gendet/exterior.hpp"
#include "gendet/generalized.hpp"
#include "gendet/geometry.hpp"
#include "gendet/matrix_io.hpp"
#include "gendet/minors.hpp"
#include "gendet/multivector.hpp"
#include "gendet/scalar.hpp"
#include "gendet/solve.hpp"
#include "gendet/summation.hpp"
