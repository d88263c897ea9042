#pragma once

// Convenience umbrella for the whole library.

#include "cesaro2/determinant.hpp"
#include "cesaro2/identities.hpp"
#include "cesaro2/matrix.hpp"
#include "cesaro2/operators.hpp"
#include "cesaro2/polynomial.hpp"
#include "cesaro2/positivity.hpp"
#include "cesaro2/rational.hpp"
#include "cesaro2/rational_function.hpp"
#include "cesaro2/sturm.hpp"
#include "cesaro2/telescoping.hpp"
