#pragma once

#include "rgasym/bfile.hpp"
#include "rgasym/big_float.hpp"
#include "rgasym/connected_expansion.hpp"
#include "rgasym/errors.hpp"
#include "rgasym/exact_counts.hpp"
#include "rgasym/laplace.hpp"
#include "rgasym/polynomial.hpp"
#include "rgasym/rational.hpp"
#include "rgasym/regular_expansion.hpp"
#include "rgasym/series.hpp"
#include "rgasym/tree_function.hpp"
#include "rgasym/validation.hpp"
