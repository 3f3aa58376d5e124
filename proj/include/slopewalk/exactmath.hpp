#pragma once

#include "slopewalk/exactmath/binomial.hpp"
#include "slopewalk/exactmath/determinant.hpp"
#include "slopewalk/exactmath/partitions.hpp"
#include "slopewalk/exactmath/rational.hpp"
#include "slopewalk/exactmath/series.hpp"
#include "slopewalk/exactmath/symmetric.hpp"
