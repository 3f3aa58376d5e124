#pragma once

#include "slopewalk/lattice_enum/count_table.hpp"
#include "slopewalk/lattice_enum/distance.hpp"
#include "slopewalk/lattice_enum/ne_paths.hpp"
#include "slopewalk/lattice_enum/slope.hpp"
