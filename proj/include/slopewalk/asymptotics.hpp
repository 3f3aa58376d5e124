#pragma once

#include "slopewalk/asymptotics/area.hpp"
#include "slopewalk/asymptotics/constants.hpp"
#include "slopewalk/asymptotics/real.hpp"
#include "slopewalk/asymptotics/roots.hpp"
