#pragma once

#include "theodorus/claims.hpp"
#include "theodorus/config.hpp"
#include "theodorus/discovery.hpp"
#include "theodorus/error.hpp"
#include "theodorus/quadratic.hpp"
#include "theodorus/render.hpp"
#include "theodorus/report.hpp"
#include "theodorus/rotation.hpp"
#include "theodorus/spiral.hpp"
