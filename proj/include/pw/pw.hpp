#pragma once

#include "canonical.hpp"
#include "codec.hpp"
#include "connectivity.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "families.hpp"
#include "formulas.hpp"
#include "known_extremes.hpp"
#include "metrics.hpp"
#include "plane_graph.hpp"
#include "rational.hpp"
