#pragma once

#include "squco/construct.hpp"
#include "squco/graph.hpp"
#include "squco/graph6.hpp"
#include "squco/iso.hpp"
#include "squco/metrics.hpp"
#include "squco/planar.hpp"
#include "squco/reduction.hpp"
#include "squco/search.hpp"
#include "squco/squco.hpp"
