#pragma once

#include "renorm/blueprint.hpp"
#include "renorm/config.hpp"
#include "renorm/convex_set.hpp"
#include "renorm/errors.hpp"
#include "renorm/gauge.hpp"
#include "renorm/line_search.hpp"
#include "renorm/projection.hpp"
#include "renorm/renorming.hpp"
#include "renorm/report.hpp"
#include "renorm/sampling.hpp"
#include "renorm/selftest.hpp"
#include "renorm/theorem.hpp"
#include "renorm/tolerance.hpp"
#include "renorm/vector.hpp"
