#pragma once

#include "bcdom/bench.hpp"
#include "bcdom/errors.hpp"
#include "bcdom/generators.hpp"
#include "bcdom/graph.hpp"
#include "bcdom/oracles.hpp"
#include "bcdom/reduction.hpp"
#include "bcdom/solvers.hpp"
