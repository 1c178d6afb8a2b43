#pragma once

#include "oppm/bench.hpp"
#include "oppm/core.hpp"
#include "oppm/filters.hpp"
#include "oppm/gen.hpp"
#include "oppm/io.hpp"
#include "oppm/match.hpp"
#include "oppm/search.hpp"
#include "oppm/selftest.hpp"
