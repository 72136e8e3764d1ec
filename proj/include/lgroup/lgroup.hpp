#pragma once

#include "lgroup/error.hpp"
#include "lgroup/group.hpp"
#include "lgroup/io.hpp"
#include "lgroup/lattice.hpp"
#include "lgroup/lsubset.hpp"
#include "lgroup/report.hpp"
#include "lgroup/search.hpp"
#include "lgroup/suites.hpp"
#include "lgroup/theory.hpp"
