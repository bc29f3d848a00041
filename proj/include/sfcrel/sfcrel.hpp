#pragma once

#include "sfcrel/model.hpp"
#include "sfcrel/numeric.hpp"
#include "sfcrel/analytic.hpp"
#include "sfcrel/tree.hpp"
#include "sfcrel/philox.hpp"
#include "sfcrel/oracle.hpp"
#include "sfcrel/scenario_io.hpp"
#include "sfcrel/experiments.hpp"
#include "sfcrel/report.hpp"
