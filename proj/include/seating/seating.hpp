#pragma once

#include "seating/analysis.hpp"
#include "seating/entropy.hpp"
#include "seating/error.hpp"
#include "seating/grid.hpp"
#include "seating/io.hpp"
#include "seating/policies.hpp"
#include "seating/random.hpp"
#include "seating/simulation.hpp"
