#pragma once

#include "triad/assets.hpp"
#include "triad/codes.hpp"
#include "triad/error.hpp"
#include "triad/io.hpp"
#include "triad/lattices.hpp"
#include "triad/lifts.hpp"
#include "triad/linalg.hpp"
#include "triad/normal_form.hpp"
#include "triad/qseries.hpp"
#include "triad/quadratic_module.hpp"
#include "triad/rational.hpp"
#include "triad/sectors.hpp"
