#pragma once

// Umbrella header for the library (the CLI front end lives in latreg/cli.hpp).

#include "latreg/csv.hpp"
#include "latreg/dataset.hpp"
#include "latreg/direction.hpp"
#include "latreg/errors.hpp"
#include "latreg/estimators.hpp"
#include "latreg/lattice.hpp"
#include "latreg/means.hpp"
#include "latreg/measures.hpp"
#include "latreg/model_parser.hpp"
#include "latreg/numbers.hpp"
#include "latreg/report.hpp"
#include "latreg/simulate.hpp"
#include "latreg/summation.hpp"
