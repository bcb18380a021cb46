#pragma once

// Umbrella header: the whole notation-system toolkit.

#include "otkit/config.hpp"
#include "otkit/fwd.hpp"
#include "otkit/term.hpp"
#include "otkit/print.hpp"
#include "otkit/parse.hpp"
#include "otkit/order.hpp"
#include "otkit/coeff.hpp"
#include "otkit/lambda_cnf.hpp"
#include "otkit/validity.hpp"
#include "otkit/towers.hpp"
#include "otkit/closures.hpp"
#include "otkit/enumerate.hpp"
#include "otkit/suites.hpp"
