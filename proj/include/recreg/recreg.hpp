#pragma once

// Umbrella header for the record-value regression toolkit.

#include "recreg/distribution.hpp"
#include "recreg/errors.hpp"
#include "recreg/function_kernel.hpp"
#include "recreg/math_util.hpp"
#include "recreg/quadrature.hpp"
#include "recreg/record.hpp"
#include "recreg/regression.hpp"
#include "recreg/report.hpp"
#include "recreg/rng.hpp"
#include "recreg/scenario.hpp"
