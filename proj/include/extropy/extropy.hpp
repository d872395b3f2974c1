#pragma once

#include "extropy/analysis.hpp"
#include "extropy/distributions.hpp"
#include "extropy/dynamic.hpp"
#include "extropy/empirical.hpp"
#include "extropy/errors.hpp"
#include "extropy/measures.hpp"
#include "extropy/oracle.hpp"
#include "extropy/power_functional.hpp"
#include "extropy/quadrature.hpp"
#include "extropy/weights.hpp"
