#pragma once

#include "degen/checks.hpp"
#include "degen/errors.hpp"
#include "degen/operators.hpp"
#include "degen/polynomial.hpp"
#include "degen/rational.hpp"
#include "degen/series.hpp"
#include "degen/special.hpp"
