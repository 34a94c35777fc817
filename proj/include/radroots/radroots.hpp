#pragma once

// Umbrella header: the whole closed-form root-extraction toolkit.

#include "radroots/complexval.hpp"
#include "radroots/errors.hpp"
#include "radroots/moivre.hpp"
#include "radroots/oracle.hpp"
#include "radroots/parse.hpp"
#include "radroots/polynomial.hpp"
#include "radroots/power_sums.hpp"
#include "radroots/radical.hpp"
#include "radroots/rational.hpp"
#include "radroots/reciprocal.hpp"
#include "radroots/report.hpp"
#include "radroots/resolvent.hpp"
