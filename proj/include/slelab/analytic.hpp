#pragma once

#include "slelab/analytic/cft.hpp"
#include "slelab/analytic/probabilities.hpp"
