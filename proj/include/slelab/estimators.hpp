#pragma once

#include "slelab/estimators/boundary.hpp"
#include "slelab/estimators/core.hpp"
#include "slelab/estimators/dipolar.hpp"
#include "slelab/estimators/martingale.hpp"
#include "slelab/estimators/race.hpp"
#include "slelab/estimators/radius.hpp"
#include "slelab/estimators/restriction.hpp"
