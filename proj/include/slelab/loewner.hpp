#pragma once

#include "slelab/loewner/chordal.hpp"
#include "slelab/loewner/dipolar.hpp"
#include "slelab/loewner/driver.hpp"
#include "slelab/loewner/evolve.hpp"
#include "slelab/loewner/geometry.hpp"
#include "slelab/loewner/processes.hpp"
#include "slelab/loewner/trace.hpp"
