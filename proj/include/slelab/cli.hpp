#pragma once

#include "slelab/cli/checks.hpp"
#include "slelab/cli/config.hpp"
#include "slelab/cli/output.hpp"
#include "slelab/cli/run.hpp"
#include "slelab/cli/svg.hpp"
