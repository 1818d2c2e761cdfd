#pragma once

#include "slelab/virasoro/checks.hpp"
#include "slelab/virasoro/coeff_polynomial.hpp"
#include "slelab/virasoro/coefficient_ops.hpp"
#include "slelab/virasoro/gf.hpp"
#include "slelab/virasoro/scalar.hpp"
#include "slelab/virasoro/series.hpp"
#include "slelab/virasoro/verma.hpp"
