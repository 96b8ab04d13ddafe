#pragma once

#include "nabla_frac/coefficients.hpp"
#include "nabla_frac/errors.hpp"
#include "nabla_frac/grid_function.hpp"
#include "nabla_frac/grid_ops.hpp"
#include "nabla_frac/stability_analysis.hpp"
#include "nabla_frac/stepping_solver.hpp"
#include "nabla_frac/summation.hpp"
#include "nabla_frac/taylor_monomial.hpp"
