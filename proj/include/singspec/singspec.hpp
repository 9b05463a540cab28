#pragma once

#include "singspec/constants.hpp"
#include "singspec/errors.hpp"
#include "singspec/heat.hpp"
#include "singspec/oracle.hpp"
#include "singspec/problem.hpp"
#include "singspec/quadrature.hpp"
#include "singspec/resolvent.hpp"
#include "singspec/sae.hpp"
#include "singspec/secular.hpp"
#include "singspec/specfun.hpp"
#include "singspec/spectrum.hpp"
#include "singspec/zeta.hpp"
