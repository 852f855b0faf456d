#pragma once

#include "plap/auditor.hpp"
#include "plap/energy.hpp"
#include "plap/grid.hpp"
#include "plap/homoclinic.hpp"
#include "plap/potential.hpp"
#include "plap/solvers.hpp"
#include "plap/spectrum.hpp"
