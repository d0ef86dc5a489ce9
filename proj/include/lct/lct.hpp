#pragma once

#include "lct/clifford.hpp"
#include "lct/fock.hpp"
#include "lct/gaussian.hpp"
#include "lct/json_io.hpp"
#include "lct/metric.hpp"
#include "lct/symplectic.hpp"
#include "lct/thermo.hpp"
