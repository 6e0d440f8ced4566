#pragma once

#include "szego_lab/bounds.hpp"
#include "szego_lab/curve.hpp"
#include "szego_lab/errors.hpp"
#include "szego_lab/extremal.hpp"
#include "szego_lab/grid.hpp"
#include "szego_lab/harness.hpp"
#include "szego_lab/numerics.hpp"
#include "szego_lab/random.hpp"
#include "szego_lab/szego.hpp"
#include "szego_lab/transport.hpp"
#include "szego_lab/weight.hpp"
