#pragma once

#include "kinsila/exactla/echelon.hpp"
#include "kinsila/exactla/jordan.hpp"
#include "kinsila/exactla/matrix.hpp"
#include "kinsila/exactla/poly.hpp"
#include "kinsila/exactla/rational.hpp"
#include "kinsila/exactla/subspace.hpp"
