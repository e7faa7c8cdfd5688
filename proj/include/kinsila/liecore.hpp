#pragma once

#include "kinsila/liecore/levi.hpp"
#include "kinsila/liecore/lie_algebra.hpp"
#include "kinsila/liecore/maps.hpp"
#include "kinsila/liecore/structure.hpp"
