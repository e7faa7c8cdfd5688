#pragma once

#include "kinsila/kinematics/classify.hpp"
#include "kinsila/kinematics/labels.hpp"
#include "kinsila/kinematics/structure.hpp"
#include "kinsila/kinematics/triple.hpp"
