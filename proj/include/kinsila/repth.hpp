#pragma once

#include "kinsila/repth/forms.hpp"
#include "kinsila/repth/hom.hpp"
#include "kinsila/repth/rep.hpp"
#include "kinsila/repth/simple.hpp"
