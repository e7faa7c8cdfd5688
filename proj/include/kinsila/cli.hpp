#pragma once

#include "kinsila/cli/batch.hpp"
#include "kinsila/cli/input.hpp"
#include "kinsila/cli/report.hpp"
