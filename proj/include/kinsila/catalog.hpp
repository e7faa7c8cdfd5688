#pragma once

#include "kinsila/catalog/families.hpp"
