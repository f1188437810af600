#pragma once

// Umbrella header for the whole library.

#include "ferrers/core.hpp"
#include "ferrers/diagram.hpp"
#include "ferrers/minors.hpp"
#include "ferrers/invariants.hpp"
#include "ferrers/oracle.hpp"
#include "ferrers/engine.hpp"
#include "ferrers/closed_forms.hpp"
#include "ferrers/enumerate.hpp"
#include "ferrers/json_io.hpp"
#include "ferrers/cli.hpp"
