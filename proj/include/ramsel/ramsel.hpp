#pragma once

#include "ramsel/borelcodes.hpp"
#include "ramsel/errors.hpp"
#include "ramsel/fronts.hpp"
#include "ramsel/ideals.hpp"
#include "ramsel/io.hpp"
#include "ramsel/rational.hpp"
#include "ramsel/selectors.hpp"
#include "ramsel/streams.hpp"
#include "ramsel/workbench.hpp"
