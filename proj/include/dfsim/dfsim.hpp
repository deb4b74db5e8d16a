#pragma once

#include "dfsim/cli.hpp"
#include "dfsim/df_states.hpp"
#include "dfsim/linalg.hpp"
#include "dfsim/measurement.hpp"
#include "dfsim/optics.hpp"
#include "dfsim/outcomes.hpp"
#include "dfsim/spdc.hpp"
#include "dfsim/tomography.hpp"
