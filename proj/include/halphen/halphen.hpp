#pragma once

#include "bounds.hpp"
#include "core_params.hpp"
#include "json_util.hpp"
#include "sweep_io.hpp"
#include "threshold.hpp"
#include "verify.hpp"
