#pragma once

#include "gbraid/census.hpp"
#include "gbraid/error.hpp"
#include "gbraid/geometry.hpp"
#include "gbraid/group_core.hpp"
#include "gbraid/index_state.hpp"
#include "gbraid/program_io.hpp"
#include "gbraid/reconstruction.hpp"
