#pragma once

// Umbrella header: the whole library.

#include "rootgate/cli.hpp"
#include "rootgate/coarse.hpp"
#include "rootgate/dynkin.hpp"
#include "rootgate/errors.hpp"
#include "rootgate/index_set.hpp"
#include "rootgate/invariants.hpp"
#include "rootgate/oracle.hpp"
#include "rootgate/parabolic.hpp"
#include "rootgate/rational.hpp"
#include "rootgate/realforms.hpp"
#include "rootgate/render.hpp"
#include "rootgate/root_system.hpp"
#include "rootgate/types.hpp"
