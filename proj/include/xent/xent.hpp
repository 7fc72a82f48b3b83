#pragma once

// Umbrella header: the whole library.

#include "xent/bipartite.hpp"
#include "xent/chain.hpp"
#include "xent/eig.hpp"
#include "xent/entanglement.hpp"
#include "xent/errors.hpp"
#include "xent/format.hpp"
#include "xent/matrix.hpp"
#include "xent/oracle.hpp"
#include "xent/parallel.hpp"
#include "xent/rng.hpp"
#include "xent/sweep.hpp"
#include "xent/verify.hpp"
#include "xent/version.hpp"
#include "xent/xstate.hpp"
