#ifndef NOREGRET_NOREGRET_HPP_
#define NOREGRET_NOREGRET_HPP_

// umbrella header: the whole library in one include

#include "noregret/rational.hpp"
#include "noregret/rng.hpp"
#include "noregret/distribution.hpp"
#include "noregret/core.hpp"
#include "noregret/simplex.hpp"
#include "noregret/lp.hpp"
#include "noregret/learners.hpp"
#include "noregret/auctions.hpp"
#include "noregret/engine.hpp"
#include "noregret/verify.hpp"
#include "noregret/json_io.hpp"

#endif  // NOREGRET_NOREGRET_HPP_
