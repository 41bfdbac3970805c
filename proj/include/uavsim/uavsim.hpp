#pragma once

// Umbrella header for the whole library.

#include "uavsim/rng.hpp"
#include "uavsim/world.hpp"
#include "uavsim/channel.hpp"
#include "uavsim/radio.hpp"
#include "uavsim/scenario.hpp"
#include "uavsim/env.hpp"
#include "uavsim/metrics.hpp"
#include "uavsim/learn.hpp"
#include "uavsim/oracle.hpp"
#include "uavsim/baselines.hpp"
#include "uavsim/runner.hpp"
