#pragma once

#include "matchdeck/canonical.hpp"
#include "matchdeck/counterexamples.hpp"
#include "matchdeck/errors.hpp"
#include "matchdeck/graph.hpp"
#include "matchdeck/graph_io.hpp"
#include "matchdeck/matching.hpp"
#include "matchdeck/polynomial.hpp"
#include "matchdeck/reconstruction.hpp"
