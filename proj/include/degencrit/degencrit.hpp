#pragma once

// Umbrella header: the whole library.

#include "canonical.hpp"
#include "census.hpp"
#include "classifier.hpp"
#include "criticality.hpp"
#include "degeneracy.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "rational.hpp"
#include "suites.hpp"
