#pragma once

#include "mvis/classify.hpp"
#include "mvis/constructions.hpp"
#include "mvis/error.hpp"
#include "mvis/experiments.hpp"
#include "mvis/families.hpp"
#include "mvis/graph.hpp"
#include "mvis/heuristic.hpp"
#include "mvis/io.hpp"
#include "mvis/metric.hpp"
#include "mvis/products.hpp"
#include "mvis/random.hpp"
#include "mvis/solver.hpp"
#include "mvis/structure.hpp"
#include "mvis/vertex_set.hpp"
#include "mvis/visibility.hpp"
