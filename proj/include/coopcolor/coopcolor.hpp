#pragma once

#include "coopcolor/bipartite_solver.hpp"
#include "coopcolor/bounds.hpp"
#include "coopcolor/error.hpp"
#include "coopcolor/exact_solver.hpp"
#include "coopcolor/generators.hpp"
#include "coopcolor/graph_system.hpp"
#include "coopcolor/io.hpp"
#include "coopcolor/report.hpp"
#include "coopcolor/rng.hpp"
#include "coopcolor/tree_solver.hpp"
