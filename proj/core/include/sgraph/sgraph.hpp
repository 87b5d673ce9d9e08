#pragma once

#include "sgraph/angle.hpp"
#include "sgraph/balance.hpp"
#include "sgraph/catalog.hpp"
#include "sgraph/circles.hpp"
#include "sgraph/coloring.hpp"
#include "sgraph/edge_set.hpp"
#include "sgraph/exact.hpp"
#include "sgraph/frame.hpp"
#include "sgraph/graph.hpp"
#include "sgraph/io.hpp"
#include "sgraph/limits.hpp"
#include "sgraph/linegraph.hpp"
#include "sgraph/matrices.hpp"
#include "sgraph/minors.hpp"
#include "sgraph/orientation.hpp"
#include "sgraph/polynomial.hpp"
