#pragma once

#include "coloring.hpp"
#include "composition.hpp"
#include "errors.hpp"
#include "formulas.hpp"
#include "graph.hpp"
#include "graph_spec.hpp"
#include "oracle.hpp"
#include "partition.hpp"
#include "render.hpp"
#include "symfunc.hpp"
#include "theta_scan.hpp"
#include "verify.hpp"
