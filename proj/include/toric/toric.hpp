#pragma once

#include "toric/catalog.hpp"
#include "toric/closed_forms.hpp"
#include "toric/error.hpp"
#include "toric/graph.hpp"
#include "toric/graph_io.hpp"
#include "toric/integer.hpp"
#include "toric/invariants.hpp"
#include "toric/motzkin.hpp"
#include "toric/mseries.hpp"
#include "toric/polynomial.hpp"
#include "toric/report_io.hpp"
#include "toric/series.hpp"
