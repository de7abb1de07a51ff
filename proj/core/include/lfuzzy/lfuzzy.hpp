#pragma once

#include "lfuzzy/aggregation.hpp"
#include "lfuzzy/audit/axiom_grid.hpp"
#include "lfuzzy/audit/engine.hpp"
#include "lfuzzy/audit/grid_space.hpp"
#include "lfuzzy/audit/properties.hpp"
#include "lfuzzy/audit/report.hpp"
#include "lfuzzy/audit/result.hpp"
#include "lfuzzy/audit/search_config.hpp"
#include "lfuzzy/errors.hpp"
#include "lfuzzy/fuzzy_set.hpp"
#include "lfuzzy/rational.hpp"
#include "lfuzzy/relations.hpp"
#include "lfuzzy/scalar_measures.hpp"
#include "lfuzzy/set_collection.hpp"
#include "lfuzzy/universe.hpp"
