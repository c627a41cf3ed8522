#pragma once

#include "kdm/bigint.hpp"
#include "kdm/constructions.hpp"
#include "kdm/graph.hpp"
#include "kdm/json_io.hpp"
#include "kdm/labeling.hpp"
#include "kdm/partitions.hpp"
#include "kdm/reports.hpp"
#include "kdm/search.hpp"
