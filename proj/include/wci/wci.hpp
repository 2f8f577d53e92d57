#pragma once

#include "wci/catalog.hpp"
#include "wci/laurent.hpp"
#include "wci/lg_model.hpp"
#include "wci/nef_partition.hpp"
#include "wci/numeric.hpp"
#include "wci/period.hpp"
#include "wci/weight_system.hpp"
#include "wci/wp_graph.hpp"
