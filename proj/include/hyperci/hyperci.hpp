#pragma once

#include "hyperci/centrality.hpp"
#include "hyperci/dismantle.hpp"
#include "hyperci/error.hpp"
#include "hyperci/hypergraph.hpp"
#include "hyperci/io.hpp"
