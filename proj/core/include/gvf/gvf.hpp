#pragma once

#include "gvf/domain_graph.hpp"
#include "gvf/error.hpp"
#include "gvf/extension.hpp"
#include "gvf/fixtures.hpp"
#include "gvf/io_formats.hpp"
#include "gvf/level_space.hpp"
#include "gvf/mw_extension.hpp"
#include "gvf/range_tree.hpp"
#include "gvf/smoothing.hpp"
