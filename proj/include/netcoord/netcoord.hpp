#pragma once

#include "netcoord/rational.hpp"
#include "netcoord/errors.hpp"
#include "netcoord/graph.hpp"
#include "netcoord/params.hpp"
#include "netcoord/game.hpp"
#include "netcoord/decomposition.hpp"
#include "netcoord/bounds.hpp"
#include "netcoord/worst_case.hpp"
#include "netcoord/oracle.hpp"
#include "netcoord/serialize.hpp"
