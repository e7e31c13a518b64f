#pragma once

#include "rescnf/assignment.hpp"
#include "rescnf/bounds.hpp"
#include "rescnf/brute_force.hpp"
#include "rescnf/ccnf.hpp"
#include "rescnf/dimacs.hpp"
#include "rescnf/error.hpp"
#include "rescnf/formula.hpp"
#include "rescnf/graph.hpp"
#include "rescnf/growth.hpp"
#include "rescnf/horn.hpp"
#include "rescnf/rational.hpp"
#include "rescnf/rcnf.hpp"
#include "rescnf/resolution.hpp"
#include "rescnf/scnf.hpp"
