#ifndef SYMPOW_SYMPOW_HPP
#define SYMPOW_SYMPOW_HPP

#include "sympow/closure.hpp"
#include "sympow/common.hpp"
#include "sympow/decomposition.hpp"
#include "sympow/ideal.hpp"
#include "sympow/linprog.hpp"
#include "sympow/monomial.hpp"
#include "sympow/parallel.hpp"
#include "sympow/parse.hpp"
#include "sympow/polyhedron.hpp"
#include "sympow/rational.hpp"
#include "sympow/resurgence.hpp"
#include "sympow/staircase.hpp"
#include "sympow/symbolic.hpp"
#include "sympow/workspace.hpp"

#endif
