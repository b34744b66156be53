#pragma once

#include "gkm/polyring.hpp"
#include "gkm/graph.hpp"
#include "gkm/graph_io.hpp"
#include "gkm/coxeter.hpp"
#include "gkm/builders.hpp"
#include "gkm/solver.hpp"
#include "gkm/basis_io.hpp"
#include "gkm/ring.hpp"
#include "gkm/oracle.hpp"
#include "gkm/render.hpp"
