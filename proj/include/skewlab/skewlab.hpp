#pragma once

#include "skewlab/bitset.hpp"
#include "skewlab/bitstring.hpp"
#include "skewlab/clique.hpp"
#include "skewlab/constructions.hpp"
#include "skewlab/counting.hpp"
#include "skewlab/family.hpp"
#include "skewlab/graph.hpp"
#include "skewlab/matching.hpp"
#include "skewlab/parallel.hpp"
#include "skewlab/report.hpp"
#include "skewlab/rng.hpp"
#include "skewlab/solver.hpp"
#include "skewlab/sperner.hpp"
