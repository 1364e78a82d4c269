#ifndef DICHRO_DICHRO_HPP
#define DICHRO_DICHRO_HPP

#include "dichro/analysis.hpp"
#include "dichro/coloring.hpp"
#include "dichro/construction.hpp"
#include "dichro/digraph.hpp"
#include "dichro/dot.hpp"
#include "dichro/errors.hpp"
#include "dichro/io.hpp"
#include "dichro/solver.hpp"

#endif  // DICHRO_DICHRO_HPP
