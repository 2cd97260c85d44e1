#ifndef INFLUGAME_INFLUGAME_HPP
#define INFLUGAME_INFLUGAME_HPP

#include "influgame/classical.hpp"
#include "influgame/datasets.hpp"
#include "influgame/exact.hpp"
#include "influgame/game.hpp"
#include "influgame/graph.hpp"
#include "influgame/netformat.hpp"
#include "influgame/reproduce.hpp"
#include "influgame/sampling.hpp"
#include "influgame/spread.hpp"
#include "influgame/table.hpp"

#endif  // INFLUGAME_INFLUGAME_HPP
