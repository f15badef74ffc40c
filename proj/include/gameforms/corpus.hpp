#pragma once

#include <vector>

#include "gameforms/core_forms.hpp"

namespace gf::corpus {

// Nine classic sample forms g1..g9 used throughout the tests, the suite and
// the shipped fixture files. g1-g6 are tight, g7-g9 are not.
GameForm g1();
GameForm g2();
GameForm g3();
GameForm g4();
GameForm g5();
GameForm g6();
GameForm g7();
GameForm g8();
GameForm g9();

// All nine, in order.
std::vector<GameForm> all();

}  // namespace gf::corpus
