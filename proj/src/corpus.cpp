#include "gameforms/corpus.hpp"

namespace gf::corpus {

GameForm g1() { return GameForm(2, 2, {0, 0, 1, 2}); }

GameForm g2() { return GameForm(2, 4, {0, 0, 1, 1, 2, 3, 2, 3}); }

GameForm g3() { return GameForm(3, 3, {0, 0, 2, 0, 1, 1, 2, 1, 2}); }

GameForm g4() { return GameForm(3, 3, {0, 0, 2, 0, 0, 1, 3, 1, 1}); }

GameForm g5() {
    return GameForm(4, 4,
                    {0, 1, 0, 1,
                     2, 3, 3, 2,
                     0, 3, 0, 4,
                     2, 1, 5, 1});
}

GameForm g6() { return GameForm(2, 2, {0, 0, 0, 1}); }

GameForm g7() { return GameForm(2, 2, {0, 1, 1, 0}); }

GameForm g8() { return GameForm(2, 3, {0, 0, 1, 2, 3, 2}); }

GameForm g9() { return GameForm(3, 3, {0, 0, 1, 3, 4, 1, 3, 2, 2}); }

std::vector<GameForm> all() {
    return {g1(), g2(), g3(), g4(), g5(), g6(), g7(), g8(), g9()};
}

}  // namespace gf::corpus
