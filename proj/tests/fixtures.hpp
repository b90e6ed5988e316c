#pragma once

#include "knotsig/braid.hpp"
#include "knotsig/sympoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fixtures {

struct Knot {
    std::string name;
    knotsig::BraidWord braid;
    std::optional<knotsig::SymPoly> delta;
    std::optional<knotsig::SymPoly> p;
    int sigma;  // at s = 1/2
};

inline std::vector<Knot> catalog()
{
    using knotsig::SymPoly;
    return {
        {"3_1", {1, 1, 1}, SymPoly{1, 1}, SymPoly{0, 2, 1}, -2},
        {"4_1", {1, -2, 1, -2}, SymPoly{1, -1}, SymPoly{}, 0},
        {"7_2", {-1, 3, 3, 3, 2, 1, 1, -3, 2}, SymPoly{1, 3}, SymPoly{0, 12, 14}, -2},
        {"7_3", {1, 1, 2, -1, 2, 2, 2, 2}, SymPoly{1, 5, 2}, SymPoly{0, 22, 65, 46, 9}, -4},
        {"7_5", {1, 1, 1, 1, 2, -1, 2, 2}, std::nullopt, std::nullopt, -4},
        {"8_2", {-1, 2, 2, 2, 2, 2, -1, 2}, std::nullopt, std::nullopt, -4},
        {"8_5", {1, 1, 1, -2, 1, 1, 1, -2}, std::nullopt, std::nullopt, -4},
        {"8_15", {1, 1, -2, 1, 3, 3, 2, 2, 3}, std::nullopt, std::nullopt, -4},
    };
}

}  // namespace fixtures
