#include "weave/reference_data.hpp"

#include <array>

namespace weave {

namespace {

constexpr std::array<DetValueRow, 14> kWp2Values = {{
    {{2, 2}, "2", "-i"},
    {{3, 2}, "5", "-1"},
    {{4, 2}, "12", "√3"},
    {{5, 2}, "29", "-1"},
    {{6, 2}, "70", "i"},
    {{7, 2}, "169", "1"},
    {{8, 2}, "408", "-√3"},
    {{9, 2}, "985", "1"},
    {{10, 2}, "2378", "-i"},
    {{11, 2}, "5741", "-1"},
    {{12, 2}, "13860", "√3"},
    {{13, 2}, "33461", "-1"},
    {{14, 2}, "80782", "i"},
    {{15, 2}, "195025", "1"},
}};

constexpr std::array<DetValueRow, 14> kW3nValues = {{
    {{3, 2}, "5", "-1"},
    {{3, 3}, "16", "1"},
    {{3, 4}, "45", "3"},
    {{3, 5}, "121", "1"},
    {{3, 6}, "320", "-1"},
    {{3, 7}, "841", "1"},
    {{3, 8}, "2205", "3"},
    {{3, 9}, "5776", "1"},
    {{3, 10}, "15125", "-1"},
    {{3, 11}, "39601", "1"},
    {{3, 12}, "103680", "3"},
    {{3, 13}, "271441", "1"},
    {{3, 14}, "710645", "-1"},
    {{3, 15}, "1860496", "1"},
}};

constexpr std::array<JonesRow, 8> kWp2Jones = {{
    {{2, 2}, "-t^(1/2) - t^(5/2)"},
    {{3, 2}, "t^-2 - t^-1 + 1 - t + t^2"},
    {{4, 2}, "-t^(-3/2) + 2t^(-1/2) - 2t^(1/2) + 2t^(3/2) - 3t^(5/2) + t^(7/2) - t^(9/2)"},
    {{5, 2}, "t^-4 - 2t^-3 + 4t^-2 - 5t^-1 + 5 - 5t + 4t^2 - 2t^3 + t^4"},
    {{6, 2},
     "-t^(-7/2) + 3t^(-5/2) - 6t^(-3/2) + 9t^(-1/2) - 11t^(1/2) + 12t^(3/2) - 11t^(5/2)"
     " + 8t^(7/2) - 6t^(9/2) + 2t^(11/2) - t^(13/2)"},
    {{7, 2},
     "t^-6 - 3t^-5 + 8t^-4 - 14t^-3 + 20t^-2 - 25t^-1 + 27 - 25t + 20t^2 - 14t^3 + 8t^4"
     " - 3t^5 + t^6"},
    {{8, 2},
     "-t^(-11/2) + 4t^(-9/2) - 11t^(-7/2) + 22t^(-5/2) - 35t^(-3/2) + 48t^(-1/2)"
     " - 58t^(1/2) + 61t^(3/2) - 56t^(5/2) + 46t^(7/2) - 33t^(9/2) + 19t^(11/2)"
     " - 10t^(13/2) + 3t^(15/2) - t^(17/2)"},
    {{9, 2},
     "t^-8 - 4t^-7 + 13t^-6 - 29t^-5 + 53t^-4 - 82t^-3 + 110t^-2 - 131t^-1 + 139 - 131t"
     " + 110t^2 - 82t^3 + 53t^4 - 29t^5 + 13t^6 - 4t^7 + t^8"},
}};

}  // namespace

std::span<const DetValueRow> published_wp2_values() { return kWp2Values; }
std::span<const DetValueRow> published_w3n_values() { return kW3nValues; }
std::span<const JonesRow> published_wp2_jones() { return kWp2Jones; }

}  // namespace weave
