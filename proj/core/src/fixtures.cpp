#include "smallarr/fixtures.hpp"

#include "smallarr/errors.hpp"

namespace smallarr::fixtures {

namespace {

const char* const kExample05 = R"({
  "description": "Four lines in P^4: three pairwise disjoint lines each meeting a common line in one point; a degenerate rational normal quartic curve.",
  "ambient_rank": 5,
  "subspaces": [
    { "name": "L0", "basis": [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0]] },
    { "name": "L1", "basis": [[1, 0, 0, 0, 0], [0, 0, 1, 0, 0]] },
    { "name": "L2", "basis": [[0, 1, 0, 0, 0], [0, 0, 0, 1, 0]] },
    { "name": "L3", "basis": [[1, 1, 0, 0, 0], [0, 0, 0, 0, 1]] }
  ]
}
)";

const char* const kPathOf3Lines = R"({
  "description": "Chain of three coordinate lines in P^3; consecutive lines meet in a coordinate point.",
  "ambient_rank": 4,
  "subspaces": [
    { "name": "L12", "basis": [[1, 0, 0, 0], [0, 1, 0, 0]] },
    { "name": "L23", "basis": [[0, 1, 0, 0], [0, 0, 1, 0]] },
    { "name": "L34", "basis": [[0, 0, 1, 0], [0, 0, 0, 1]] }
  ]
}
)";

const char* const kTriangleOfLines = R"({
  "description": "The three coordinate lines of P^2, meeting pairwise in the three coordinate points.",
  "ambient_rank": 3,
  "subspaces": [
    { "name": "L12", "basis": [[1, 0, 0], [0, 1, 0]] },
    { "name": "L13", "basis": [[1, 0, 0], [0, 0, 1]] },
    { "name": "L23", "basis": [[0, 1, 0], [0, 0, 1]] }
  ]
}
)";

const char* const kCycle4Lines = R"({
  "description": "Four coordinate lines in P^3 whose intersection graph is a 4-cycle.",
  "ambient_rank": 4,
  "subspaces": [
    { "name": "L12", "basis": [[1, 0, 0, 0], [0, 1, 0, 0]] },
    { "name": "L23", "basis": [[0, 1, 0, 0], [0, 0, 1, 0]] },
    { "name": "L34", "basis": [[0, 0, 1, 0], [0, 0, 0, 1]] },
    { "name": "L14", "basis": [[1, 0, 0, 0], [0, 0, 0, 1]] }
  ]
}
)";

const char* const kSkewLines = R"({
  "description": "Two skew lines in P^3.",
  "ambient_rank": 4,
  "subspaces": [
    { "name": "A", "basis": [[1, 0, 0, 0], [0, 1, 0, 0]] },
    { "name": "B", "basis": [[0, 0, 1, 0], [0, 0, 0, 1]] }
  ]
}
)";

const char* const kC4 = R"({
  "description": "4-cycle, the smallest non-chordal graph.",
  "n": 4,
  "edges": [[0, 1], [1, 2], [2, 3], [0, 3]]
}
)";

const char* const kP4 = R"({
  "description": "Path on four vertices.",
  "n": 4,
  "edges": [[0, 1], [1, 2], [2, 3]]
}
)";

const char* const kDiamond = R"({
  "description": "4-cycle with one chord; chordal.",
  "n": 4,
  "edges": [[0, 1], [0, 2], [1, 2], [2, 3], [1, 3]]
}
)";

}  // namespace

const std::vector<Fixture>& all() {
    static const std::vector<Fixture> fixtures{
        {"example05", kExample05},
        {"path_of_3_lines", kPathOf3Lines},
        {"triangle_of_lines", kTriangleOfLines},
        {"cycle4_lines", kCycle4Lines},
        {"skew_lines", kSkewLines},
        {"c4", kC4},
        {"p4", kP4},
        {"diamond", kDiamond},
    };
    return fixtures;
}

const std::string& text(const std::string& name) {
    for (const auto& fixture : all())
        if (fixture.name == name) return fixture.text;
    throw input_error("unknown fixture: " + name);
}

}  // namespace smallarr::fixtures
