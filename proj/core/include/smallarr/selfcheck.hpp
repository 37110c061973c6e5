#pragma once

#include <string>
#include <vector>

namespace smallarr {

struct SelfcheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SelfcheckReport {
    std::vector<SelfcheckItem> items;
    bool all_pass() const;
};

/// Replays the bundled model arrangements and the exhaustive 5-vertex graph
/// sweep against their known outcomes. `filter` keeps only the items whose
/// name contains it; an empty selection passes trivially.
SelfcheckReport selfcheck(const std::string& filter = "");

}  // namespace smallarr
