#pragma once

#include <string>
#include <vector>

namespace smallarr::fixtures {

/// Built-in copies of the documents shipped under fixtures/, so the
/// self-check runs without filesystem access. Names match the file stems.
struct Fixture {
    std::string name;
    std::string text;
};

const std::vector<Fixture>& all();
const std::string& text(const std::string& name);  // throws input_error if unknown

}  // namespace smallarr::fixtures
