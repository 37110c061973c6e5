#pragma once

#include <stdexcept>
#include <string>

namespace smallarr {

/// Raised for malformed documents and violated operation preconditions.
/// Internal invariant breaks use std::logic_error instead.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace smallarr
