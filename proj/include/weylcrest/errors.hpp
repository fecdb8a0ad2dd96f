/* Error taxonomy: domain errors name the violated precondition;
   internal errors flag consistency failures that indicate a bug. */
#pragma once

#include <stdexcept>
#include <string>

namespace weylcrest {

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace weylcrest
