#pragma once

#include <stdexcept>
#include <string>

namespace codecid {

// Invalid parameters or malformed data. The CLI maps this to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] inline void fail(const std::string& msg) {
    throw Error(msg);
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
}

} // namespace codecid
