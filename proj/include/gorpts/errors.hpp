#ifndef GORPTS_ERRORS_HPP
#define GORPTS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gorpts {

// Rejected input: bad h-vector, excluded ratio, malformed index set, ...
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A cross-check that must hold by construction failed; indicates a bug,
// not bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace gorpts

#endif
