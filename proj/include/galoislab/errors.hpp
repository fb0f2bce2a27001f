#ifndef GALOISLAB_ERRORS_HPP
#define GALOISLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace galoislab {

// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument: malformed permutation, mismatched composition sum,
// negative coefficients where a distribution is expected, and the like.
class invalid_input : public error {
public:
    explicit invalid_input(const std::string& what) : error(what) {}
};

// A computation would exceed the configured memory/enumeration cap.
class cap_exceeded : public error {
public:
    explicit cap_exceeded(const std::string& what) : error(what) {}
};

} // namespace galoislab

#endif
