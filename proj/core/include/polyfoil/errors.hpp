#pragma once

#include <stdexcept>
#include <string>

namespace polyfoil {

// Base class for everything thrown by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: non-finite values, wrong tuple length, bad argument counts.
class validation_error : public error {
public:
    explicit validation_error(const std::string& what) : error(what) {}
};

// Input is well-formed but outside the open set an operation is defined on.
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

// Input is inside the domain but too close to its boundary for the
// requested derivative or factorization to be trustworthy.
class conditioning_error : public error {
public:
    explicit conditioning_error(const std::string& what) : error(what) {}
};

// An iteration failed to converge within its budget.
class numerical_error : public error {
public:
    explicit numerical_error(const std::string& what) : error(what) {}
};

} // namespace polyfoil
