#pragma once
// error.hpp - exception types shared across the library

#include <stdexcept>
#include <string>

namespace sxc {

// malformed input text (schedule grammar, set files)
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// arguments outside an operation's domain (digit out of range, index past a
// finite schedule, negative horizon, ...)
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// an asymptotic operation was asked to run on a finite schedule
class finite_schedule_error : public domain_error {
public:
    using domain_error::domain_error;
};

} // namespace sxc
