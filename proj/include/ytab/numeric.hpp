#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ytab {

// Exact arithmetic only. Coefficients are integers everywhere except the
// relation-space oracle, which eliminates over the rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when a configurable resource cap (path count, oracle dimension,
// rewrite steps) is exceeded; distinct from input-validation errors.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ytab
