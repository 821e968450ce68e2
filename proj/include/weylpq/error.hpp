#pragma once

#include <stdexcept>
#include <string>

namespace weylpq {

/// A configured resource cap (Weyl order, dimension, enumeration bound, iteration count) was hit.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (non-dominant weight, bad rank, wrong length, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw PreconditionError(what);
}

}  // namespace weylpq
