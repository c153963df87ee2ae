#pragma once

#include <stdexcept>
#include <string>

namespace lip {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Asset or config file could not be read or parsed.
class LoadError : public Error {
public:
    using Error::Error;
};

// Well-formed input that violates a documented invariant; the message names
// the offending key or entry.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Input exceeds the processing cap.
class SizeError : public Error {
public:
    using Error::Error;
};

}  // namespace lip
