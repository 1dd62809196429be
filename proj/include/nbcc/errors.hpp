#pragma once

#include <stdexcept>
#include <string>

namespace nbcc {

// Base of every error raised by the library. The C API maps each subclass to
// its own status code.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed arguments: out-of-range ids, self-loops, unparsable files.
class input_error : public error {
public:
    using error::error;
};

// An exact computation was asked to run above its configured cap.
class size_error : public error {
public:
    using error::error;
};

// A MinorModel failed validation where a valid one was required.
class model_error : public error {
public:
    using error::error;
};

// A structural precondition (chordality, cluster diameter, ...) does not hold.
class precondition_error : public error {
public:
    using error::error;
};

} // namespace nbcc
