#pragma once

#include <stdexcept>
#include <string>

namespace spinunitary {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct NotHermitianError : Error { using Error::Error; };
// The t=1/2 class is not a union of strings of the expected shape.
struct MalformedParameter : Error { using Error::Error; };
struct NotStrictCore : Error { using Error::Error; };
struct ScriptError : Error { using Error::Error; };

struct Pole : Error {
    explicit Pole(const std::string& what) : Error("pole: " + what) {}
};

}  // namespace spinunitary
