#pragma once

#include <stdexcept>
#include <string>

namespace parastat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

/// Operands built over different generator alphabets.
struct AlphabetMismatch : Error {
    AlphabetMismatch() : Error("operands belong to distinct presentations") {}
};

struct RankError : Error {
    using Error::Error;
};

struct HomogeneityError : Error {
    using Error::Error;
};

/// An input exceeds the truncation degree; required() is the minimum degree
/// that would have accepted it.
class TruncationError : public Error {
public:
    TruncationError(int required, int available)
        : Error("degree " + std::to_string(required) + " exceeds truncation degree " +
                std::to_string(available) + " (rerun with degree >= " +
                std::to_string(required) + ")"),
          required_(required) {}
    int required() const { return required_; }

private:
    int required_;
};

struct IncompleteMapsError : Error {
    using Error::Error;
};

struct FlavorError : Error {
    using Error::Error;
};

struct HostError : Error {
    using Error::Error;
};

/// A constructor's built-in verification failed. Raised only on engine bugs
/// or corrupted inputs.
struct ConstructionError : Error {
    using Error::Error;
};

} // namespace parastat
