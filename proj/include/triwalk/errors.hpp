#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace triwalk {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A path prefix (or a single step) leaves the simplex. `prefix()` is the
/// length of the first offending prefix.
class OutOfLattice : public Error {
public:
    explicit OutOfLattice(std::size_t prefix)
        : Error("path leaves the lattice after " + std::to_string(prefix) + " step(s)"),
          prefix_(prefix) {}
    std::size_t prefix() const noexcept { return prefix_; }

private:
    std::size_t prefix_;
};

class InvalidPoint : public Error { using Error::Error; };
class CapExceeded : public Error { using Error::Error; };
class NotAPath : public Error { using Error::Error; };
class HeightOutOfRange : public Error { using Error::Error; };
class EmptySet : public Error { using Error::Error; };
class NotMixedPair : public Error { using Error::Error; };
class EmptyPath : public Error { using Error::Error; };
class LengthMismatch : public Error { using Error::Error; };
class MixedInput : public Error { using Error::Error; };
class NotAllowed : public Error { using Error::Error; };
class AmplitudeExceeded : public Error { using Error::Error; };
class NotInImage : public Error { using Error::Error; };
class OutsideWaffle : public Error { using Error::Error; };
class InvalidWalk : public Error { using Error::Error; };
class PrecisionLoss : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };

}  // namespace triwalk
