#pragma once

#include <stdexcept>
#include <string>

namespace wzpi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define WZPI_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                  \
    public:                                                      \
        explicit Name(const std::string& what) : Error(what) {}  \
    }

// hyperterm
WZPI_DEFINE_ERROR(GammaMismatch);
WZPI_DEFINE_ERROR(IrrationalResidue);
WZPI_DEFINE_ERROR(PoleAtPoint);
WZPI_DEFINE_ERROR(NoReflectionPair);
WZPI_DEFINE_ERROR(DomainError);

// wz
WZPI_DEFINE_ERROR(NotClosedFormRatio);
WZPI_DEFINE_ERROR(BoundaryNonzero);

// numerics
WZPI_DEFINE_ERROR(RatioNotContracting);
WZPI_DEFINE_ERROR(ReflectionFailed);
WZPI_DEFINE_ERROR(TailNotVanishing);

#undef WZPI_DEFINE_ERROR

/// Parse failure with the byte offset and what the parser would have accepted.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, std::string expected, const std::string& found)
        : Error("syntax error at " + std::to_string(position) + ": expected " + expected +
                ", found " + found),
          position_(position), expected_(std::move(expected)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

}  // namespace wzpi
