#pragma once

#include <stdexcept>
#include <string>

namespace hakenlab {

// Error taxonomy shared across modules. Every throw site uses one of these
// so the CLI can map failures onto its exit-code contract.

struct ParseError : std::runtime_error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_ = 0, int column_ = 0)
        : std::runtime_error(msg), line(line_), column(column_) {}
};

struct MixedRadicals : std::runtime_error {
    explicit MixedRadicals(const std::string& msg) : std::runtime_error(msg) {}
};

struct IrrationalSpectrum : std::runtime_error {
    // Square-free kernel of the discriminant the caller would have to adjoin
    // (decimal string), empty when no single quadratic extension repairs the
    // failure.
    std::string needed_sqrt;
    explicit IrrationalSpectrum(const std::string& msg, std::string d = {})
        : std::runtime_error(msg), needed_sqrt(std::move(d)) {}
};

struct NotHyperbolic : std::runtime_error {
    explicit NotHyperbolic(const std::string& msg) : std::runtime_error(msg) {}
};

struct RelationViolated : std::runtime_error {
    std::string residual;  // printable product of commutators
    explicit RelationViolated(const std::string& msg, std::string residual_ = {})
        : std::runtime_error(msg), residual(std::move(residual_)) {}
};

struct NotAKnot : std::runtime_error {
    explicit NotAKnot(const std::string& msg) : std::runtime_error(msg) {}
};

struct PresentationMismatch : std::runtime_error {
    explicit PresentationMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct MissingData : std::runtime_error {
    explicit MissingData(const std::string& msg) : std::runtime_error(msg) {}
};

struct InfiniteModule : std::runtime_error {
    explicit InfiniteModule(const std::string& msg) : std::runtime_error(msg) {}
};

struct WrongComponentCount : std::runtime_error {
    explicit WrongComponentCount(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hakenlab
