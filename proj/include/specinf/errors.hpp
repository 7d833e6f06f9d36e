#pragma once

#include <stdexcept>
#include <string>

namespace specinf {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Expression front-end
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};
struct UnknownVariable : Error {
    explicit UnknownVariable(const std::string& name)
        : Error("unknown variable '" + name + "'") {}
};

// Newton geometry
struct EmptyPolynomial : Error {
    EmptyPolynomial() : Error("zero polynomial has no Newton polytope") {}
};
struct NotConvenient : Error {
    explicit NotConvenient(const std::string& msg = "polynomial is not convenient")
        : Error(msg) {}
};
struct DegeneratePolytope : Error {
    explicit DegeneratePolytope(const std::string& msg = "polytope is not full-dimensional")
        : Error(msg) {}
};
struct ArityLimitExceeded : Error {
    explicit ArityLimitExceeded(int n)
        : Error("face enumeration limited to 3 variables, got " + std::to_string(n)) {}
};

// Groebner engine
struct ResourceLimit : Error {
    explicit ResourceLimit(const std::string& msg) : Error(msg) {}
};
struct InfiniteQuotient : Error {
    InfiniteQuotient() : Error("quotient ring is infinite-dimensional") {}
};
struct SingularMultiplication : Error {
    explicit SingularMultiplication(int var)
        : Error("multiplication matrix for variable " + std::to_string(var + 1) +
                " is singular") {}
};

// Spectrum / Hodge
struct Degenerate : Error {
    Degenerate() : Error("polynomial is degenerate (some face has a torus critical point)") {}
};
struct SpectrumOutOfRange : Error {
    explicit SpectrumOutOfRange(const std::string& gamma)
        : Error("spectrum value " + gamma + " outside [0,n]") {}
};
struct UnknownCatalogEntry : Error {
    explicit UnknownCatalogEntry(const std::string& name)
        : Error("no catalog entry named '" + name + "'") {}
};

// Local chart model
struct TruncationOverflow : Error {
    explicit TruncationOverflow(const std::string& msg) : Error(msg) {}
};
struct NotRepresentable : Error {
    explicit NotRepresentable(const std::string& msg) : Error(msg) {}
};

} // namespace specinf
