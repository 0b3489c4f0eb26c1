#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace padzeta {

/// Base of every error raised by the library. Carries a short machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct ZeroInput : Error {
    explicit ZeroInput(const std::string& w) : Error("ZeroInput", w) {}
};

struct InvalidPrime : Error {
    explicit InvalidPrime(const std::string& w) : Error("InvalidPrime", w) {}
};

struct InvalidCoefficient : Error {
    explicit InvalidCoefficient(const std::string& w) : Error("InvalidCoefficient", w) {}
};

struct InvalidTheta : Error {
    explicit InvalidTheta(const std::string& w) : Error("InvalidTheta", w) {}
};

struct ResourceLimit : Error {
    ResourceLimit(const std::string& w, int level) : Error("ResourceLimit", w), level_(level) {}
    /// Congruence level (or shell index, when re-raised by the oracle) that blew the budget.
    int level() const noexcept { return level_; }

private:
    int level_;
};

struct NoGeometricTail : Error {
    explicit NoGeometricTail(const std::string& w) : Error("NoGeometricTail", w) {}
};

struct PoleAtPoint : Error {
    explicit PoleAtPoint(const std::string& w) : Error("PoleAtPoint", w) {}
};

struct UnsupportedExponent : Error {
    explicit UnsupportedExponent(const std::string& w) : Error("UnsupportedExponent", w) {}
};

struct InsufficientEntries : Error {
    explicit InsufficientEntries(const std::string& w) : Error("InsufficientEntries", w) {}
};

} // namespace padzeta
