#ifndef PCURVE_ERRORS_HPP
#define PCURVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pcurve {

struct ZeroInverse : std::domain_error {
    ZeroInverse() : std::domain_error("inverse of zero") {}
};

struct ZeroPolynomial : std::domain_error {
    ZeroPolynomial(const std::string& op)
        : std::domain_error(op + ": zero polynomial") {}
};

struct NotPrime : std::invalid_argument {
    explicit NotPrime(unsigned long long n)
        : std::invalid_argument(std::to_string(n) + " is not prime") {}
};

struct EvenPrime : std::invalid_argument {
    EvenPrime() : std::invalid_argument("characteristic 2 is not supported") {}
};

struct NotOddPrime : std::invalid_argument {
    explicit NotOddPrime(unsigned long long n)
        : std::invalid_argument(std::to_string(n) + " is not an odd prime") {}
};

struct TooLarge : std::invalid_argument {
    TooLarge(const std::string& what) : std::invalid_argument(what) {}
};

struct BadComposition : std::invalid_argument {
    BadComposition(const std::string& what) : std::invalid_argument(what) {}
};

struct DegenerateInput : std::invalid_argument {
    DegenerateInput(const std::string& what) : std::invalid_argument(what) {}
};

struct EvenIndex : std::invalid_argument {
    explicit EvenIndex(unsigned long long k)
        : std::invalid_argument("index " + std::to_string(k) + " must be odd") {}
};

struct SingularCurve : std::domain_error {
    SingularCurve(const std::string& what) : std::domain_error(what) {}
};

struct UnsupportedP : std::invalid_argument {
    explicit UnsupportedP(unsigned long long p)
        : std::invalid_argument("operation not available for p = " + std::to_string(p)) {}
};

struct PositiveDimensional : std::runtime_error {
    PositiveDimensional(const std::string& what) : std::runtime_error(what) {}
};

struct SupportViolation : std::logic_error {
    SupportViolation(const std::string& what) : std::logic_error(what) {}
};

struct BadAlpha : std::invalid_argument {
    BadAlpha(const std::string& what) : std::invalid_argument(what) {}
};

struct DegeneratePipeline : std::runtime_error {
    DegeneratePipeline(const std::string& what) : std::runtime_error(what) {}
};

struct FieldMismatch : std::logic_error {
    FieldMismatch(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pcurve

#endif
