#pragma once

#include <stdexcept>
#include <string>

namespace hopfcyc {

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero") {}
};

struct ZeroDenominator : std::runtime_error {
    ZeroDenominator() : std::runtime_error("zero denominator") {}
};

struct FieldMismatch : std::runtime_error {
    FieldMismatch(const std::string& a, const std::string& b)
        : std::runtime_error("field mismatch: " + a + " vs " + b) {}
};

struct UnknownGenerator : std::runtime_error {
    explicit UnknownGenerator(const std::string& g)
        : std::runtime_error("unknown generator: " + g) {}
};

struct NonInvertibleInverse : std::runtime_error {
    explicit NonInvertibleInverse(const std::string& g)
        : std::runtime_error("inverse of non-invertible generator: " + g) {}
};

struct NotGrouplike : std::runtime_error {
    explicit NotGrouplike(const std::string& what)
        : std::runtime_error("element is not grouplike: " + what) {}
};

struct InvalidPair : std::runtime_error {
    explicit InvalidPair(const std::string& why)
        : std::runtime_error("invalid modular pair: " + why) {}
};

struct InvolutionFails : std::runtime_error {
    explicit InvolutionFails(const std::string& witness)
        : std::runtime_error("twisted antipode does not square to identity, witness: " + witness) {}
};

struct TraceAxiomsFail : std::runtime_error {
    explicit TraceAxiomsFail(const std::string& why)
        : std::runtime_error("trace axioms fail: " + why) {}
};

struct NotAComplex : std::runtime_error {
    NotAComplex(int degree, int column)
        : std::runtime_error("composite differential nonzero at degree " + std::to_string(degree) +
                             ", column " + std::to_string(column)),
          degree(degree), column(column) {}
    int degree;
    int column;
};

struct NotCocommutative : std::runtime_error {
    NotCocommutative() : std::runtime_error("instance is not cocommutative") {}
};

struct NotCommutative : std::runtime_error {
    NotCommutative() : std::runtime_error("instance is not commutative") {}
};

struct NotTruncatable : std::runtime_error {
    explicit NotTruncatable(const std::string& inst)
        : std::runtime_error("instance has no homology-compatible grading: " + inst) {}
};

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what)
        : std::runtime_error("degree cap exceeded: " + what) {}
};

struct InvalidGroupTable : std::runtime_error {
    explicit InvalidGroupTable(const std::string& why)
        : std::runtime_error("invalid group table: " + why) {}
};

struct NonConfluentPresentation : std::runtime_error {
    explicit NonConfluentPresentation(const std::string& witness)
        : std::runtime_error("presentation is not confluent, critical pair: " + witness) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& why) : std::runtime_error("parse error: " + why) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& why) : std::runtime_error("config error: " + why) {}
};

}  // namespace hopfcyc
