#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zariski {

// Base class for everything this library throws on contract violations.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class NotSymmetric : public Error {
public:
    explicit NotSymmetric(const std::string& msg) : Error(msg) {}
};

class SingularMatrix : public Error {
public:
    explicit SingularMatrix(const std::string& msg) : Error(msg) {}
};

class NotNegativeDefinite : public Error {
public:
    explicit NotNegativeDefinite(const std::string& msg) : Error(msg) {}
};

class ZeroClass : public Error {
public:
    explicit ZeroClass(const std::string& msg) : Error(msg) {}
};

class InvalidParameter : public Error {
public:
    explicit InvalidParameter(const std::string& msg) : Error(msg) {}
};

// Raised by the decomposition engine when one of its consistency checks
// fails; the message names the check that ruled the input out.
class NotPseudoEffective : public Error {
public:
    explicit NotPseudoEffective(const std::string& msg) : Error(msg) {}
};

class OracleLimitExceeded : public Error {
public:
    explicit OracleLimitExceeded(const std::string& msg) : Error(msg) {}
};

// Carries the subset count an enumeration would have needed.
class EnumerationTooLarge : public Error {
public:
    EnumerationTooLarge(const std::string& msg, std::uintmax_t required)
        : Error(msg), required_subsets(required) {}
    std::uintmax_t required_subsets;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

}  // namespace zariski
