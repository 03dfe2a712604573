#pragma once

#include <stdexcept>
#include <string>

namespace mfk {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotSquare : public Error {
public:
    using Error::Error;
};

class NonUnitDeterminant : public Error {
public:
    using Error::Error;
};

class NotDivisible : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class BadIndex : public Error {
public:
    using Error::Error;
};

class UnknownLabel : public Error {
public:
    using Error::Error;
};

class NotAFactorization : public Error {
public:
    using Error::Error;
};

class NotSplittable : public Error {
public:
    using Error::Error;
};

class NotBlockDiagonal : public Error {
public:
    using Error::Error;
};

class BadPivot : public Error {
public:
    using Error::Error;
};

class WitnessFailed : public Error {
public:
    using Error::Error;
};

class GenerationFailed : public Error {
public:
    using Error::Error;
};

class NotLinearUnit : public Error {
public:
    using Error::Error;
};

class IdentityFailed : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace mfk
