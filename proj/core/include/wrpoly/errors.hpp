#pragma once

#include <stdexcept>
#include <string>

namespace wr {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Gamma/log-gamma argument at or within tolerance of a non-positive integer.
class PoleError : public Error {
public:
    using Error::Error;
};

// Parameter set violates a precondition of the requested operation.
class ParamError : public Error {
public:
    using Error::Error;
};

// Hard structural constraint violated (e.g. Racah validity bounds).
class ConstraintError : public Error {
public:
    using Error::Error;
};

// Three-term recursion denominator within tolerance of zero.
class DegenerateRecursionError : public Error {
public:
    using Error::Error;
};

class QuadratureError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Least-squares design matrix is rank deficient.
class FitDegenerateError : public Error {
public:
    using Error::Error;
};

// Operation requested outside its physical parameter regime.
class RegimeError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

}  // namespace wr
