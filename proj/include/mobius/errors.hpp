#ifndef MOBIUS_ERRORS_HPP
#define MOBIUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mobius {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A model field violates its validity constraints.
class DomainError : public Error {
public:
    DomainError(std::string field, const std::string& reason)
        : Error(field + ": " + reason), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// A square-root radicand went negative where a real exponent is required;
/// signals that no normalizable solution exists for these parameters.
class ComplexExponent : public Error {
public:
    explicit ComplexExponent(double radicand)
        : Error("negative radicand " + std::to_string(radicand) +
                " in exponent computation"),
          radicand_(radicand) {}
    double radicand() const { return radicand_; }

private:
    double radicand_;
};

/// Negative radicand in a hypergeometric-parameter computation.
class ComplexParameter : public Error {
public:
    explicit ComplexParameter(double radicand)
        : Error("negative radicand " + std::to_string(radicand) +
                " in hypergeometric parameters"),
          radicand_(radicand) {}
    double radicand() const { return radicand_; }

private:
    double radicand_;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class NumericalInstability : public Error {
public:
    using Error::Error;
};

class DivergentSeries : public Error {
public:
    using Error::Error;
};

class NoBoundState : public Error {
public:
    using Error::Error;
};

class MaxSubdivisions : public Error {
public:
    using Error::Error;
};

} // namespace mobius

#endif
