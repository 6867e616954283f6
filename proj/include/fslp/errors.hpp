#pragma once

#include <stdexcept>
#include <string>

namespace fslp {

// Base class for every error this library throws.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside a function's domain (pole, wrong interval, bad order).
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

// Result magnitude not representable in double precision.
class range_error : public error {
public:
    explicit range_error(const std::string& what) : error(what) {}
};

// A requested tolerance could not be met; carries the achieved level.
class accuracy_error : public error {
public:
    accuracy_error(const std::string& what, double achieved)
        : error(what), achieved_(achieved) {}
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

// A computed result contradicts an analytic property it should satisfy
// (for example a bracket that does not contain the expected sign pattern).
class structural_error : public error {
public:
    explicit structural_error(const std::string& what) : error(what) {}
};

} // namespace fslp
