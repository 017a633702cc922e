#pragma once

#include <stdexcept>
#include <string>

namespace degen {

/// Bad argument values (negative indices, malformed rational strings, ...).
class argument_error : public std::invalid_argument {
public:
    explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Operation applied outside its mathematical domain (division by zero,
/// exp of a series with nonzero constant term, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// A result would exceed the trusted truncation order, or a numeric
/// tail guard could not be established.
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

/// A brute-force computation was asked to run past its practical bound.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace degen
