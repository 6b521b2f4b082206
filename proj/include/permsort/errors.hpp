#pragma once

#include <stdexcept>
#include <string>

namespace permsort {

// Malformed input word, pattern string, sorter spec or class descriptor.
class InvalidInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the domain of an operation (bad site index, unknown
// statistic, malformed label).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An operation was called on a permutation outside the class it requires.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Enumeration size or label-multiset size beyond the configured bound.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A generating tree was requested for a class that is not closed under the
// parent-removal operation of its insertion rule.
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Inexact division inside an exact counting formula.
class ArithmeticError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace permsort
