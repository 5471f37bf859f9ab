#pragma once

#include <stdexcept>
#include <string>

namespace fq {

// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A context was requested for a number that is not prime.
class CompositeInput : public Error {
public:
    using Error::Error;
};

// p outside the fast-path window [3, 2^32).
class OutOfRange : public Error {
public:
    using Error::Error;
};

// Argument outside the domain where a quantity is defined (e.g. log log n <= 0).
class DomainError : public Error {
public:
    using Error::Error;
};

// No non-vanishing witness below p^2; only an arithmetic bug can cause this.
class SearchExhausted : public Error {
public:
    using Error::Error;
};

class CacheCorrupt : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace fq
