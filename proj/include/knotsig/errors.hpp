#pragma once

#include <stdexcept>
#include <string>

namespace knotsig {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial, braid, or catalog text.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A Hermitian form evaluated too close to one of its singular points.
class DegenerateEvaluation : public Error {
public:
    using Error::Error;
};

/// Laurent/Jones-jump data requested at a root of multiplicity > 1.
class NonSimpleRoot : public Error {
public:
    using Error::Error;
};

/// No good crossing found within the threading budget.
class SearchExhausted : public Error {
public:
    using Error::Error;
};

}  // namespace knotsig
