#pragma once

#include <stdexcept>
#include <string>

namespace tropdelta {

/// Base class for every domain failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidGraph : public Error {
public:
    using Error::Error;
};

class UnstableGraph : public Error {
public:
    using Error::Error;
};

class GenusMismatch : public Error {
public:
    using Error::Error;
};

class InvalidLabelling : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class NotFound : public Error {
public:
    using Error::Error;
};

/// The input deck is not realised by any stable graph.
class ReconstructionFailure : public Error {
public:
    using Error::Error;
};

/// Two computations that must agree did not. Always a bug or a violated precondition.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace tropdelta
