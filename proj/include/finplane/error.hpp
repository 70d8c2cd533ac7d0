#pragma once

#include <stdexcept>
#include <string>

namespace finplane {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad prime, out-of-range k, ...).
class InvalidArgument : public Error {
   public:
    using Error::Error;
};

/// A rational map hit a zero denominator: alpha is 1 or -1.
class DegenerateAlpha : public Error {
   public:
    using Error::Error;
};

/// No Hypothesis-J certificate is available for the requested field order.
class NoCertificate : public Error {
   public:
    using Error::Error;
};

/// An exhaustive search that theory says must succeed came back empty.
class ConjectureViolation : public Error {
   public:
    using Error::Error;
};

/// A construction produced something the embedding verifier rejected.
class ConstructionFailed : public Error {
   public:
    using Error::Error;
};

/// A vertex degree exceeds the q+1 lines through a point.
class ImpossibleDegree : public Error {
   public:
    using Error::Error;
};

/// Exhaustive search proved that no embedding exists.
class NoEmbedding : public Error {
   public:
    using Error::Error;
};

/// Malformed or inconsistent input file.
class SchemaError : public Error {
   public:
    using Error::Error;
};

}  // namespace finplane
