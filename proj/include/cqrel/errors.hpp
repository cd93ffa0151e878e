#pragma once

#include <stdexcept>
#include <string>

namespace cqrel {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A value expected in span{@, i, j, k} has a non-negligible 1 or @e_i part.
class NotInMinkowskiSubspace : public Error {
  public:
    using Error::Error;
};

/// A value expected to be a field strength has a non-negligible 1 or @ part.
class NotFieldStrength : public Error {
  public:
    using Error::Error;
};

class NotARotor : public Error {
  public:
    using Error::Error;
};

class InvalidDirection : public Error {
  public:
    using Error::Error;
};

/// Analytic derivatives were requested from a field that does not provide them.
class BackendUnavailable : public Error {
  public:
    using Error::Error;
};

/// The component and CQ forms of the Lagrangian density disagree.
class FormMismatch : public Error {
  public:
    using Error::Error;
};

/// The Lorenz gauge condition does not hold where it is required.
class GaugeViolation : public Error {
  public:
    using Error::Error;
};

}  // namespace cqrel
