#pragma once

// Error taxonomy shared by the library and the CLI exit-code contract:
// usage/domain -> 2, model -> 3, numeric -> 4.

#include <stdexcept>
#include <string>

namespace xent {

// Structurally invalid call: dimension mismatch, site out of range, bad bracket.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input outside the mathematical domain: not a density matrix,
// positivity violation, witness requested for a separable state.
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A modelling assumption failed, e.g. a reduced state that is not isotropic
// X-form, so the correlator-to-state mapping does not apply.
class model_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical procedure did not converge or lost precision.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace xent
