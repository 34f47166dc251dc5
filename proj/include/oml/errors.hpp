#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "oml/element_set.hpp"

namespace oml {

/// Base for every error raised by the library. Carries the offending
/// element indices (user indices, never renumbered) when there are any.
class LatticeError : public std::runtime_error {
 public:
  LatticeError(const std::string& what, std::vector<Element> witnesses = {})
      : std::runtime_error(what), witnesses_(std::move(witnesses)) {}

  const std::vector<Element>& witnesses() const noexcept { return witnesses_; }

 private:
  std::vector<Element> witnesses_;
};

#define OML_DEFINE_ERROR(Name)                 \
  class Name : public LatticeError {           \
   public:                                     \
    using LatticeError::LatticeError;          \
  }

// Structural failures of build_lattice.
OML_DEFINE_ERROR(NotAPoset);
OML_DEFINE_ERROR(NotALattice);
OML_DEFINE_ERROR(NotOrtholattice);
OML_DEFINE_ERROR(NotOrthomodular);

OML_DEFINE_ERROR(SizeLimitExceeded);
OML_DEFINE_ERROR(PreconditionViolated);
OML_DEFINE_ERROR(NotCentralSubalgebra);

// Input handling.
OML_DEFINE_ERROR(IoError);
OML_DEFINE_ERROR(MalformedInput);
OML_DEFINE_ERROR(IndexOutOfRange);

#undef OML_DEFINE_ERROR

}  // namespace oml
