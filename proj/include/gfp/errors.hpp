#pragma once

#include <stdexcept>
#include <string>

namespace gfp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GFP_DEFINE_ERROR(Name)          \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  };

GFP_DEFINE_ERROR(ZeroDivisor)
GFP_DEFINE_ERROR(ZeroPolynomial)
GFP_DEFINE_ERROR(ParseError)
GFP_DEFINE_ERROR(UnknownFamily)
GFP_DEFINE_ERROR(InvalidFamily)
GFP_DEFINE_ERROR(WrongKind)
GFP_DEFINE_ERROR(NotEquivalent)
GFP_DEFINE_ERROR(NoValidEquivalent)
GFP_DEFINE_ERROR(IndexOrder)
GFP_DEFINE_ERROR(BadDivisor)
GFP_DEFINE_ERROR(DomainError)
GFP_DEFINE_ERROR(UnknownIdentity)
GFP_DEFINE_ERROR(BadTable)
GFP_DEFINE_ERROR(IndexTooLarge)

#undef GFP_DEFINE_ERROR

}  // namespace gfp
