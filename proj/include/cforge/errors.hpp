#pragma once

#include <stdexcept>
#include <string>

namespace cforge {

// Base for every error the library raises. Each failure mode the callers
// may want to distinguish gets its own subclass.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CFORGE_DEFINE_ERROR(Name)                  \
  class Name : public Error {                      \
   public:                                         \
    explicit Name(const std::string& what)         \
        : Error(std::string(#Name ": ") + what) {} \
  }

CFORGE_DEFINE_ERROR(InvalidParams);
CFORGE_DEFINE_ERROR(DegenerateFace);
CFORGE_DEFINE_ERROR(InvalidFace);
CFORGE_DEFINE_ERROR(EmptyDual);
CFORGE_DEFINE_ERROR(NotStronglyConnected);
CFORGE_DEFINE_ERROR(RefusedSize);
CFORGE_DEFINE_ERROR(OutOfRegime);
CFORGE_DEFINE_ERROR(InvalidTrackedComplex);
CFORGE_DEFINE_ERROR(NotRecorded);
CFORGE_DEFINE_ERROR(VerificationFailed);
CFORGE_DEFINE_ERROR(FormatError);

#undef CFORGE_DEFINE_ERROR

}  // namespace cforge
