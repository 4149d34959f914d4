#pragma once

#include <stdexcept>
#include <string>

namespace reflat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define REFLAT_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                                \
      public:                                                                  \
        explicit Name(const std::string &what) : Error(#Name ": " + what) {}   \
    }

REFLAT_DEFINE_ERROR(OverflowError);
REFLAT_DEFINE_ERROR(ParseError);
REFLAT_DEFINE_ERROR(DegenerateInput);
REFLAT_DEFINE_ERROR(OriginNotInterior);
REFLAT_DEFINE_ERROR(NotIP);
REFLAT_DEFINE_ERROR(NotReflexive);
REFLAT_DEFINE_ERROR(NotSimplex);
REFLAT_DEFINE_ERROR(NotIPConfined);
REFLAT_DEFINE_ERROR(EmptyNewton);
REFLAT_DEFINE_ERROR(UnsupportedDimension);
REFLAT_DEFINE_ERROR(CorruptDatabase);
REFLAT_DEFINE_ERROR(VersionMismatch);
REFLAT_DEFINE_ERROR(DimensionMismatch);
REFLAT_DEFINE_ERROR(SampleTooLarge);

#undef REFLAT_DEFINE_ERROR

} // namespace reflat
