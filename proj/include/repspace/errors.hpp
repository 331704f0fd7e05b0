#pragma once

#include <stdexcept>
#include <string>

namespace repspace
{

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

#define REPSPACE_DEFINE_ERROR(Name)                                                     \
    class Name : public Error                                                           \
    {                                                                                   \
    public:                                                                             \
        explicit Name(const std::string& what) : Error(std::string(#Name ": ") + what)  \
        {                                                                               \
        }                                                                               \
    }

/// d_k * d_{k+1} != 0 in a chain complex.
REPSPACE_DEFINE_ERROR(CompositionNotZero);
REPSPACE_DEFINE_ERROR(DimensionMismatch);
REPSPACE_DEFINE_ERROR(ActionInvalid);
REPSPACE_DEFINE_ERROR(MissingBasepoint);
REPSPACE_DEFINE_ERROR(InvalidSimplicialSet);
REPSPACE_DEFINE_ERROR(NotPrime);
REPSPACE_DEFINE_ERROR(CacheCorrupt);
REPSPACE_DEFINE_ERROR(ResourceGuard);
REPSPACE_DEFINE_ERROR(UnknownSpace);
REPSPACE_DEFINE_ERROR(Unsupported);
REPSPACE_DEFINE_ERROR(NotAlmostCommuting);
REPSPACE_DEFINE_ERROR(BadBasePair);
REPSPACE_DEFINE_ERROR(TypeMismatch);
REPSPACE_DEFINE_ERROR(NotCommutingInSO3);
REPSPACE_DEFINE_ERROR(NonIntegral);

#undef REPSPACE_DEFINE_ERROR

} // namespace repspace
