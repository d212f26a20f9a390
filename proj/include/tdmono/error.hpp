#pragma once

#include <stdexcept>
#include <string>

namespace tdmono {

// Base for every error the library raises. `kind()` is a stable identifier
// used by the CLI diagnostics and by tests.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define TDMONO_DEFINE_ERROR(Name)                                           \
    class Name : public Error {                                            \
    public:                                                                \
        explicit Name(const std::string& message) : Error(#Name, message) {} \
    };

TDMONO_DEFINE_ERROR(DimensionMismatch)
TDMONO_DEFINE_ERROR(CompositionNotZero)
TDMONO_DEFINE_ERROR(NotChainCompatible)
TDMONO_DEFINE_ERROR(NotSquare)
TDMONO_DEFINE_ERROR(NotSymmetric)
TDMONO_DEFINE_ERROR(SchemaError)
TDMONO_DEFINE_ERROR(StructureError)
TDMONO_DEFINE_ERROR(MissingIncidence)
TDMONO_DEFINE_ERROR(DegreeOutOfRange)
TDMONO_DEFINE_ERROR(InvalidFan)
TDMONO_DEFINE_ERROR(TorsionInToricChow)
TDMONO_DEFINE_ERROR(NotAmple)
TDMONO_DEFINE_ERROR(NTooSmall)
TDMONO_DEFINE_ERROR(LoopRejected)
TDMONO_DEFINE_ERROR(Disconnected)
TDMONO_DEFINE_ERROR(GraphFormatError)

#undef TDMONO_DEFINE_ERROR

} // namespace tdmono
