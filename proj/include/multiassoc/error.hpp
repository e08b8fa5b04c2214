#pragma once

#include <stdexcept>
#include <string>

namespace multiassoc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonRelevantEdge : Error { using Error::Error; };
struct UniquenessViolation : Error { using Error::Error; };
struct WrongInstance : Error { using Error::Error; };
struct NotACircuit : Error { using Error::Error; };
struct NotInSpan : Error { using Error::Error; };
struct DegenerateConfiguration : Error { using Error::Error; };
struct UnknownConfig : Error { using Error::Error; };
struct WrongDiagram : Error { using Error::Error; };

} // namespace multiassoc
