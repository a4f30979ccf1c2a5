#pragma once

#include <stdexcept>
#include <string>

namespace latcom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cayley-table validation failures; messages name the violating element/triple.
struct NoIdentity : Error { using Error::Error; };
struct NotClosed : Error { using Error::Error; };
struct MissingInverse : Error { using Error::Error; };
struct NotAssociative : Error { using Error::Error; };

struct OrderCapExceeded : Error { using Error::Error; };
struct InvalidAction : Error { using Error::Error; };
struct InvalidSpec : Error { using Error::Error; };
struct NoSuchK : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ArgumentDomain : Error { using Error::Error; };
struct CoprimalityRequired : Error { using Error::Error; };
struct ClassConstancyViolation : Error { using Error::Error; };
struct SearchBoundExceeded : Error { using Error::Error; };
struct UnknownSuite : Error { using Error::Error; };
struct JobCapExceeded : Error { using Error::Error; };

} // namespace latcom
