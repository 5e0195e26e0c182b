#pragma once

#include <stdexcept>
#include <string>

namespace xprod {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidTable : Error { using Error::Error; };
struct OrderTooLarge : Error { using Error::Error; };
struct NotInvariant : Error { using Error::Error; };
struct NotSubgroup : Error { using Error::Error; };
struct BadExponent : Error { using Error::Error; };
struct ModeMismatch : Error { using Error::Error; };
struct ModulusMismatch : Error { using Error::Error; };
struct SystemMismatch : Error { using Error::Error; };
struct ActionNotTrivial : Error { using Error::Error; };
struct Twisted : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct BadBasis : Error { using Error::Error; };
struct EmptyP : Error { using Error::Error; };
struct DecompositionUnstable : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

}  // namespace xprod
