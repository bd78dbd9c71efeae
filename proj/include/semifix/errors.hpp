#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace semifix {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

struct NegativeParameter : Error { using Error::Error; };
struct OutOfDomain : Error { using Error::Error; };

struct IndependenceViolated : Error { using Error::Error; };
struct UsualIndependenceViolated : Error { using Error::Error; };
struct QIndependenceViolated : Error { using Error::Error; };
struct P0NotNonnegative : Error { using Error::Error; };
struct SolveFailed : Error { using Error::Error; };
struct BadWeights : Error { using Error::Error; };

struct NormNotStrictlyConvex : Error { using Error::Error; };
struct NoCommonFixedPointWitness : Error { using Error::Error; };

struct BadSchedule : Error { using Error::Error; };
struct SNotInUnitInterval : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct DomainNotCompact : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct WordBudgetExceeded : Error { using Error::Error; };

// Kronecker search hit its candidate cap; carries whatever was found so far.
struct SearchBudgetExceeded : Error {
    SearchBudgetExceeded(const std::string& what, std::vector<std::int64_t> partial)
        : Error(what), partial_indices(std::move(partial)) {}
    std::vector<std::int64_t> partial_indices;
};

} // namespace semifix
