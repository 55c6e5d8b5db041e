#ifndef LOCLIB_ERRORS_HPP
#define LOCLIB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace loclib {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- field construction --
struct BadDegree : Error { using Error::Error; };
struct NonPrimitivePolynomial : Error { using Error::Error; };
struct DivideByZero : Error { using Error::Error; };

// -- matrix / code plumbing --
struct DimensionMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct TooManyErasures : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };

// -- bounds --
struct BadParams : Error { using Error::Error; };
struct RateConditionViolated : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };

// -- constructions --
struct NotApplicable : Error { using Error::Error; };
struct RealizationFailed : Error { using Error::Error; };
struct ProfileMismatch : Error { using Error::Error; };

}  // namespace loclib

#endif
