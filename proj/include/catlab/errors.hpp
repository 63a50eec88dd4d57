#pragma once

#include <stdexcept>
#include <string>

namespace catlab {

/// Base class for all library errors.
struct CatlabError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- construction / input errors ---
struct ParseError : CatlabError { using CatlabError::CatlabError; };
struct MismatchedVariables : CatlabError { using CatlabError::CatlabError; };
struct ZeroPolynomial : CatlabError { using CatlabError::CatlabError; };
struct DegreeOutOfRange : CatlabError { using CatlabError::CatlabError; };
struct AmbientMismatch : CatlabError { using CatlabError::CatlabError; };
struct IndexOutOfRange : CatlabError { using CatlabError::CatlabError; };
struct LengthMismatch : CatlabError { using CatlabError::CatlabError; };
struct EvenSocleUnsupported : CatlabError { using CatlabError::CatlabError; };
struct GenericityFailure : CatlabError { using CatlabError::CatlabError; };

// --- certification pipeline errors ---
struct NotInRankLocus : CatlabError { using CatlabError::CatlabError; };
struct HypothesisViolated : CatlabError { using CatlabError::CatlabError; };

/// A step of the certified Hilbert-function chain failed.  The underlying
/// mathematics guarantees the chain, so this always indicates a bug.
struct InternalChainBroken : CatlabError { using CatlabError::CatlabError; };

struct NoDehomogenizerFound : CatlabError { using CatlabError::CatlabError; };
struct NotReducedError : CatlabError { using CatlabError::CatlabError; };
struct UndeterminedError : CatlabError { using CatlabError::CatlabError; };
struct SolveFailure : CatlabError { using CatlabError::CatlabError; };
struct ApproximateModeUnsupported : CatlabError { using CatlabError::CatlabError; };
struct SpanViolation : CatlabError { using CatlabError::CatlabError; };

} // namespace catlab
