#pragma once

#include <stdexcept>
#include <string>

namespace tempest {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- distribution / numerics ---
struct GridTooNarrow : Error { using Error::Error; };
struct ProbabilityOutOfRange : Error { using Error::Error; };
struct OptimizerDiverged : Error { using Error::Error; };

// --- series / fitting ---
struct TooFewSamples : Error { using Error::Error; };
struct DegenerateSeries : Error { using Error::Error; };
struct NonStationaryFit : Error { using Error::Error; };

// --- reward-risk ---
struct ZeroDeviation : Error { using Error::Error; };
struct ZeroRisk : Error { using Error::Error; };
struct EmptyPath : Error { using Error::Error; };
struct EmptySample : Error { using Error::Error; };

// --- backtest ---
struct CalendarTooShort : Error { using Error::Error; };
struct TooFewAssets : Error { using Error::Error; };
struct MissingData : Error { using Error::Error; };

// --- data ingestion ---
struct ParseError : Error { using Error::Error; };
struct DuplicateRow : Error { using Error::Error; };
struct NonPositivePrice : Error { using Error::Error; };
struct NoRateAvailable : Error { using Error::Error; };

// --- regression ---
struct RankDeficientDesign : Error { using Error::Error; };

}  // namespace tempest
