#pragma once

#include <stdexcept>
#include <string>

namespace exnet {

enum class Err {
    InsufficientFunds,
    InsufficientHoldings,
    UnknownContract,
    NonPositivePriceOrVolume,
    UnknownOrder,
    NotOwner,
    UnknownPlayer,
    PricesDoNotSumTo100,
    OpenOrdersRemain,
    OutOfOrderTimestamp,
    DayOutOfRange,
    EmptyNetwork,
    IsolatedNode,
    NonPositiveSample,
    TooFewBins,
    SingularDesign,
    LengthMismatch,
    DegenerateConstantInput,
    UnassignedNode,
    FewerThanTwoDays,
    MissingLedger,
    InvalidScenario,
    BadFormat,
};

const char* err_name(Err e);

/// Single exception type for all domain errors; tests match on code().
class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

} // namespace exnet
