#pragma once

#include <stdexcept>
#include <string>

namespace ellfib {

enum class ErrorKind {
    ZeroDivisorInModulus,
    FieldMismatch,
    Parse,
    NonHomogeneous,
    DegenerateModel,
    WeightUnderflow,
    NonSquarefreeTwist,
    OddTwistImbalance,
    NotMinimal,
    InconsistentOrders,
    NotStarred,
    DegeneratePoints,
    InvalidMap,
    InexactDivision,
    Unsupported,
    CatalogCorrupt,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind k, const std::string& msg)
        : std::runtime_error(std::string(kind_name(k)) + ": " + msg), kind_(k) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// carries the nontrivial common factor found while inverting
class ZeroDivisor : public Error {
public:
    ZeroDivisor(std::string witness)
        : Error(ErrorKind::ZeroDivisorInModulus, "modulus is reducible, common factor " + witness),
          witness_(std::move(witness)) {}
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

}  // namespace ellfib
