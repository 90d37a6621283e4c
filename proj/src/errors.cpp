#include "ellfib/errors.hpp"

namespace ellfib {

const char* kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::ZeroDivisorInModulus: return "ZeroDivisorInModulus";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NonHomogeneous: return "NonHomogeneous";
    case ErrorKind::DegenerateModel: return "DegenerateModel";
    case ErrorKind::WeightUnderflow: return "WeightUnderflow";
    case ErrorKind::NonSquarefreeTwist: return "NonSquarefreeTwist";
    case ErrorKind::OddTwistImbalance: return "OddTwistImbalance";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::InconsistentOrders: return "InconsistentOrders";
    case ErrorKind::NotStarred: return "NotStarred";
    case ErrorKind::DegeneratePoints: return "DegeneratePoints";
    case ErrorKind::InvalidMap: return "InvalidMap";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::CatalogCorrupt: return "CatalogCorrupt";
    }
    return "Error";
}

}  // namespace ellfib
