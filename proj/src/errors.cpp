#include "slp/errors.hpp"

namespace slp {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotArtinian: return "NotArtinian";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NonCommutingMaps: return "NonCommutingMaps";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::ZeroModule: return "ZeroModule";
    case ErrorKind::InvalidM: return "InvalidM";
    case ErrorKind::InvalidExponent: return "InvalidExponent";
    case ErrorKind::InvalidForm: return "InvalidForm";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotSLP: return "NotSLP";
    case ErrorKind::NotTotallyOrdered: return "NotTotallyOrdered";
    case ErrorKind::InconsistentDecomposition: return "InconsistentDecomposition";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    }
    return "Error";
}

}  // namespace slp
