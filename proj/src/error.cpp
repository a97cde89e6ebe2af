#include "plo/error.hpp"

namespace plo {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedLine: return "MalformedLine";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::EmbeddingInconsistent: return "EmbeddingInconsistent";
        case ErrorCode::EulerViolation: return "EulerViolation";
        case ErrorCode::EdgeInTree: return "EdgeInTree";
        case ErrorCode::InconsistentEmbedding: return "InconsistentEmbedding";
        case ErrorCode::NoBalancedEdge: return "NoBalancedEdge";
        case ErrorCode::LabelAbsent: return "LabelAbsent";
        case ErrorCode::BadVertex: return "BadVertex";
        case ErrorCode::BadRange: return "BadRange";
        case ErrorCode::BadIndex: return "BadIndex";
        case ErrorCode::BadConfig: return "BadConfig";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::FormatError: return "FormatError";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

}  // namespace plo
