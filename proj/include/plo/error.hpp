#pragma once

#include <stdexcept>
#include <string>

namespace plo {

enum class ErrorCode {
    MalformedLine,
    DuplicateEdge,
    Disconnected,
    EmbeddingInconsistent,
    EulerViolation,
    EdgeInTree,
    InconsistentEmbedding,
    NoBalancedEdge,
    LabelAbsent,
    BadVertex,
    BadRange,
    BadIndex,
    BadConfig,
    IoError,
    FormatError,
    VerificationFailed,
};

const char* to_string(ErrorCode code);

/*
 * Single exception type for the library; callers switch on code().
 */
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace plo
