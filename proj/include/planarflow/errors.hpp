#pragma once

#include <stdexcept>
#include <string>

namespace planarflow {

enum class Errc {
    DisconnectedGraph,
    NonPositiveCapacity,
    InvalidRotation,
    NotPlanarEmbedding,
    TerminalMissing,
    SelfLoopRejected,
    TerminalQuery,
    TerminalDeletion,
    NegativeWeight,
    NonPositiveDelta,
    NonPositiveC,
    SameDualVertex,
    BadParams,
    ParseError,
    OracleTooLarge,
    Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

} // namespace planarflow
