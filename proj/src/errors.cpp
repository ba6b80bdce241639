#include "planarflow/errors.hpp"

namespace planarflow {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DisconnectedGraph: return "DisconnectedGraph";
        case Errc::NonPositiveCapacity: return "NonPositiveCapacity";
        case Errc::InvalidRotation: return "InvalidRotation";
        case Errc::NotPlanarEmbedding: return "NotPlanarEmbedding";
        case Errc::TerminalMissing: return "TerminalMissing";
        case Errc::SelfLoopRejected: return "SelfLoopRejected";
        case Errc::TerminalQuery: return "TerminalQuery";
        case Errc::TerminalDeletion: return "TerminalDeletion";
        case Errc::NegativeWeight: return "NegativeWeight";
        case Errc::NonPositiveDelta: return "NonPositiveDelta";
        case Errc::NonPositiveC: return "NonPositiveC";
        case Errc::SameDualVertex: return "SameDualVertex";
        case Errc::BadParams: return "BadParams";
        case Errc::ParseError: return "ParseError";
        case Errc::OracleTooLarge: return "OracleTooLarge";
        case Errc::Internal: return "Internal";
    }
    return "UnknownError";
}

} // namespace planarflow
