#pragma once

#include <stdexcept>
#include <string>

namespace pw {

enum class Errc {
    AsymmetricDarts,
    Disconnected,
    NonPlanarEmbedding,
    LoopEdge,
    UnknownVertex,
    OrderOutOfDomain,
    SecondUndefined,
    BadGadgetParameter,
    HypothesisNotMet,
    OrderTooLarge,
    TruncatedStream,
    BadHeader,
    InvalidNeighborByte,
};

inline const char* errc_name(Errc e) {
    switch (e) {
    case Errc::AsymmetricDarts: return "AsymmetricDarts";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NonPlanarEmbedding: return "NonPlanarEmbedding";
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::OrderOutOfDomain: return "OrderOutOfDomain";
    case Errc::SecondUndefined: return "SecondUndefined";
    case Errc::BadGadgetParameter: return "BadGadgetParameter";
    case Errc::HypothesisNotMet: return "HypothesisNotMet";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::TruncatedStream: return "TruncatedStream";
    case Errc::BadHeader: return "BadHeader";
    case Errc::InvalidNeighborByte: return "InvalidNeighborByte";
    }
    return "?";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace pw
