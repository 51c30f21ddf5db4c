#include "poramsey/error.hpp"

namespace poramsey {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotReflexive: return "NotReflexive";
    case Errc::NotAntisymmetric: return "NotAntisymmetric";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::CyclicInput: return "CyclicInput";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::LevelOutOfRange: return "LevelOutOfRange";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::SubsetTooSmall: return "SubsetTooSmall";
    case Errc::DegenerateQuery: return "DegenerateQuery";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::ImproperModulus: return "ImproperModulus";
    case Errc::TooSmall: return "TooSmall";
    case Errc::ModulusMismatch: return "ModulusMismatch";
    case Errc::NoProperElements: return "NoProperElements";
    case Errc::NoNontrivialIdeals: return "NoNontrivialIdeals";
    case Errc::ImproperDeterminant: return "ImproperDeterminant";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::WidthLimitExceeded: return "WidthLimitExceeded";
    case Errc::Overflow: return "Overflow";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownTheoremId: return "UnknownTheoremId";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string & detail) :
    std::runtime_error(std::string(errc_name(code)) + ": " + detail),
    code_(code)
{
}

} // namespace poramsey
