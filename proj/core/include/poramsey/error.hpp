#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace poramsey {

enum class Errc {
    InvalidArgument,
    NotReflexive,
    NotAntisymmetric,
    NotTransitive,
    CyclicInput,
    EmptySubset,
    DuplicateVertex,
    LevelOutOfRange,
    VertexOutOfRange,
    EmptyGraph,
    SizeLimitExceeded,
    SubsetTooSmall,
    DegenerateQuery,
    CapExceeded,
    NotCoprime,
    ImproperModulus,
    TooSmall,
    ModulusMismatch,
    NoProperElements,
    NoNontrivialIdeals,
    ImproperDeterminant,
    DimensionMismatch,
    WidthLimitExceeded,
    Overflow,
    ParseError,
    UnknownTheoremId,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// message names the offending vertex, pair, index or parameter.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string & detail);

    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace poramsey
