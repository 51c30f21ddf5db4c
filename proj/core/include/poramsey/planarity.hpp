#pragma once

#include "poramsey/graph.hpp"

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace poramsey {

enum class KuratowskiKind { K5, K33 };

/// A subgraph of the tested graph that is a subdivision of K5 or K3,3.
struct KuratowskiCertificate {
    KuratowskiKind kind = KuratowskiKind::K33;
    std::vector<Edge> edges;
    /// The five (K5) or six (K3,3) vertices of degree > 2 in the subdivision.
    /// For K3,3 the first three form one side.
    std::vector<Vertex> branch_vertices;
};

/// Cyclic neighbour order around every vertex.
using RotationSystem = std::vector<std::vector<Vertex>>;

struct PlanarityResult {
    bool planar = false;
    RotationSystem embedding;                          // filled when planar
    std::optional<KuratowskiCertificate> certificate; // filled when not planar
};

/// Complete planarity decision. Either certificate is re-checked with the
/// validators below before returning.
PlanarityResult is_planar(const Graph & g);

/// Traces faces of the rotation system and checks Euler's formula per
/// component; also checks each rotation lists exactly the vertex's neighbours.
bool validate_embedding(const Graph & g, const RotationSystem & rotation);

/// Classifies an edge set as a K5 or K3,3 subdivision lying inside g, or
/// nullopt if it is neither (or uses a non-edge of g).
std::optional<KuratowskiCertificate> classify_kuratowski_subgraph(const Graph & g, std::span<const Edge> edges);

bool validate_certificate(const Graph & g, const KuratowskiCertificate & certificate);

/// Builds the nine-edge certificate for a K3,3 sitting directly in g; throws
/// InvalidArgument when some cross pair is not an edge.
KuratowskiCertificate k33_certificate(const Graph & g, const std::array<Vertex, 3> & left,
    const std::array<Vertex, 3> & right);

} // namespace poramsey
