#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace qsynth {

using Edge = std::pair<int, int>;

/// Interaction topology: n vertices (qubits) and a sorted list of
/// undirected edges (i, j) with i < j.
struct InteractionGraph {
    int n = 0;
    std::vector<Edge> edges;

    bool operator==(const InteractionGraph&) const = default;
};

/// One random XYZ problem: a coupling triple (Jx, Jy, Jz) per edge of the
/// graph, plus the scaling state used by the ramp schedules. `scale`
/// multiplies every coupling uniformly; `per_edge_scale` (when non-empty)
/// additionally multiplies edge e by per_edge_scale[e].
struct ProblemInstance {
    InteractionGraph graph;
    std::vector<std::array<double, 3>> couplings; // one (Jx,Jy,Jz) per edge
    double scale = 1.0;
    std::vector<double> per_edge_scale; // empty means all 1
    std::uint64_t seed = 0;
    double j_max = 1.0;

    /// Effective multiplier for edge e: scale * per_edge_scale[e].
    double edge_scale(std::size_t e) const {
        return scale * (per_edge_scale.empty() ? 1.0 : per_edge_scale[e]);
    }
};

enum class Topology { Chain, Complete, EdgeList };

struct SamplerConfig {
    double j_max = 1.0;
    Topology topology = Topology::Chain;
    int n_max = 2;
    std::uint64_t seed = 0;
};

InteractionGraph build_chain(int n);
InteractionGraph build_complete(int n);

/// Normalizes pairs to i < j and sorts. Throws std::invalid_argument on
/// out-of-range or self-loop edges, and on duplicates after normalization.
InteractionGraph from_edge_list(int n, const std::vector<Edge>& pairs);

/// Draws each coupling component independently from the uniform
/// distribution on [-j_max, +j_max]. Deterministic for a fixed seed:
/// the generator is mt19937_64 seeded with cfg.seed, advanced one draw
/// per component in edge-major order with axes in (x, y, z) order, and
/// each 64-bit word is mapped to a double via (word >> 11) * 2^-53.
ProblemInstance sample_instance(const InteractionGraph& graph, const SamplerConfig& cfg);

/// Restriction of `inst` to vertices {0..m-1} and their induced edges,
/// preserving the parent's coupling values exactly. Requires 2 <= m <= n.
ProblemInstance induced_subinstance(const ProblemInstance& inst, int m);

} // namespace qsynth
