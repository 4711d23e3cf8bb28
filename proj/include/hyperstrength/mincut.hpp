#pragma once

#include <span>
#include <vector>

#include "hyperstrength/hypergraph.hpp"
#include "hyperstrength/sparsifier.hpp"

namespace hyperstrength {

template <class Scalar>
struct BasicCutResult {
  Scalar value{};
  VertexSet side;
};

using CutResult = BasicCutResult<Weight>;

/// Global mincut by repeated maximum adjacency phases: each phase records the
/// cut around the last vertex and merges the last two. O(n p log n).
///
/// A disconnected hypergraph gives value 0 with the component of vertex 0 as
/// the side. Throws std::invalid_argument when n < 2.
CutResult mincut_exact(const Hypergraph& h);

/// Same algorithm on the structure of h with real weights (one per edge).
BasicCutResult<double> mincut_exact(const Hypergraph& h, std::span<const double> weights);

/// Exhaustive search; ties go to the numerically smallest side mask, where the
/// last vertex is always outside the side. Refuses n > limit.
CutResult mincut_bruteforce(const Hypergraph& h, std::size_t limit = 20);

enum class MincutEngine { ordering, brute_force };

/// Exact strengths. Edges crossing a mincut of a connected piece get its
/// value; both sides are then solved recursively with that value as a floor.
/// Refuses n > limit.
std::vector<Weight> strength_exact(const Hypergraph& h, std::size_t limit = 64,
                                   MincutEngine engine = MincutEngine::ordering);

/// (1 + epsilon)-approximate mincut with high probability: sparsify at
/// epsilon / 3, solve exactly on the sample, then price the side on h. The
/// value is always a real cut of h.
CutResult mincut_approx(const Hypergraph& h, double epsilon, const SamplingParams& params);

}  // namespace hyperstrength
