#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hyperstrength/hypergraph.hpp"

namespace hyperstrength {

enum class StrengthSource { approx, exact };

struct SamplingParams {
  double epsilon = 0.1;
  double d = 2.0;
  std::uint64_t seed = 0;
  StrengthSource source = StrengthSource::approx;
  std::size_t oracle_limit = 64;

  /// Throws std::invalid_argument unless 0 < epsilon < 1 and d >= 1.
  void validate() const;
};

/// 3((d + 2) ln n + r) / epsilon^2: strengths at or below this are kept with
/// probability one.
double sampling_threshold(std::size_t n, std::size_t rank, const SamplingParams& params);

/// p_e = min(threshold / gamma(e), 1).
std::vector<double> sampling_probabilities(const Hypergraph& h, std::span<const Weight> gamma,
                                           const SamplingParams& params);

/// Strengths used for sampling: the approximate estimate (windowed for
/// weighted input) or the exact oracle, per params.source.
std::vector<Weight> sampling_strengths(const Hypergraph& h, const SamplingParams& params);

/// Number of the w unit copies of edge e that survive independent sampling
/// with probability p. Drawn from the Philox stream keyed by (seed, e) with
/// geometric skips, so the cost is O(w min(p, 1 - p)) and the answer does not
/// depend on which other edges are sampled.
Weight sample_copies(Weight w, double p, std::uint64_t seed, EdgeId e);

struct SparsifierResult {
  std::vector<double> probability;  // per input edge
  std::vector<Weight> kept_copies;  // per input edge; 0 when dropped
  std::vector<EdgeId> kept;         // input ids of surviving edges
  Hypergraph structure;             // surviving edges with their input weights
  std::vector<double> weights;      // kept_copies / probability, per surviving edge

  /// Sum of p_e over input edges.
  double expected_kept() const;
  /// Sum of w(e) p_e over input edges: the expected number of surviving copies.
  double expected_copies(const Hypergraph& input) const;
};

/// Importance sampling with the given strengths. Each input edge is read as
/// w(e) unit copies; surviving copies carry weight 1 / p_e, so a surviving
/// edge weighs kept_copies / p_e (w(e) / p_e when every copy survives).
SparsifierResult sparsify(const Hypergraph& h, std::span<const Weight> gamma,
                          const SamplingParams& params);
SparsifierResult sparsify(const Hypergraph& h, const SamplingParams& params);

/// Weighted text format with weights written to 12 significant digits.
void write_sparsifier(std::ostream& out, const SparsifierResult& result);

/// Sparsifier cut weight for a bitmask side, in long double.
long double sparse_cut_weight_mask(const Hypergraph& structure, std::span<const double> weights,
                                   std::uint64_t mask);

struct CutComparison {
  std::uint64_t mask = 0;  // side; the last vertex is always outside
  Weight true_weight = 0;
  long double sparse_weight = 0;
  double rel_error = 0;
};

struct CutApproxReport {
  std::vector<CutComparison> cuts;
  double max_rel_error = 0;
  double epsilon = 0;
  bool passed = true;
};

/// Compares all 2^(n-1) - 1 cuts. Refuses (OracleLimitExceeded) when n exceeds
/// n_limit. A cut of true weight zero counts as exact only if the sparse side
/// is zero too. The mask range is split across threads; the report does not
/// depend on the thread count.
CutApproxReport verify_cut_approx(const Hypergraph& h, const Hypergraph& sparse,
                                  std::span<const double> sparse_weights, double epsilon,
                                  std::size_t n_limit = 16, std::size_t threads = 1);
CutApproxReport verify_cut_approx(const Hypergraph& h, const SparsifierResult& sparse,
                                  double epsilon, std::size_t n_limit = 16,
                                  std::size_t threads = 1);

}  // namespace hyperstrength
