#include "hyperstrength/sparsifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "hyperstrength/mincut.hpp"
#include "hyperstrength/philox.hpp"
#include "hyperstrength/strength.hpp"
#include "hyperstrength/windowing.hpp"

namespace hyperstrength {

void SamplingParams::validate() const {
  if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!(d >= 1)) throw std::invalid_argument("d must be at least 1");
}

double sampling_threshold(std::size_t n, std::size_t rank, const SamplingParams& params) {
  params.validate();
  const double log_n = n > 0 ? std::log(static_cast<double>(n)) : 0.0;
  return 3.0 * ((params.d + 2.0) * log_n + static_cast<double>(rank)) /
         (params.epsilon * params.epsilon);
}

std::vector<double> sampling_probabilities(const Hypergraph& h, std::span<const Weight> gamma,
                                           const SamplingParams& params) {
  if (gamma.size() != h.num_edges()) throw std::invalid_argument("strength count mismatch");
  const double threshold = sampling_threshold(h.num_vertices(), h.rank(), params);
  std::vector<double> p(h.num_edges());
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (gamma[e] <= 0) throw std::invalid_argument("strengths must be positive");
    p[e] = std::min(threshold / static_cast<double>(gamma[e]), 1.0);
  }
  return p;
}

std::vector<Weight> sampling_strengths(const Hypergraph& h, const SamplingParams& params) {
  if (params.source == StrengthSource::exact) return strength_exact(h, params.oracle_limit);
  if (h.is_unit_weight()) return estimate_strengths(h, 1).gamma;
  return windowed_estimate(h).gamma;
}

namespace {

// Failures before the first success of a Bernoulli(q) sequence, clamped to
// cap. log_miss = log(1 - q).
Weight geometric_gap(UniformStream& rng, double log_miss, Weight cap) {
  const double gap = std::floor(std::log1p(-rng.next()) / log_miss);
  return gap >= static_cast<double>(cap) ? cap : static_cast<Weight>(gap);
}

// Successes among w Bernoulli(q) trials, q in (0, 1/2].
Weight count_hits(UniformStream& rng, Weight w, double q) {
  const double log_miss = std::log1p(-q);
  Weight hits = 0;
  Weight position = 0;
  while (true) {
    position += geometric_gap(rng, log_miss, w) + 1;
    if (position > w) return hits;
    ++hits;
  }
}

}  // namespace

Weight sample_copies(Weight w, double p, std::uint64_t seed, EdgeId e) {
  if (w < 0) throw std::invalid_argument("copy count must be non-negative");
  if (!(p >= 0)) throw std::invalid_argument("probability must be non-negative");
  if (p >= 1) return w;
  if (p == 0 || w == 0) return 0;
  UniformStream rng(seed, e);
  return p <= 0.5 ? count_hits(rng, w, p) : w - count_hits(rng, w, 1.0 - p);
}

double SparsifierResult::expected_kept() const {
  double total = 0;
  for (double p : probability) total += p;
  return total;
}

double SparsifierResult::expected_copies(const Hypergraph& input) const {
  double total = 0;
  for (EdgeId e = 0; e < input.num_edges(); ++e) {
    total += static_cast<double>(input.weight(e)) * probability[e];
  }
  return total;
}

SparsifierResult sparsify(const Hypergraph& h, std::span<const Weight> gamma,
                          const SamplingParams& params) {
  SparsifierResult out;
  out.probability = sampling_probabilities(h, gamma, params);
  out.kept_copies.assign(h.num_edges(), 0);
  std::vector<EdgeRecord> records;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const Weight copies = sample_copies(h.weight(e), out.probability[e], params.seed, e);
    out.kept_copies[e] = copies;
    if (copies == 0) continue;
    out.kept.push_back(e);
    auto vs = h.edge(e);
    records.push_back({{vs.begin(), vs.end()}, h.weight(e)});
    out.weights.push_back(static_cast<double>(static_cast<long double>(copies) /
                                              static_cast<long double>(out.probability[e])));
  }
  out.structure = Hypergraph(h.num_vertices(), std::move(records));
  return out;
}

SparsifierResult sparsify(const Hypergraph& h, const SamplingParams& params) {
  params.validate();
  auto gamma = sampling_strengths(h, params);
  return sparsify(h, gamma, params);
}

void write_sparsifier(std::ostream& out, const SparsifierResult& result) {
  const auto& s = result.structure;
  out << s.num_vertices() << ' ' << s.num_edges() << " 1\n";
  char buf[64];
  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    std::snprintf(buf, sizeof buf, "%.12g", result.weights[e]);
    out << buf;
    for (VertexId v : s.edge(e)) out << ' ' << v + 1;
    out << '\n';
  }
}

long double sparse_cut_weight_mask(const Hypergraph& structure, std::span<const double> weights,
                                   std::uint64_t mask) {
  long double total = 0;
  for (EdgeId e = 0; e < structure.num_edges(); ++e) {
    bool in = false, out = false;
    for (VertexId v : structure.edge(e)) ((mask >> v) & 1U ? in : out) = true;
    if (in && out) total += weights[e];
  }
  return total;
}

CutApproxReport verify_cut_approx(const Hypergraph& h, const Hypergraph& sparse,
                                  std::span<const double> sparse_weights, double epsilon,
                                  std::size_t n_limit, std::size_t threads) {
  const std::size_t n = h.num_vertices();
  if (n > std::min<std::size_t>(n_limit, 63)) {
    throw OracleLimitExceeded("cut verification refused: n = " + std::to_string(n) +
                              " exceeds limit " + std::to_string(n_limit));
  }
  if (sparse.num_vertices() != n) throw std::invalid_argument("vertex count mismatch");
  if (sparse_weights.size() != sparse.num_edges()) {
    throw std::invalid_argument("weight count mismatch");
  }
  CutApproxReport report;
  report.epsilon = epsilon;
  if (n < 2) return report;
  const std::uint64_t count = (std::uint64_t{1} << (n - 1)) - 1;
  report.cuts.resize(count);

  auto fill = [&](std::uint64_t first, std::uint64_t last) {
    for (std::uint64_t i = first; i < last; ++i) {
      CutComparison& c = report.cuts[i];
      c.mask = i + 1;
      c.true_weight = cut_weight_mask(h, c.mask);
      c.sparse_weight = sparse_cut_weight_mask(sparse, sparse_weights, c.mask);
      if (c.true_weight == 0) {
        c.rel_error = c.sparse_weight == 0 ? 0.0 : std::numeric_limits<double>::infinity();
      } else {
        c.rel_error = static_cast<double>(
            std::fabs(c.sparse_weight - static_cast<long double>(c.true_weight)) /
            static_cast<long double>(c.true_weight));
      }
    }
  };
  const std::uint64_t workers = std::clamp<std::uint64_t>(threads, 1, count);
  if (workers == 1) {
    fill(0, count);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (count + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t first = w * chunk;
      const std::uint64_t last = std::min(count, first + chunk);
      if (first < last) pool.emplace_back(fill, first, last);
    }
    for (auto& t : pool) t.join();
  }
  for (const auto& c : report.cuts) report.max_rel_error = std::max(report.max_rel_error, c.rel_error);
  report.passed = report.max_rel_error <= epsilon;
  return report;
}

CutApproxReport verify_cut_approx(const Hypergraph& h, const SparsifierResult& sparse,
                                  double epsilon, std::size_t n_limit, std::size_t threads) {
  return verify_cut_approx(h, sparse.structure, sparse.weights, epsilon, n_limit, threads);
}

}  // namespace hyperstrength
