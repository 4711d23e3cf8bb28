#include "hyperstrength/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hyperstrength/hypergraph.hpp"
#include "hyperstrength/mincut.hpp"
#include "hyperstrength/ordering.hpp"
#include "hyperstrength/sparsifier.hpp"
#include "hyperstrength/strength.hpp"
#include "hyperstrength/windowing.hpp"

namespace hyperstrength::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kDefaultStrengthLimit = 64;
constexpr std::size_t kDefaultVerifyLimit = 16;

std::string fmt_real(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lg", x);
  return buf;
}

std::string side_list(const VertexSet& side) {
  std::string out;
  for (VertexId v : side.members()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  }
  return out;
}

std::vector<VertexId> one_indexed(const VertexSet& side) {
  auto m = side.members();
  for (auto& v : m) ++v;
  return m;
}

Hypergraph load(const RunConfig& config) {
  if (config.input == "-") return read_hypergraph(std::cin);
  return read_hypergraph_file(config.input);
}

// Writes to --output when given, otherwise to out.
template <class Fn>
void emit(const RunConfig& config, std::ostream& out, Fn&& write) {
  if (config.output.empty()) {
    write(out);
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + config.output + " for writing");
  write(file);
}

SamplingParams sampling(const RunConfig& config) {
  SamplingParams params;
  params.epsilon = config.epsilon;
  params.d = config.d;
  params.seed = config.seed;
  params.source = config.mode == "exact" ? StrengthSource::exact : StrengthSource::approx;
  params.oracle_limit = config.oracle_limit.value_or(kDefaultStrengthLimit);
  return params;
}

int cmd_stats(const RunConfig& config, std::ostream& out) {
  auto h = load(config);
  if (config.json) {
    json doc = {{"n", h.num_vertices()}, {"m", h.num_edges()},   {"p", h.size()},
                {"r", h.rank()},         {"W", h.total_weight()}, {"kappa", components(h).count}};
    out << doc.dump() << '\n';
  } else {
    out << "n=" << h.num_vertices() << " m=" << h.num_edges() << " p=" << h.size()
        << " r=" << h.rank() << " W=" << h.total_weight() << '\n';
  }
  return kOk;
}

int cmd_certificate(const RunConfig& config, std::ostream& out) {
  auto h = load(config);
  auto weights = certificate_weighted(h, config.k);
  auto cert = certificate_hypergraph(h, weights);
  emit(config, out, [&](std::ostream& o) {
    if (config.json) {
      json edges = json::array();
      for (EdgeId e = 0; e < h.num_edges(); ++e) {
        if (weights[e] > 0) edges.push_back({{"edge", e + 1}, {"weight", weights[e]}});
      }
      o << json{{"k", config.k}, {"n", h.num_vertices()}, {"edges", edges}}.dump() << '\n';
    } else {
      write_hypergraph(o, cert, h.is_unit_weight() ? WeightFormat::unweighted
                                                   : WeightFormat::weighted);
    }
  });
  return kOk;
}

int cmd_strengths(const RunConfig& config, std::ostream& out) {
  auto h = load(config);
  std::vector<Weight> gamma;
  std::vector<std::uint32_t> level(h.num_edges(), 0);
  std::optional<WindowedEstimate> windowed;
  if (config.mode == "exact") {
    gamma = strength_exact(h, config.oracle_limit.value_or(kDefaultStrengthLimit));
  } else if (h.is_unit_weight() && !config.window_debug) {
    auto s = estimate_strengths(h, 1);
    gamma = std::move(s.gamma);
    level = std::move(s.level);
  } else {
    windowed = windowed_estimate_report(h);
    gamma = windowed->strengths.gamma;
    level = windowed->strengths.level;
  }
  const long double cost = strength_cost(h, gamma);
  const long double bound = cost_bound(h);

  emit(config, out, [&](std::ostream& o) {
    if (config.json) {
      json doc;
      doc["mode"] = config.mode;
      doc["gamma"] = gamma;
      doc["level"] = level;
      doc["cost"] = static_cast<double>(cost);
      doc["bound"] = static_cast<double>(bound);
      if (windowed && config.window_debug) {
        doc["rough"] = windowed->rough;
        json ws = json::array();
        for (std::size_t i = 0; i < windowed->windows.intervals.size(); ++i) {
          const auto& iv = windowed->windows.intervals[i];
          const auto& st = windowed->stats[i];
          ws.push_back({{"lo", iv.lo},
                        {"hi", iv.hi},
                        {"edges", st.edges},
                        {"vertices", st.vertices},
                        {"weight", st.total_weight},
                        {"levels", st.levels}});
        }
        doc["windows"] = ws;
      }
      o << doc.dump() << '\n';
      return;
    }
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      o << e + 1 << ' ' << gamma[e] << ' ' << level[e] << '\n';
    }
    o << "cost=" << fmt_real(cost) << " bound=" << fmt_real(bound) << " mode=" << config.mode
      << '\n';
    if (windowed && config.window_debug) {
      for (EdgeId e = 0; e < h.num_edges(); ++e) {
        o << "# rough edge=" << e + 1 << " d=" << windowed->rough[e]
          << " window=" << windowed->windows.window_of[e] << '\n';
      }
      for (std::size_t i = 0; i < windowed->windows.intervals.size(); ++i) {
        const auto& iv = windowed->windows.intervals[i];
        const auto& st = windowed->stats[i];
        o << "# window=" << i << " lo=" << iv.lo << " hi=" << iv.hi << " edges=" << st.edges
          << " vertices=" << st.vertices << " weight=" << st.total_weight
          << " levels=" << st.levels << '\n';
      }
    }
  });
  return kOk;
}

void print_report(const CutApproxReport& report, bool as_json, std::ostream& o) {
  if (as_json) {
    json cuts = json::array();
    for (const auto& c : report.cuts) {
      cuts.push_back({{"cut_mask", c.mask},
                      {"true_w", c.true_weight},
                      {"sparse_w", static_cast<double>(c.sparse_weight)},
                      {"rel_err", c.rel_error}});
    }
    o << json{{"epsilon", report.epsilon},
              {"max_rel_err", report.max_rel_error},
              {"passed", report.passed},
              {"cuts", cuts}}
             .dump()
      << '\n';
    return;
  }
  for (const auto& c : report.cuts) {
    o << c.mask << ' ' << c.true_weight << ' ' << fmt_real(c.sparse_weight) << ' '
      << fmt_real(c.rel_error) << '\n';
  }
  o << "max_rel_err=" << fmt_real(report.max_rel_error) << " epsilon=" << report.epsilon
    << " passed=" << (report.passed ? "true" : "false") << '\n';
}

int cmd_sparsify(const RunConfig& config, std::ostream& out) {
  auto h = load(config);
  auto params = sampling(config);
  auto result = sparsify(h, params);
  std::optional<CutApproxReport> report;
  if (config.verify) {
    report = verify_cut_approx(h, result, config.epsilon,
                               config.oracle_limit.value_or(kDefaultVerifyLimit), config.threads);
  }
  emit(config, out, [&](std::ostream& o) { write_sparsifier(o, result); });
  if (report) print_report(*report, config.json, out);
  return kOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  auto h = load(config);
  const std::size_t limit = config.oracle_limit.value_or(kDefaultVerifyLimit);
  if (h.num_vertices() > limit) {
    throw OracleLimitExceeded("cut verification refused: n = " +
                              std::to_string(h.num_vertices()) + " exceeds limit " +
                              std::to_string(limit));
  }
  auto result = sparsify(h, sampling(config));
  auto report = verify_cut_approx(h, result, config.epsilon, limit, config.threads);
  emit(config, out, [&](std::ostream& o) { print_report(report, config.json, o); });
  return kOk;
}

int cmd_mincut(const RunConfig& config, std::ostream& out) {
  auto h = load(config);
  CutResult cut = config.approx ? mincut_approx(h, config.epsilon, sampling(config))
                                : mincut_exact(h);
  emit(config, out, [&](std::ostream& o) {
    if (config.json) {
      o << json{{"value", cut.value}, {"side", one_indexed(cut.side)}, {"approx", config.approx}}
               .dump()
        << '\n';
    } else {
      o << "value=" << cut.value << '\n' << "side=" << side_list(cut.side) << '\n';
    }
  });
  return kOk;
}

}  // namespace

void RunConfig::validate() const {
  if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("--epsilon must lie in (0, 1)");
  if (!(d >= 1)) throw std::invalid_argument("--d must be at least 1");
  if (k < 1) throw std::invalid_argument("--k must be positive");
  if (threads < 1) throw std::invalid_argument("--threads must be positive");
  if (mode != "approx" && mode != "exact") {
    throw std::invalid_argument("--mode must be approx or exact");
  }
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    if (config.subcommand == "stats") return cmd_stats(config, out);
    if (config.subcommand == "certificate") return cmd_certificate(config, out);
    if (config.subcommand == "strengths") return cmd_strengths(config, out);
    if (config.subcommand == "sparsify") return cmd_sparsify(config, out);
    if (config.subcommand == "verify") return cmd_verify(config, out);
    if (config.subcommand == "mincut") return cmd_mincut(config, out);
    err << "error: unknown subcommand '" << config.subcommand << "'\n";
    return kInvalid;
  } catch (const OracleLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kRefused;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Approximate hypergraph edge strengths, cut sparsifiers and mincuts",
               "hyperstrength"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::uint64_t> seed_flag;
  app.add_option("-o,--output", config.output, "Write the main result here instead of stdout");
  app.add_option("--epsilon", config.epsilon, "Sparsifier accuracy, in (0, 1)");
  app.add_option("--d", config.d, "Failure exponent of the sampling probabilities");
  app.add_option("--seed", seed_flag, "Sampling seed (overrides HYPERSTRENGTH_SEED)");
  app.add_option("--mode", config.mode, "Strength source: approx or exact");
  app.add_option("--k", config.k, "Certificate threshold");
  app.add_flag("--verify", config.verify, "Enumerate all cuts after sparsifying");
  app.add_flag("--approx", config.approx, "Approximate mincut through a sparsifier");
  app.add_flag("--window-debug", config.window_debug, "Dump rough strengths and windows");
  app.add_flag("--json", config.json, "Emit one JSON document");
  app.add_option("--threads", config.threads, "Worker threads for cut enumeration");
  app.add_option("--oracle-limit", config.oracle_limit,
                 "Vertex limit for exact strengths (64) and cut enumeration (16)");

  const std::vector<std::pair<const char*, const char*>> subcommands = {
      {"stats", "Print n, m, p, r and total weight"},
      {"certificate", "Write the weighted k-sparse certificate"},
      {"strengths", "Per-edge strength estimates and their cost"},
      {"sparsify", "Sample a cut sparsifier"},
      {"mincut", "Global mincut, exact or approximate"},
      {"verify", "Sparsify and compare every cut"}};
  for (const auto& [name, help] : subcommands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", config.input, "Hypergraph file, '-' for stdin");
    sub->callback([&config, n = std::string(name)] { config.subcommand = n; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kInvalid;
  }

  if (seed_flag) {
    config.seed = *seed_flag;
  } else if (const char* env = std::getenv("HYPERSTRENGTH_SEED")) {
    std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), config.seed);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      err << "error: HYPERSTRENGTH_SEED is not an unsigned integer\n";
      return kInvalid;
    }
  }
  return execute(config, out, err);
}

}  // namespace hyperstrength::cli
