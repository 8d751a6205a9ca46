#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "k2t/errors.hpp"
#include "k2t/extremal.hpp"
#include "k2t/graph.hpp"
#include "k2t/graph6.hpp"
#include "k2t/minor.hpp"
#include "k2t/records.hpp"
#include "k2t/search.hpp"
#include "k2t/spectral.hpp"
#include "k2t/verify.hpp"

namespace k2t::cli {

namespace {

constexpr std::size_t kBatch = 1 << 16;

struct GraphSource {
  std::vector<std::string> graphs;
  std::string input;
};

void add_graph_source(CLI::App* sub, GraphSource& src) {
  sub->add_option("-g,--graph", src.graphs, "graph6 string (repeatable)");
  sub->add_option("-i,--input", src.input, "file of graph6 lines")->check(CLI::ExistingFile);
}

// Feeds every graph named on the command line, else every line of the
// input file, else every line of stdin.
void for_each_graph(const GraphSource& src, std::istream& in, const std::function<void(Graph)>& sink) {
  if (!src.graphs.empty()) {
    for (const std::string& s : src.graphs) sink(parse_graph6(s));
    return;
  }
  if (!src.input.empty()) {
    std::ifstream file(src.input);
    if (!file) throw PreconditionError("cannot open " + src.input);
    read_graph6_stream(file, sink);
    return;
  }
  read_graph6_stream(in, sink);
}

std::string branch_sets_field(const MinorWitness& w) {
  std::string out;
  for (std::size_t a = 0; a < w.branch_sets.size(); ++a) {
    if (a > 0) out += ';';
    for (std::size_t i = 0; i < w.branch_sets[a].size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(w.branch_sets[a][i]);
    }
  }
  return out;
}

void emit_record(std::ostream& out, const SearchRecord& r, const std::string& format) {
  out << (format == "jsonl" ? to_jsonl(r) : to_csv_row(r)) << '\n';
}

Graph local_start(const std::string& kind, std::int64_t t, std::int64_t n, std::uint64_t seed,
                  const std::string& start_graph) {
  const auto order = static_cast<std::size_t>(n);
  if (kind == "star") return star_graph(order);
  if (kind == "ft") return build_F(t, n);
  if (kind == "fan") return join(complete_graph(1), path_graph(order - 1));
  if (kind == "tree") {
    // Random recursive tree; modular reduction keeps output identical across
    // standard libraries.
    std::mt19937_64 rng(seed);
    Graph g(order);
    for (VertexId v = 1; v < order; ++v) g.add_edge(v, static_cast<VertexId>(rng() % v));
    return g;
  }
  return parse_graph6(start_graph);
}

int exhaustive(std::int64_t t, std::optional<std::int64_t> n, bool builtin, bool all, std::size_t jobs,
               const std::string& format, const GraphSource& src, std::istream& in, std::ostream& out,
               std::ostream& err) {
  ArgmaxAccumulator total(t);
  std::size_t skipped = 0;
  std::vector<Graph> batch;

  auto flush = [&] {
    offer_batch(total, batch, jobs);
    batch.clear();
  };
  auto take = [&](Graph g) {
    if (n && g.order() != static_cast<std::size_t>(*n)) {
      throw PreconditionError("input graph of order " + std::to_string(g.order()) + " but --n " +
                              std::to_string(*n));
    }
    if (!all && !is_connected(g)) {
      ++skipped;
      return;
    }
    batch.push_back(std::move(g));
    if (batch.size() >= kBatch) flush();
  };

  if (builtin) {
    if (!n) throw PreconditionError("--builtin needs --n");
    for (Graph& g : enumerate_graphs(static_cast<std::size_t>(*n), !all)) take(std::move(g));
  } else {
    for_each_graph(src, in, take);
  }
  flush();

  const ExhaustiveResult result = std::move(total).finish();
  if (format == "csv") out << kSearchCsvHeader << '\n';
  for (const SearchRecord& r : result.argmax) emit_record(out, r, format);
  err << "scanned " << result.scanned << ", admissible " << result.admissible << ", skipped " << skipped
      << " disconnected, argmax " << result.argmax.size() << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral extremal toolkit for K_{2,t}-minor-free graphs", "k2t"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "k2t 0.1.0");
  std::string output_path;
  app.add_option("-o,--output", output_path, "write results to this file instead of stdout");

  std::int64_t t = 0;
  std::int64_t n = 0;
  GraphSource src;

  auto* construct = app.add_subcommand("construct", "graph6 of F_t(n)");
  construct->add_option("--t", t, "block size")->required();
  construct->add_option("--n", n, "order")->required();

  auto* mu = app.add_subcommand("mu", "spectral radius of input graphs or of F_t(n)");
  bool exact = false;
  double tol = kDefaultTolerance;
  auto* mu_t = mu->add_option("--t", t, "block size");
  auto* mu_n = mu->add_option("--n", n, "order");
  mu_t->needs(mu_n);
  mu_n->needs(mu_t);
  mu->add_flag("--exact", exact, "largest cubic root instead of an eigensolve")->needs(mu_t);
  mu->add_option("--tol", tol, "residual tolerance")->check(CLI::PositiveNumber);
  add_graph_source(mu, src);

  auto* bnd = app.add_subcommand("bounds", "upper, lower and (t=3) K_{2,3} bounds as CSV");
  bnd->add_option("--t", t, "t")->required();
  bnd->add_option("--n", n, "order")->required();

  auto* minor = app.add_subcommand("minor", "K_{2,t} or arbitrary minor containment per input graph");
  bool witness = false;
  std::string pattern;
  auto* minor_t = minor->add_option("--t", t, "test for K_{2,t}");
  auto* minor_p = minor->add_option("--pattern", pattern, "graph6 of the pattern");
  minor_t->excludes(minor_p);
  minor->add_flag("--witness", witness, "always construct branch sets");
  add_graph_source(minor, src);

  auto* search = app.add_subcommand("search", "extremal search");
  search->require_subcommand(1);
  auto* exh = search->add_subcommand("exhaustive", "argmax of mu over K_{2,t}-minor-free graphs");
  std::optional<std::int64_t> exh_n;
  bool builtin = false;
  bool all = false;
  std::size_t jobs = 1;
  std::string format = "csv";
  exh->add_option("--t", t, "t")->required();
  exh->add_option("--n", exh_n, "order (required with --builtin)");
  exh->add_flag("--builtin", builtin, "generate graphs internally (n <= 8)");
  exh->add_flag("--all", all, "include disconnected graphs");
  exh->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  exh->add_option("--format", format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
  add_graph_source(exh, src);

  auto* loc = search->add_subcommand("local", "hill climbing on mu from a start graph");
  std::string start = "star";
  std::string start_graph;
  std::uint64_t seed = 1;
  std::size_t max_steps = 1000;
  loc->add_option("--t", t, "t")->required();
  loc->add_option("--n", n, "order")->required();
  loc->add_option("--start", start, "star, ft, fan, tree or graph")
      ->check(CLI::IsMember({"star", "ft", "fan", "tree", "graph"}));
  loc->add_option("--start-graph", start_graph, "graph6 start when --start graph");
  loc->add_option("--seed", seed, "seed for --start tree");
  loc->add_option("--max-steps", max_steps, "step cap");
  loc->add_option("--format", format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));

  auto* aud = app.add_subcommand("audit", "inequality checks C1..C7; exit 1 if an applicable check fails");
  std::optional<std::int64_t> ft_n;
  std::string audit_format = "table";
  aud->add_option("--t", t, "t")->required();
  aud->add_option("--ft", ft_n, "audit F_t(n) for this n instead of reading graphs");
  aud->add_option("--format", audit_format, "table or jsonl")->check(CLI::IsMember({"table", "jsonl"}));
  add_graph_source(aud, src);

  auto* sweep = app.add_subcommand("sweep", "grid of exact mu against the bounds, as CSV");
  std::int64_t t_min = 2;
  std::int64_t t_max = 6;
  std::int64_t n_min = 3;
  std::int64_t n_max = 100;
  sweep->add_option("--t-min", t_min, "smallest t")->check(CLI::Range(2, 1 << 20));
  sweep->add_option("--t-max", t_max, "largest t")->check(CLI::Range(2, 1 << 20));
  sweep->add_option("--n-min", n_min, "smallest n");
  sweep->add_option("--n-max", n_max, "largest n");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return 2;
  }

  std::ofstream file;
  if (!output_path.empty()) {
    file.open(output_path);
    if (!file) {
      err << "k2t: cannot write " << output_path << '\n';
      return 2;
    }
  }
  std::ostream& sink = output_path.empty() ? out : file;

  try {
    if (*construct) {
      sink << write_graph6(build_F(t, n)) << '\n';
    } else if (*mu) {
      if (*mu_t) {
        sink << format_real(exact ? ft_mu_exact(t, n) : spectral_radius(build_F(t, n), tol).mu) << '\n';
      } else {
        for_each_graph(src, in, [&](Graph g) { sink << format_real(spectral_radius(g, tol).mu) << '\n'; });
      }
    } else if (*bnd) {
      const BoundSet b = bounds(t, n);
      sink << "t,n,upper,lower,ysh,lower_in_range\n"
           << t << ',' << n << ',' << format_real(b.upper) << ',' << format_real(b.lower) << ','
           << (b.ysh ? format_real(*b.ysh) : std::string{}) << ',' << (b.lower_in_range ? "true" : "false")
           << '\n';
    } else if (*minor) {
      if (!*minor_t && !*minor_p) throw PreconditionError("minor needs --t or --pattern");
      std::optional<Graph> h;
      if (*minor_p) h = parse_graph6(pattern);
      sink << "graph6,verdict" << (witness ? ",branch_sets" : "") << '\n';
      for_each_graph(src, in, [&](Graph g) {
        const MinorWitness w = h ? has_minor(g, *h) : k2t_minor_test(g, static_cast<int>(t), witness);
        sink << write_graph6(g) << ',' << to_string(w.verdict);
        if (witness) sink << ',' << branch_sets_field(w);
        sink << '\n';
      });
    } else if (*exh) {
      return exhaustive(t, exh_n, builtin, all, jobs, format, src, in, sink, err);
    } else if (*loc) {
      if (start == "graph" && start_graph.empty()) throw PreconditionError("--start graph needs --start-graph");
      if (n < 1) throw DomainError("--n must be positive");
      const Graph g = local_start(start, t, n, seed, start_graph);
      const SearchRecord r = local_search(t, n, g, max_steps);
      if (format == "csv") sink << kSearchCsvHeader << '\n';
      emit_record(sink, r, format);
    } else if (*aud) {
      bool ok = true;
      auto check = [&](Graph g) {
        const AuditReport report = audit(g, static_cast<int>(t));
        ok = ok && report.all_applicable_pass();
        const std::string g6 = write_graph6(g);
        if (audit_format == "jsonl") {
          sink << to_jsonl(report, g6);
        } else {
          sink << "graph " << g6 << '\n' << to_table(report);
        }
      };
      if (ft_n) {
        check(build_F(t, *ft_n));
      } else {
        for_each_graph(src, in, check);
      }
      return ok ? 0 : 1;
    } else if (*sweep) {
      if (t_min > t_max) throw DomainError("--t-min exceeds --t-max");
      sink << "t,n,s,mu_exact,upper,lower,gap_upper,equality\n";
      for (std::int64_t tt = t_min; tt <= t_max; ++tt) {
        for (std::int64_t nn = std::max(n_min, tt + 1); nn <= n_max; ++nn) {
          const double m = ft_mu_exact(tt, nn);
          const double up = bound_upper(tt, nn);
          const std::int64_t s = split_params(tt, nn).s;
          sink << tt << ',' << nn << ',' << s << ',' << format_real(m) << ',' << format_real(up) << ','
               << format_real(bound_lower(tt, nn)) << ',' << format_real(up - m) << ','
               << (s == 0 ? "true" : "false") << '\n';
        }
      }
    }
  } catch (const ConvergenceError& e) {
    err << "k2t: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "k2t: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace k2t::cli
