// expander-growth: command-line front end for the expander library.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "expander/bounds.hpp"
#include "expander/error.hpp"
#include "expander/generators.hpp"
#include "expander/graph.hpp"
#include "expander/growth.hpp"
#include "expander/hallknuth.hpp"
#include "expander/random.hpp"
#include "expander/spectral.hpp"
#include "expander/triangulation.hpp"

#ifndef EXPANDER_VERSION
#define EXPANDER_VERSION "unknown"
#endif

namespace {

using namespace expander;

enum ExitCode { kOk = 0, kUsage = 1, kInput = 2, kConvergence = 3, kConstruction = 4 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string g_command_line;

std::string fmt(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

// Output sink: a file when a path is given, standard output otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw InvalidInput("cannot open output file " + path);
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }
  bool is_stdout() const { return !file_; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void write_header(std::ostream& os, std::uint64_t seed) {
  os << "# expander-growth " << EXPANDER_VERSION << "\n";
  os << "# command: " << g_command_line << "\n";
  os << "# seed: " << seed << "\n";
}

Graph read_graph(const std::string& path) {
  if (path.empty() || path == "-") return load_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open input file " + path);
  return load_edge_list(in);
}

unsigned worker_count() {
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("EXPANDER_GROWTH_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || cap < 1) {
      throw UsageError("EXPANDER_GROWTH_THREADS must be a positive integer");
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(cap));
  }
  return threads;
}

// --lambda {auto|ramanujan|<value>}
struct LambdaPolicy {
  enum class Kind { computed, ramanujan, value } kind = Kind::ramanujan;
  double value = 0.0;

  static LambdaPolicy parse(const std::string& text) {
    LambdaPolicy p;
    if (text == "auto") {
      p.kind = Kind::computed;
    } else if (text == "ramanujan") {
      p.kind = Kind::ramanujan;
    } else {
      p.kind = Kind::value;
      std::size_t used = 0;
      try {
        p.value = std::stod(text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != text.size() || !(p.value >= 0)) {
        throw UsageError("--lambda expects auto, ramanujan or a non-negative number");
      }
    }
    return p;
  }

  std::string name() const {
    switch (kind) {
      case Kind::computed: return "computed";
      case Kind::ramanujan: return "ramanujan_bound";
      case Kind::value: return "explicit";
    }
    return "";
  }
};

void print_graph_summary(std::ostream& os, const Graph& g) {
  const double d_bar = g.num_vertices() ? 2.0 * g.num_edges() / g.num_vertices() : 0.0;
  os << "n=" << g.num_vertices() << " m=" << g.num_edges() << " d_bar=" << fmt(d_bar) << "\n";
}

void write_graph(const std::string& out, std::uint64_t seed, const Graph& g) {
  Sink sink(out);
  write_header(sink.os(), seed);
  store_edge_list(g, sink.os());
  print_graph_summary(sink.is_stdout() ? std::cerr : std::cout, g);
}

void write_table(const std::string& path, const std::vector<Triangulation>& tri, std::uint64_t seed) {
  if (path.empty()) return;
  Sink sink(path);
  write_header(sink.os(), seed);
  for (std::size_t i = 0; i < tri.size(); ++i) sink.os() << i << ": " << tri[i].to_string() << "\n";
}

// ---- gen ----------------------------------------------------------------

struct GenOptions {
  std::string out;
  std::string table;
  std::uint64_t seed = 1;
  std::uint32_t p = 13, q = 61;
  std::size_t n = 0;
  double prob = 0.0;
  std::uint64_t m = 0;
  int k = 6;
  std::string group = "cyclic";
};

void setup_gen(CLI::App& app, std::vector<std::function<void()>>& actions) {
  auto opt = std::make_shared<GenOptions>();
  auto* gen = app.add_subcommand("gen", "Generate a graph and write it as an edge list");
  gen->require_subcommand(1);
  const auto common = [opt](CLI::App* sub) {
    sub->add_option("--out,-o", opt->out, "Output path (default: standard output)");
    sub->add_option("--seed", opt->seed, "Random seed");
  };

  auto* lps = gen->add_subcommand("lps", "LPS Ramanujan Cayley graph X(p, q)");
  lps->add_option("--p", opt->p, "Prime p = 1 mod 4 (degree p + 1)")->required();
  lps->add_option("--q", opt->q, "Prime q = 1 mod 4")->required();
  common(lps);
  lps->callback([opt, &actions] {
    actions.push_back([opt] { write_graph(opt->out, opt->seed, lps_graph(opt->p, opt->q).graph); });
  });

  auto* gnp = gen->add_subcommand("gnp", "Erdos-Renyi G(n, p)");
  gnp->add_option("--n", opt->n, "Vertex count")->required();
  gnp->add_option("--prob,--p", opt->prob, "Edge probability")->required();
  common(gnp);
  gnp->callback([opt, &actions] {
    actions.push_back(
        [opt] { write_graph(opt->out, opt->seed, erdos_renyi_gnp(opt->n, opt->prob, opt->seed)); });
  });

  auto* gnm = gen->add_subcommand("gnm", "Erdos-Renyi G(n, m)");
  gnm->add_option("--n", opt->n, "Vertex count")->required();
  gnm->add_option("--m", opt->m, "Edge count")->required();
  common(gnm);
  gnm->callback([opt, &actions] {
    actions.push_back(
        [opt] { write_graph(opt->out, opt->seed, erdos_renyi_gnm(opt->n, opt->m, opt->seed)); });
  });

  auto* poly = gen->add_subcommand("polygon", "Flip graph of the convex k-gon");
  poly->add_option("--k", opt->k, "Polygon size (4..16)")->required();
  poly->add_option("--table", opt->table, "Also write the index -> triangulation table here");
  common(poly);
  poly->callback([opt, &actions] {
    actions.push_back([opt] {
      FlipGraph fg = polygon_flip_graph(opt->k);
      write_graph(opt->out, opt->seed, fg.graph);
      write_table(opt->table, fg.triangulations, opt->seed);
    });
  });

  auto* quot = gen->add_subcommand("polygon-quotient", "Flip graph modulo polygon symmetries");
  quot->add_option("--k", opt->k, "Polygon size (5..16)")->required();
  quot->add_option("--group", opt->group, "cyclic or dihedral")
      ->check(CLI::IsMember({"cyclic", "dihedral"}));
  quot->add_option("--table", opt->table, "Also write the orbit representatives here");
  common(quot);
  quot->callback([opt, &actions] {
    actions.push_back([opt] {
      const auto group = opt->group == "dihedral" ? PolygonSymmetry::dihedral : PolygonSymmetry::cyclic;
      QuotientFlipGraph qg = polygon_flip_quotient(opt->k, group);
      write_graph(opt->out, opt->seed, qg.graph);
      write_table(opt->table, qg.representatives, opt->seed);
    });
  });
}

// ---- spectral -----------------------------------------------------------

struct SpectralOptions {
  std::string in, out, method = "lanczos";
  double tol = 1e-6;
  std::size_t max_iter = 100000;
  std::uint64_t seed = 0;
};

void run_spectral(const SpectralOptions& o) {
  const Graph g = read_graph(o.in);
  SolverOptions so{o.tol, o.max_iter, o.seed,
                   o.method == "power" ? EigenMethod::power : EigenMethod::lanczos};
  const SpectralSummary s = spectral_summary(g, so);
  Sink sink(o.out);
  auto& os = sink.os();
  write_header(os, o.seed);
  os << "# method: " << o.method << " tol: " << fmt(o.tol) << "\n";
  os << "n,m,d_bar,sigma2,lambda,mu,two_sqrt_dm1,is_ramanujan,iterations,residual\n";
  os << s.n << ',' << s.m << ',' << fmt(s.stats.d_bar) << ',' << fmt(s.stats.sigma2) << ','
     << (s.lambda ? fmt(*s.lambda) : "") << ',' << fmt(s.mu) << ',' << fmt(s.two_sqrt_dm1) << ','
     << (s.ramanujan ? (*s.ramanujan ? "true" : "false") : "") << ',' << s.iterations << ','
     << fmt(s.tol_achieved) << "\n";
}

void setup_spectral(CLI::App& app, std::vector<std::function<void()>>& actions) {
  auto o = std::make_shared<SpectralOptions>();
  auto* sub = app.add_subcommand("spectral", "Extreme nontrivial spectrum of a graph");
  sub->add_option("input,--in,-i", o->in, "Edge-list file (default: standard input)");
  sub->add_option("--out,-o", o->out, "Output CSV (default: standard output)");
  sub->add_option("--tol", o->tol, "Residual tolerance (relative to d for A)")->check(CLI::PositiveNumber);
  sub->add_option("--max-iter", o->max_iter, "Matrix-vector product budget per end of the spectrum");
  sub->add_option("--seed", o->seed, "Start-vector seed");
  sub->add_option("--method", o->method, "Eigensolver: lanczos or power")
      ->check(CLI::IsMember({"lanczos", "power"}));
  sub->callback([o, &actions] { actions.push_back([o] { run_spectral(*o); }); });
}

// ---- grow ---------------------------------------------------------------

struct GrowOptions {
  std::string in, out, estimates, start = "random", lambda = "ramanujan";
  std::uint64_t seed = 1;
  std::size_t snapshot_every = 1000, estimate_every = 1000, samples = 100;
  bool padded = false, census = false;
  double tol = 1e-6;
  std::size_t max_iter = 100000;
};

void run_grow(const GrowOptions& o) {
  if (o.snapshot_every == 0 || o.estimate_every == 0) throw UsageError("intervals must be positive");
  if (o.samples == 0 && !o.census) throw UsageError("--samples must be positive");
  const LambdaPolicy policy = LambdaPolicy::parse(o.lambda);
  const Graph g = read_graph(o.in);
  const std::size_t n = g.num_vertices();
  if (n == 0) throw InvalidInput("the graph has no vertices");

  Vertex start = 0;
  if (o.start == "random") {
    Rng pick = make_rng(o.seed ^ 0x5DEECE66DULL);
    start = static_cast<Vertex>(uniform_below(pick, n));
  } else {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(o.start, &used);
      if (used != o.start.size()) throw UsageError("");
      start = static_cast<Vertex>(v);
      if (v >= n) throw InvalidInput("start vertex " + o.start + " out of range");
    } catch (const std::logic_error&) {
      throw UsageError("--start expects a vertex index or 'random'");
    }
  }

  const DegreeStats st = degree_stats(g);
  const double d = st.d_bar;
  double lambda = 0.0;
  switch (policy.kind) {
    case LambdaPolicy::Kind::computed:
      // For an irregular graph the normalized bound mu scales to mu * d_bar.
      lambda = st.regular ? regular_spectrum(g, {o.tol, o.max_iter, 0, EigenMethod::lanczos}).lambda
                          : normalized_spectrum(g, {o.tol, o.max_iter, 0, EigenMethod::lanczos}).mu * d;
      break;
    case LambdaPolicy::Kind::ramanujan:
      lambda = 2.0 * std::sqrt(std::max(d - 1.0, 0.0));
      break;
    case LambdaPolicy::Kind::value:
      lambda = policy.value;
      break;
  }
  const bool bounds_defined = lambda < d;

  Sink traj(o.out);
  std::string est_path = o.estimates;
  if (est_path.empty() && !traj.is_stdout()) est_path = o.out + ".estimates.csv";
  std::ostringstream est;
  std::size_t est_rows = 0;

  write_header(traj.os(), o.seed);
  traj.os() << "# start: " << start << (o.start == "random" ? " (random)" : "") << "\n";
  traj.os() << "t,processed,queued,unvisited,pi,kappa,upsilon\n";

  GrowthProcess proc(g, start, o.seed);
  const double nd = static_cast<double>(n);
  const auto snapshot = [&](std::size_t t) {
    traj.os() << t << ',' << proc.processed_count() << ',' << proc.queued_count() << ','
              << proc.unvisited_count() << ',' << fmt(proc.processed_count() / nd) << ','
              << fmt(proc.queued_count() / nd) << ',' << fmt(proc.unvisited_count() / nd) << "\n";
  };
  const auto estimate = [&](std::size_t t) {
    const double w = static_cast<double>(proc.processed_count() + proc.queued_count());
    double e = 0.0;
    if (!proc.finished()) {
      e = o.census ? static_cast<double>(boundary_census(proc))
                   : sample_boundary_estimate(proc, o.samples, o.seed ^ (0x9E3779B97F4A7C15ULL * t));
    }
    std::string lower = "nan", upper = "nan";
    if (bounds_defined) {
      try {
        const SizeInterval iv = vertex_count_bounds(w, e, d, lambda);
        lower = fmt(iv.lower);
        upper = fmt(iv.upper);
      } catch (const InvalidInput&) {
        // A sampled e(U, W) can overshoot (d + lambda)|W| on irregular graphs.
      }
    }
    est << t << ',' << static_cast<std::size_t>(w) << ',' << fmt(e) << ',' << lower << ',' << upper
        << "\n";
    ++est_rows;
  };

  snapshot(0);
  std::size_t t = 0;
  std::size_t last_snapshot = 0;
  while (!proc.finished() && (!o.padded || t < n)) {
    proc.step();
    ++t;
    if (t % o.snapshot_every == 0) {
      snapshot(t);
      last_snapshot = t;
    }
    if (t % o.estimate_every == 0) estimate(t);
  }
  if (last_snapshot != t) {
    snapshot(t);
    last_snapshot = t;
  }
  if (o.padded) {
    for (std::size_t r = t + 1; r <= n; ++r) {
      if (r % o.snapshot_every == 0 || r == n) snapshot(r);
      if (r % o.estimate_every == 0) estimate(r);
    }
  }
  std::cout << "visited=" << proc.processed_count() << " of n=" << n
            << (proc.processed_count() >= std::pow(nd, 2.0 / 3.0) ? " (giant)" : " (small)") << "\n";

  if (est_rows == 0) return;
  std::unique_ptr<Sink> est_sink;
  std::ostream* eos = &traj.os();
  if (!est_path.empty()) {
    est_sink = std::make_unique<Sink>(est_path);
    eos = &est_sink->os();
    write_header(*eos, o.seed);
  } else {
    *eos << "\n# estimates\n";
  }
  *eos << "# lambda_policy: " << policy.name() << " lambda: " << fmt(lambda) << " d: " << fmt(d)
       << " boundary: " << (o.census ? "census" : "sampled " + std::to_string(o.samples)) << "\n";
  *eos << "t,W,eUW,lower,upper\n" << est.str();
}

void setup_grow(CLI::App& app, std::vector<std::function<void()>>& actions) {
  auto o = std::make_shared<GrowOptions>();
  auto* sub = app.add_subcommand("grow", "Run the randomized growth process with size estimates");
  sub->add_option("input,--in,-i", o->in, "Edge-list file (default: standard input)");
  sub->add_option("--out,-o", o->out, "Trajectory CSV (default: standard output)");
  sub->add_option("--estimates", o->estimates, "Estimates CSV (default: <out>.estimates.csv)");
  sub->add_option("--start", o->start, "Start vertex index or 'random'");
  sub->add_option("--seed", o->seed, "Random seed");
  sub->add_option("--snapshot-every", o->snapshot_every, "Steps between trajectory rows");
  sub->add_option("--estimate-every", o->estimate_every, "Steps between size estimates");
  sub->add_option("--samples", o->samples, "Queue samples per e(U, W) estimate");
  sub->add_flag("--census", o->census, "Use the exact e(U, W) instead of sampling");
  sub->add_option("--lambda", o->lambda, "auto, ramanujan or a value");
  sub->add_flag("--padded", o->padded, "Keep the clock running to step n after the queue empties");
  sub->add_option("--tol", o->tol, "Eigensolver tolerance for --lambda auto");
  sub->add_option("--max-iter", o->max_iter, "Eigensolver budget for --lambda auto");
  sub->callback([o, &actions] { actions.push_back([o] { run_grow(*o); }); });
}

// ---- bounds -------------------------------------------------------------

struct BoundsOptions {
  std::string out, lambda = "ramanujan";
  double d = 14.0;
  std::size_t points = 1001;
};

void write_curve(const BoundsOptions& o, const std::function<double(double)>& f,
                 const std::string& note) {
  if (o.points < 2) throw UsageError("--points must be at least 2");
  Sink sink(o.out);
  write_header(sink.os(), 0);
  sink.os() << "# " << note << "\n";
  sink.os() << "pi,value\n";
  for (std::size_t i = 0; i < o.points; ++i) {
    const double pi = static_cast<double>(i) / static_cast<double>(o.points - 1);
    sink.os() << fmt(pi) << ',' << fmt(f(pi)) << "\n";
  }
}

double curve_lambda(const BoundsOptions& o) {
  const LambdaPolicy p = LambdaPolicy::parse(o.lambda);
  if (p.kind == LambdaPolicy::Kind::computed) throw UsageError("--lambda auto needs a graph; use grow");
  if (p.kind == LambdaPolicy::Kind::ramanujan) return 2.0 * std::sqrt(std::max(o.d - 1.0, 0.0));
  return p.value;
}

void setup_bounds(CLI::App& app, std::vector<std::function<void()>>& actions) {
  auto o = std::make_shared<BoundsOptions>();
  auto* sub = app.add_subcommand("bounds", "Emit a bound or asymptotic curve on a grid");
  sub->require_subcommand(1);
  const auto common = [o](CLI::App* c, bool with_lambda) {
    c->add_option("--d", o->d, "Degree (real average degree allowed)");
    c->add_option("--out,-o", o->out, "Output CSV (default: standard output)");
    if (with_lambda) c->add_option("--lambda", o->lambda, "ramanujan or a value");
    c->add_option("--points", o->points, "Grid size over [0, 1]");
  };

  auto* prop1 = sub->add_subcommand("prop1", "Deterministic queue-density floor");
  common(prop1, true);
  prop1->callback([o, &actions] {
    actions.push_back([o] {
      const double l = curve_lambda(*o);
      write_curve(*o, [&](double pi) { return structural_queue_lower(pi, o->d, l); },
                  "structural_queue_lower d=" + fmt(o->d) + " lambda=" + fmt(l));
    });
  });

  auto* b = sub->add_subcommand("beta", "Expected queue-density lower bound");
  common(b, true);
  b->callback([o, &actions] {
    actions.push_back([o] {
      const double l = curve_lambda(*o);
      write_curve(*o, [&](double pi) { return beta(pi, o->d, l); },
                  "beta d=" + fmt(o->d) + " lambda=" + fmt(l));
    });
  });

  auto* er = sub->add_subcommand("er", "Asymptotic queue density on G(n, d/n)");
  common(er, false);
  er->callback([o, &actions] {
    actions.push_back([o] {
      write_curve(*o, [&](double pi) { return er_queue_density(pi, o->d); },
                  "er_queue_density d=" + fmt(o->d) + " delta0=" + fmt(giant_component_density(o->d)));
    });
  });

  auto* delta = sub->add_subcommand("delta0", "Giant-component density");
  delta->add_option("--d", o->d, "Average degree (> 1)");
  delta->add_option("--out,-o", o->out, "Output CSV (default: standard output)");
  delta->callback([o, &actions] {
    actions.push_back([o] {
      const double x = giant_component_density(o->d, 1e-15);
      Sink sink(o->out);
      write_header(sink.os(), 0);
      sink.os() << "d,delta0\n" << fmt(o->d) << ',' << fmt(x) << "\n";
    });
  });
}

// ---- hallknuth ----------------------------------------------------------

struct HallKnuthOptions {
  std::string out;
  int k = 8;
  std::size_t probes = 1000;
  std::uint64_t seed = 1;
};

void run_hallknuth(const HallKnuthOptions& o) {
  if (o.probes == 0) throw UsageError("--probes must be positive");
  const ReverseSearchTree tree(o.k);
  const auto probes = hk_probes(tree, o.probes, o.seed, worker_count());
  const auto means = running_means(probes);
  const HkEstimate s = summarize_probes(probes);
  Sink sink(o.out);
  auto& os = sink.os();
  write_header(os, o.seed);
  os << "# k: " << o.k << " triangulations: " << polygon_triangulation_count(o.k) << "\n";
  os << "probe_index,seed,estimate,depth,running_mean\n";
  for (std::size_t i = 0; i < probes.size(); ++i) {
    os << i << ',' << probes[i].seed << ',' << fmt(probes[i].estimate) << ',' << probes[i].depth << ','
       << fmt(means[i]) << "\n";
  }
  os << "# mean=" << fmt(s.mean) << ",stderr=" << fmt(s.standard_error) << ",probes=" << s.probes
     << "\n";
}

void setup_hallknuth(CLI::App& app, std::vector<std::function<void()>>& actions) {
  auto o = std::make_shared<HallKnuthOptions>();
  auto* sub = app.add_subcommand("hallknuth", "Hall-Knuth probes of the k-gon reverse-search tree");
  sub->add_option("--k", o->k, "Polygon size (4..16)")->required();
  sub->add_option("--probes", o->probes, "Number of probes");
  sub->add_option("--seed", o->seed, "Seed of probe 0; probe i uses seed + i");
  sub->add_option("--out,-o", o->out, "Output CSV (default: standard output)");
  sub->callback([o, &actions] { actions.push_back([o] { run_hallknuth(*o); }); });
}

// ---- ernumeric ----------------------------------------------------------

struct NumericOptions {
  std::string out;
  std::size_t n = 10000, runs = 1, every = 1;
  double d = 4.0;
  std::uint64_t seed = 1;
  bool per_run = false;
};

void run_ernumeric(const NumericOptions& o) {
  if (o.n == 0) throw UsageError("--n must be positive");
  if (!(o.d > 0.0 && o.d < static_cast<double>(o.n))) throw UsageError("need 0 < d < n");
  if (o.runs == 0 || o.every == 0) throw UsageError("--runs and --every must be positive");
  const bool keep = o.per_run || o.runs == 1;

  // Run r uses seed + r; integer sums make the merge order-independent.
  const unsigned threads = std::min<unsigned>(worker_count(), static_cast<unsigned>(o.runs));
  std::vector<std::vector<std::int64_t>> partial(threads, std::vector<std::int64_t>(o.n, 0));
  std::vector<std::vector<NumericStep>> kept(keep ? o.runs : 0);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t r = w; r < o.runs; r += threads) {
          auto steps = numeric_process(o.n, o.d, o.seed + r);
          for (std::size_t i = 0; i < o.n; ++i) partial[w][i] += steps[i].unvisited;
          if (keep) kept[r] = std::move(steps);
        }
      });
    }
  }

  Sink sink(o.out);
  auto& os = sink.os();
  write_header(os, o.seed);
  os << "# n: " << o.n << " d: " << fmt(o.d) << " runs: " << o.runs << "\n";
  os << "run,t,u_t,q_t,upsilon,expected_upsilon\n";
  const double nd = static_cast<double>(o.n);
  const double ratio = 1.0 - o.d / nd;
  const auto wanted = [&](std::size_t t) { return t % o.every == 0 || t == o.n; };
  for (std::size_t r = 0; r < kept.size(); ++r) {
    for (const NumericStep& s : kept[r]) {
      if (!wanted(s.t)) continue;
      os << r << ',' << s.t << ',' << s.unvisited << ',' << s.queued << ',' << fmt(s.unvisited / nd)
         << ',' << fmt(std::pow(ratio, static_cast<double>(s.t))) << "\n";
    }
  }
  for (std::size_t i = 0; i < o.n; ++i) {
    const std::size_t t = i + 1;
    if (!wanted(t)) continue;
    std::int64_t total = 0;
    for (const auto& p : partial) total += p[i];
    const double u = static_cast<double>(total) / static_cast<double>(o.runs);
    os << "mean," << t << ',' << fmt(u) << ',' << fmt(nd - static_cast<double>(t) - u) << ','
       << fmt(u / nd) << ',' << fmt(std::pow(ratio, static_cast<double>(t))) << "\n";
  }
}

void setup_ernumeric(CLI::App& app, std::vector<std::function<void()>>& actions) {
  auto o = std::make_shared<NumericOptions>();
  auto* sub = app.add_subcommand("ernumeric", "Simulate the binomial numeric process");
  sub->add_option("--n", o->n, "Population size");
  sub->add_option("--d", o->d, "Mean degree, 0 < d < n");
  sub->add_option("--runs", o->runs, "Independent runs (seed + index)");
  sub->add_option("--seed", o->seed, "Seed of run 0");
  sub->add_option("--every", o->every, "Emit every this many steps (and the last)");
  sub->add_flag("--per-run", o->per_run, "Also emit every run's trajectory");
  sub->add_option("--out,-o", o->out, "Output CSV (default: standard output)");
  sub->callback([o, &actions] { actions.push_back([o] { run_ernumeric(*o); }); });
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) {
    if (i) g_command_line += ' ';
    g_command_line += argv[i];
  }

  CLI::App app{"Vertex-count estimation for large graphs by randomized growth and spectral bounds"};
  app.set_version_flag("--version", std::string("expander-growth ") + EXPANDER_VERSION);
  app.require_subcommand(1);
  std::vector<std::function<void()>> actions;
  setup_gen(app, actions);
  setup_spectral(app, actions);
  setup_grow(app, actions);
  setup_bounds(app, actions);
  setup_hallknuth(app, actions);
  setup_ernumeric(app, actions);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    for (auto& action : actions) action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << "\n";
    return kConvergence;
  } catch (const ConstructionError& e) {
    std::cerr << "construction error: " << e.what() << "\n";
    return kConstruction;
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  }
  return kOk;
}
