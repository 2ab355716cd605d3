// hyperboot: generate initial infections, run the K_k^(r) bootstrap
// process, verify the slow construction and scan its running time.
//
// Exit codes: 0 success, 1 verification failed, 2 bad parameters or
// input, 3 resource limit, 4 I/O failure.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperboot/hyperboot.hpp"

namespace {

using namespace hyperboot;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kResource = 3, kIo = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

EngineKind parse_engine(const std::string& s) { return s == "naive" ? EngineKind::naive : EngineKind::incremental; }

Backend parse_backend(const std::string& s) {
  if (s == "hashed") return Backend::hashed;
  if (s == "dense") return Backend::dense;
  return Backend::automatic;
}

std::vector<int> parse_n_list(const std::string& list, const std::string& range) {
  std::vector<int> out;
  auto to_int = [](const std::string& tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw InvalidInput("bad integer '" + tok + "'");
    return v;
  };
  if (!list.empty()) {
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty()) out.push_back(to_int(tok));
    }
  }
  if (!range.empty()) {
    std::vector<std::string> parts;
    std::stringstream ss(range);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    if (parts.size() < 2 || parts.size() > 3) throw InvalidInput("range must be a:b or a:b:step");
    const int lo = to_int(parts[0]), hi = to_int(parts[1]);
    const int step = parts.size() == 3 ? to_int(parts[2]) : 1;
    if (step <= 0) throw InvalidInput("range step must be positive");
    for (int v = lo; v <= hi; v += step) out.push_back(v);
  }
  return out;
}

std::string render_set(std::span<const VertexId> vs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
  os << '}';
  return os.str();
}

struct GenerateArgs {
  std::string construction;
  int n = 0;
  unsigned k = 0;
  unsigned r = 3;
  double p = 0.5;
  std::uint64_t seed = 0;
  unsigned middles = 0;
  bool with_seed = false;
  std::string out;
  std::string labels;
};

int cmd_generate(const GenerateArgs& a) {
  std::ofstream out = open_out(a.out);
  std::optional<std::ofstream> labels_out;
  if (!a.labels.empty()) {
    if (a.construction != "slow3") throw InvalidInput("--labels is only available for slow3");
    labels_out = open_out(a.labels);
  }
  std::optional<Hypergraph> g;
  if (a.construction == "slow3") {
    const LabeledConstruction c = slow3(a.n);
    if (labels_out) write_labels(*labels_out, c);
    g = c.g0;
  } else if (a.construction == "path") {
    if (a.n < 2) throw UnsupportedParameter("n must be >= 2");
    g = path_graph(unsigned(a.n));
  } else if (a.construction == "complete-minus-clique") {
    if (a.n < 0) throw UnsupportedParameter("n must be non-negative");
    g = complete_minus_clique(unsigned(a.n), a.k);
  } else if (a.construction == "beachball") {
    std::vector<VertexId> mids;
    for (unsigned i = 0; i < a.middles; ++i) mids.push_back(2 + i);
    Hypergraph b = beachball(0, 1, mids);
    if (a.with_seed) b.add_edge(canonical_edge({0, 1, mids.front()}, 3, b.vertex_count()));
    g = std::move(b);
  } else {  // random
    if (a.n < 0) throw UnsupportedParameter("n must be non-negative");
    g = random_hypergraph(a.r, unsigned(a.n), a.p, a.seed);
  }
  write_hypergraph(out, *g);
  if (!out) throw IoError("write to '" + a.out + "' failed");
  std::cout << "vertices=" << g->vertex_count() << " edges=" << g->edge_count() << '\n';
  return kOk;
}

struct RunArgs {
  std::string input;
  unsigned k = 0;
  std::string engine = "incremental";
  std::string trace;
  std::optional<std::uint64_t> max_rounds;
  bool no_witnesses = false;
  std::string backend = "auto";
  std::size_t budget_mib = 256;
};

int cmd_run(const RunArgs& a) {
  std::ifstream in(a.input);
  if (!in) throw IoError("cannot open '" + a.input + "' for reading");
  std::optional<std::ofstream> trace_out;
  if (!a.trace.empty()) trace_out = open_out(a.trace);

  const Hypergraph g0 = read_hypergraph(in);
  PercolationConfig cfg;
  cfg.k = a.k;
  cfg.engine = parse_engine(a.engine);
  cfg.max_rounds = a.max_rounds;
  cfg.record_witnesses = !a.no_witnesses;
  cfg.storage = StorageOptions{parse_backend(a.backend), a.budget_mib << 20};

  const auto start = std::chrono::steady_clock::now();
  const RunResult res = run(g0, cfg);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (trace_out) {
    write_trace(*trace_out, res, cfg.record_witnesses);
    if (!*trace_out) throw IoError("write to '" + a.trace + "' failed");
  }
  std::cout << "M=" << res.M << " percolated=" << (res.percolated ? "true" : "false")
            << " final_edges=" << res.final_edge_count << " rounds=" << res.rounds.size() << " wall_ms=" << ms;
  if (res.truncated) std::cout << " truncated=true";
  std::cout << '\n';
  return kOk;
}

struct VerifyArgs {
  std::string target;
  std::optional<int> n;
  std::string input;
  std::string e0;
  std::string engine = "incremental";
};

int cmd_verify(const VerifyArgs& a) {
  const EngineKind engine = parse_engine(a.engine);
  if (a.target == "sequence") {
    if (!a.n) throw InvalidInput("verify sequence needs --n");
    const SequenceDiff diff = check_sequence(*a.n, engine);
    std::cout << "matched " << diff.matched_prefix_len << '/' << diff.expected_len << '\n';
    if (diff.full_match()) return kOk;
    const SequenceMismatch& mm = *diff.first_mismatch;
    std::cout << "mismatch at round " << mm.round << ": expected "
              << (mm.expected ? render_set(mm.expected->vertices()) : std::string("nothing")) << " got [";
    for (std::size_t i = 0; i < mm.actual.size(); ++i) std::cout << (i ? " " : "") << render_set(mm.actual[i].vertices());
    std::cout << "]\n";
    return kVerifyFailed;
  }

  std::optional<Hypergraph> g0;
  Edge e0;
  if (a.n) {
    LabeledConstruction c = slow3(*a.n);
    e0 = c.e0;
    g0 = std::move(c.g0);
  } else {
    if (a.input.empty() || a.e0.empty()) throw InvalidInput("verify civilised needs --n, or --input with --e0");
    std::ifstream in(a.input);
    if (!in) throw IoError("cannot open '" + a.input + "' for reading");
    g0 = read_hypergraph(in);
    std::vector<VertexId> vs;
    for (int v : parse_n_list(a.e0, "")) {
      if (v < 0) throw InvalidEdge("negative vertex in --e0");
      vs.push_back(VertexId(v));
    }
    e0 = canonical_edge(std::move(vs), g0->uniformity(), g0->vertex_count());
  }
  const CivilisedReport rep = check_civilised(*g0, e0, engine);
  const bool conds[] = {rep.cond1_ok, rep.cond2_ok, rep.cond3_ok};
  for (int i = 0; i < 3; ++i) std::cout << "cond" << (i + 1) << ' ' << (conds[i] ? "PASS" : "FAIL") << '\n';
  std::cout << "T=" << rep.T << '\n';
  if (rep.first_violation) {
    const Violation& v = *rep.first_violation;
    std::cout << "first violation: condition " << v.condition << " at round " << v.round << ": " << v.detail << '\n';
    return kVerifyFailed;
  }
  return kOk;
}

struct ScanArgs {
  std::string n_list;
  std::string range;
  std::string csv;
  std::string engine = "incremental";
  unsigned jobs = 1;
};

int cmd_scan(const ScanArgs& a) {
  const std::vector<int> ns = parse_n_list(a.n_list, a.range);
  if (ns.empty()) throw InvalidInput("empty n range");
  std::ofstream out = open_out(a.csv);
  const auto rows = scaling_report(ns, parse_engine(a.engine), a.jobs);
  write_scaling_csv(out, rows);
  if (!out) throw IoError("write to '" + a.csv + "' failed");
  for (const ScalingRow& row : rows) std::cout << "n=" << row.n << " T=" << row.T << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K_k^(r) hypergraph bootstrap percolation engine"};
  app.require_subcommand(1, 1);
  const std::vector<std::string> engines{"naive", "incremental"};

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write an initial infection in hypergraph text format");
  generate->add_option("construction", gen.construction, "slow3 | path | complete-minus-clique | beachball | random")
      ->required()
      ->check(CLI::IsMember({"slow3", "path", "complete-minus-clique", "beachball", "random"}));
  generate->add_option("--n", gen.n, "Construction parameter / vertex count");
  generate->add_option("--k", gen.k, "Clique size (complete-minus-clique)");
  generate->add_option("--r", gen.r, "Uniformity (random)");
  generate->add_option("--p", gen.p, "Edge probability (random)");
  generate->add_option("--seed", gen.seed, "RNG seed (random)");
  generate->add_option("--middles", gen.middles, "Number of middle vertices (beachball)");
  generate->add_flag("--with-seed", gen.with_seed, "Also add {top, bottom, first middle} (beachball)");
  generate->add_option("-o,--out", gen.out, "Output hypergraph file")->required();
  generate->add_option("--labels", gen.labels, "Label sidecar output (slow3)");

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "Run the bootstrap process on a hypergraph file");
  run_cmd->add_option("input", run_args.input, "Hypergraph file")->required();
  run_cmd->add_option("--k", run_args.k, "Clique size")->required();
  run_cmd->add_option("--engine", run_args.engine)->check(CLI::IsMember(engines));
  run_cmd->add_option("--trace", run_args.trace, "JSON Lines trace output");
  run_cmd->add_option("--max-rounds", run_args.max_rounds);
  run_cmd->add_flag("--no-witnesses", run_args.no_witnesses, "Do not record witness sets");
  run_cmd->add_option("--backend", run_args.backend, "Edge membership store")
      ->check(CLI::IsMember({"auto", "hashed", "dense"}));
  run_cmd->add_option("--memory-budget-mib", run_args.budget_mib, "Budget for the dense store");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Check the slow construction");
  verify->add_option("target", ver.target, "civilised | sequence")
      ->required()
      ->check(CLI::IsMember({"civilised", "sequence"}));
  verify->add_option("--n", ver.n, "Construction parameter");
  verify->add_option("--input", ver.input, "Hypergraph file (civilised)");
  verify->add_option("--e0", ver.e0, "Distinguished edge as comma-separated vertices (civilised)");
  verify->add_option("--engine", ver.engine)->check(CLI::IsMember(engines));

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Tabulate running times of slow3(n)");
  scan_cmd->add_option("--n", scan.n_list, "Comma-separated n values");
  scan_cmd->add_option("--range", scan.range, "Inclusive range a:b[:step]");
  scan_cmd->add_option("--csv", scan.csv, "CSV output")->required();
  scan_cmd->add_option("--engine", scan.engine)->check(CLI::IsMember(engines));
  scan_cmd->add_option("--jobs", scan.jobs, "Concurrent runs")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*run_cmd) return cmd_run(run_args);
    if (*verify) return cmd_verify(ver);
    if (*scan_cmd) return cmd_scan(scan);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
