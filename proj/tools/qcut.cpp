// Copyright 2026 The qcut authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qcut/circuit.hpp"
#include "qcut/contraction.hpp"
#include "qcut/cutting.hpp"
#include "qcut/distributed.hpp"
#include "qcut/executor.hpp"
#include "qcut/graph.hpp"
#include "qcut/ordering.hpp"
#include "qcut/protocol.hpp"
#include "qcut/qaoa.hpp"
#include "qcut/tensor_network.hpp"
#include "qcut/types.hpp"

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double secs_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << body;
}

qcut::Circuit load_circuit(const std::string& path) {
  return qcut::parse_circuit(read_file(path));
}

// Loads a cut file and checks it was produced for this network.
qcut::CutSet load_cut(const std::string& path, const qcut::Graph& g) {
  qcut::CutFile f = qcut::parse_cut_json(read_file(path));
  std::string want = qcut::graph_hash(g);
  if (f.source_graph_hash != want) {
    throw std::runtime_error("cut file " + path +
                             " was built for a different network (hash " +
                             f.source_graph_hash + ", expected " + want + ")");
  }
  return f.edges;
}

json amplitude_json(qcut::cx a) { return json{{"re", a.real()}, {"im", a.imag()}}; }

void emit_report(const json& j, const std::string& out_path) {
  std::string body = j.dump(2) + "\n";
  std::cout << body;
  if (!out_path.empty()) write_file(out_path, body);
}

struct SweepRange {
  int lo = 0;
  int hi = 0;
};

SweepRange parse_sweep(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos) {
    throw std::runtime_error("expected LO..HI, got '" + text + "'");
  }
  SweepRange r;
  r.lo = std::stoi(text.substr(0, pos));
  r.hi = std::stoi(text.substr(pos + 2));
  if (r.lo < 0 || r.hi < r.lo) {
    throw std::runtime_error("bad sweep range '" + text + "'");
  }
  return r;
}

int cmd_gen_qaoa(int n, int degree, std::uint64_t seed, double gamma,
                 double beta, int layers, std::string z,
                 const std::string& out_circuit, const std::string& out_graph) {
  qcut::RegularGraph g = qcut::random_regular_graph(n, degree, seed);
  if (z.empty()) z = qcut::default_bitstring(n);
  qcut::Circuit c = qcut::qaoa_circuit(g, gamma, beta, layers, z);
  write_file(out_graph, qcut::emit_graph(g));
  write_file(out_circuit, qcut::emit_circuit(c));
  emit_report(json{{"v", 1},
                   {"n", n},
                   {"degree", degree},
                   {"seed", seed},
                   {"edges", g.edges.size()},
                   {"circuit", out_circuit},
                   {"graph", out_graph}},
              "");
  return 0;
}

int cmd_plan(const std::string& circuit_path, const std::string& cut_path,
             std::uint64_t seed, int restarts, int max_rank,
             const std::string& out_path) {
  qcut::Circuit c = load_circuit(circuit_path);
  qcut::TensorNetwork tn = qcut::build_network(c);
  qcut::Graph g = qcut::network_graph(tn);
  qcut::CutSet cut;
  if (!cut_path.empty()) cut = load_cut(cut_path, g);
  qcut::TensorNetwork sub =
      qcut::apply_cut(tn, cut, qcut::Assignment(cut.size(), 0));
  qcut::Graph gsub = qcut::network_graph(sub);
  qcut::BestOrderResult bo = qcut::best_order(gsub, restarts, seed);
  qcut::ContractionPlan plan = qcut::best_plan(sub, restarts, seed);
  qcut::CostReport cost = qcut::estimate_cost(plan);
  emit_report(json{{"v", 1},
                   {"qubits", c.n_qubits},
                   {"vertices", gsub.vertex_count()},
                   {"edges", gsub.edge_count()},
                   {"m", cut.size()},
                   {"width", bo.width},
                   {"peak_rank", cost.peak_rank},
                   {"cost_estimate", cost.cost_estimate},
                   {"data_bytes_peak", cost.data_bytes_peak},
                   {"bytes_peak", cost.bytes_peak},
                   {"within_guard", cost.peak_rank <= max_rank},
                   {"max_rank", max_rank}},
              out_path);
  return 0;
}

int cmd_cuts(const std::string& circuit_path, int cut_size, int population,
             int generations, std::uint64_t seed, int restarts,
             const std::string& out_path) {
  qcut::Circuit c = load_circuit(circuit_path);
  qcut::TensorNetwork tn = qcut::build_network(c);
  qcut::Graph g = qcut::network_graph(tn);
  qcut::GaParams params;
  params.M = cut_size;
  params.N = population;
  params.T = generations;
  params.seed = seed;
  params.fitness_restarts = restarts;
  qcut::GaResult r = qcut::ga_search(g, params);
  std::string body = qcut::dump_cut_json(r.cut, qcut::graph_hash(g), r.width,
                                         params, r.history);
  write_file(out_path, body);
  emit_report(json{{"v", 1},
                   {"m", cut_size},
                   {"width_found", r.width},
                   {"history", r.history},
                   {"edges", r.cut},
                   {"out", out_path}},
              "");
  return 0;
}

json timings_json(const qcut::RunReport& r) {
  json t = json::array();
  for (const auto& w : r.timings) {
    t.push_back({{"worker", w.worker}, {"secs", w.secs}, {"batches", w.batches}});
  }
  return t;
}

json report_json(const qcut::RunReport& r, const std::string& backend,
                 const qcut::JobSpec& job, bool timings) {
  json j{{"v", 1},
         {"backend", backend},
         {"amplitude", amplitude_json(r.amplitude)},
         {"jobs", r.jobs},
         {"m", job.cut.size()},
         {"peak_rank", job.plan.peak_rank},
         {"workers", r.workers},
         {"rounds", r.rounds},
         {"batches", r.batches},
         {"recomputed_batches", r.recomputed_batches}};
  if (timings) {
    j["timings"] = timings_json(r);
    j["wall_secs"] = r.wall_secs;
  }
  return j;
}

int cmd_run(const std::string& circuit_path, const std::string& cut_path,
            const std::string& backend, int workers,
            const std::string& listen, double timeout_secs,
            double connect_timeout_secs, std::uint64_t batch_size,
            std::uint64_t max_jobs, int max_rank, std::uint64_t seed,
            int restarts, bool no_timings, const std::string& sweep,
            int population, int generations, const std::string& out_path) {
  qcut::Circuit c = load_circuit(circuit_path);
  qcut::TensorNetwork tn = qcut::build_network(c);
  qcut::Graph g = qcut::network_graph(tn);

  if (!sweep.empty()) {
    SweepRange range = parse_sweep(sweep);
    json rows = json::array();
    qcut::CutSet prev;
    std::mt19937_64 warm_rng(qcut::mix_seed(seed, 0x577EE9ull));
    for (int m = range.lo; m <= range.hi; ++m) {
      qcut::GaParams params;
      params.M = m;
      params.N = population;
      params.T = generations;
      params.seed = seed;
      params.fitness_restarts = restarts;
      if (m == static_cast<int>(prev.size()) + 1 && m >= 1) {
        // Grow the previous best cut by one fresh edge; deleting more
        // edges never raises the true width, which keeps the sweep
        // monotone modulo heuristic noise.
        qcut::CutSet warm = prev;
        std::set<int> member(warm.begin(), warm.end());
        std::vector<int> ids;
        for (const auto& e : g.edges) {
          if (!member.count(e.id)) ids.push_back(e.id);
        }
        if (!ids.empty()) {
          warm.push_back(ids[warm_rng() % ids.size()]);
          std::sort(warm.begin(), warm.end());
          params.warm_start = warm;
        }
      }
      qcut::GaResult r = qcut::ga_search(g, params);
      prev = r.cut;
      json row{{"m", m}, {"width", r.width}, {"history", r.history},
               {"edges", r.cut}};
      std::uint64_t jobs = qcut::subnetwork_count(m);
      if (jobs > max_jobs) {
        row["contracted"] = false;
        row["skip_reason"] = std::to_string(jobs) + " jobs exceed --max-jobs " +
                             std::to_string(max_jobs);
      } else {
        qcut::JobSpec job = qcut::make_job(tn, r.cut, restarts, seed, max_rank);
        row["peak_rank"] = job.plan.peak_rank;
        if (job.plan.peak_rank > max_rank) {
          row["contracted"] = false;
          row["skip_reason"] = "peak rank " +
                               std::to_string(job.plan.peak_rank) +
                               " exceeds max rank " + std::to_string(max_rank);
        } else {
          auto t0 = Clock::now();
          qcut::cx amp = qcut::run_serial(job);
          row["contracted"] = true;
          row["amplitude"] = amplitude_json(amp);
          if (!no_timings) row["secs"] = secs_since(t0);
        }
      }
      rows.push_back(std::move(row));
    }
    emit_report(json{{"v", 1}, {"sweep", rows}}, out_path);
    return 0;
  }

  qcut::CutSet cut;
  if (!cut_path.empty()) cut = load_cut(cut_path, g);
  std::uint64_t jobs = qcut::subnetwork_count(static_cast<int>(cut.size()));
  if (jobs > max_jobs) {
    throw std::runtime_error(std::to_string(jobs) +
                             " jobs exceed --max-jobs " +
                             std::to_string(max_jobs));
  }
  qcut::JobSpec job = qcut::make_job(tn, cut, restarts, seed, max_rank);
  qcut::check_rank_guard(job.plan, max_rank);

  if (backend == "serial") {
    auto t0 = Clock::now();
    qcut::cx amp = qcut::run_serial(job);
    qcut::RunReport r;
    r.amplitude = amp;
    r.jobs = jobs;
    r.workers = 1;
    r.rounds = qcut::round_count(jobs, 1);
    r.batches = 1;
    r.wall_secs = secs_since(t0);
    r.timings = {qcut::WorkerTiming{0, r.wall_secs, 1}};
    emit_report(report_json(r, backend, job, !no_timings), out_path);
    return 0;
  }
  if (backend == "pool") {
    qcut::RunReport r = qcut::run_pool(job, workers, batch_size);
    emit_report(report_json(r, backend, job, !no_timings), out_path);
    return 0;
  }
  if (backend == "distributed") {
    auto [host, port] = qcut::parse_hostport(listen);
    qcut::MasterConfig cfg;
    cfg.host = host;
    cfg.port = port;
    cfg.workers = workers;
    cfg.batch_size = batch_size;
    cfg.timeout_secs = timeout_secs;
    cfg.connect_timeout_secs = connect_timeout_secs;
    cfg.on_listening = [](int p) {
      std::cout << json{{"v", 1}, {"event", "listening"}, {"port", p}}.dump()
                << std::endl;
    };
    qcut::RunReport r = qcut::run_distributed(cfg, job);
    emit_report(report_json(r, backend, job, !no_timings), out_path);
    return 0;
  }
  throw std::runtime_error("unknown backend '" + backend +
                           "' (serial, pool, distributed)");
}

int cmd_worker(const std::string& connect, int id, int slots) {
  auto [host, port] = qcut::parse_hostport(connect);
  qcut::WorkerConfig cfg;
  cfg.host = host;
  cfg.port = port;
  cfg.worker_id = id;
  cfg.slots = slots;
  qcut::run_worker(cfg);
  return 0;
}

int cmd_bench(int n, int degree, int samples, std::uint64_t seed_base,
              int cut_size, int population, int generations, int restarts,
              bool no_timings, const std::string& out_path) {
  json rows = json::array();
  double width_sum = 0;
  for (int i = 0; i < samples; ++i) {
    std::uint64_t seed = seed_base + static_cast<std::uint64_t>(i);
    qcut::RegularGraph rg = qcut::random_regular_graph(n, degree, seed);
    qcut::Circuit c =
        qcut::qaoa_circuit(rg, 0.6, 0.4, 1, qcut::default_bitstring(n));
    qcut::TensorNetwork tn = qcut::build_network(c);
    qcut::Graph g = qcut::network_graph(tn);

    auto t0 = Clock::now();
    qcut::BestOrderResult bo = qcut::best_order(g, restarts, seed);
    double order_secs = secs_since(t0);
    qcut::ContractionPlan plan = qcut::best_plan(tn, restarts, seed);

    json row{{"seed", seed},
             {"width", bo.width},
             {"peak_rank", plan.peak_rank},
             {"cost_estimate", plan.cost_estimate}};
    if (!no_timings) row["order_secs"] = order_secs;
    if (cut_size > 0) {
      qcut::GaParams params;
      params.M = cut_size;
      params.N = population;
      params.T = generations;
      params.seed = seed;
      params.fitness_restarts = restarts;
      auto g0 = Clock::now();
      qcut::GaResult r = qcut::ga_search(g, params);
      row["cut_width"] = r.width;
      row["cut_edges"] = r.cut;
      if (!no_timings) row["ga_secs"] = secs_since(g0);
      width_sum += r.width;
    } else {
      width_sum += bo.width;
    }
    rows.push_back(std::move(row));
  }
  emit_report(json{{"v", 1},
                   {"n", n},
                   {"degree", degree},
                   {"samples", samples},
                   {"mean_width", width_sum / samples},
                   {"rows", rows}},
              out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcut: single-amplitude quantum circuit simulation by "
               "tensor-network contraction with edge cutting"};
  app.require_subcommand(1);

  // gen-qaoa
  int n = 0, degree = 3, layers = 1;
  std::uint64_t seed = 1;
  double gamma = 0.6, beta = 0.4;
  std::string z, out_circuit = "qaoa.qc", out_graph = "qaoa.graph";
  auto* gen = app.add_subcommand("gen-qaoa",
                                 "Generate a random regular-graph QAOA "
                                 "circuit and its graph file");
  gen->add_option("--n", n, "qubit / vertex count")->required();
  gen->add_option("--degree", degree, "graph regularity degree");
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--gamma", gamma, "cost-layer angle");
  gen->add_option("--beta", beta, "mixer-layer angle");
  gen->add_option("--layers", layers, "QAOA depth p");
  gen->add_option("--z", z, "measured bitstring (default all zeros)");
  gen->add_option("--out-circuit", out_circuit, "circuit output path");
  gen->add_option("--out-graph", out_graph, "graph output path");

  // shared run/plan options
  std::string circuit_path, cut_path, out_path;
  int restarts = 4, max_rank = qcut::kDefaultMaxRank;

  auto* plan = app.add_subcommand("plan",
                                  "Report width, peak rank and cost for a "
                                  "circuit (no contraction)");
  plan->add_option("--circuit", circuit_path, "circuit file")->required();
  plan->add_option("--cut", cut_path, "cut-set file");
  plan->add_option("--seed", seed, "ordering seed");
  plan->add_option("--restarts", restarts, "ordering restarts per strategy");
  plan->add_option("--max-rank", max_rank, "tensor rank guard")
      ->envname("QCUT_MAX_RANK");
  plan->add_option("--out", out_path, "also write the JSON report here");

  int cut_size = 1, population = 11, generations = 4;
  int ga_restarts = 2;
  std::string cuts_out = "cuts.json";
  auto* cuts = app.add_subcommand("cuts",
                                  "Search for a cut set with the genetic "
                                  "algorithm");
  cuts->add_option("--circuit", circuit_path, "circuit file")->required();
  cuts->add_option("--cut-size", cut_size, "edges to cut (M)")->required();
  cuts->add_option("--population", population, "population size (N)");
  cuts->add_option("--generations", generations, "iterations (T)");
  cuts->add_option("--seed", seed, "GA seed");
  cuts->add_option("--restarts", ga_restarts, "fitness ordering restarts");
  cuts->add_option("--out", cuts_out, "cut-set output path");

  std::string backend = "serial", listen = "127.0.0.1:0", sweep;
  int workers = 1;
  double timeout_secs = 300, connect_timeout_secs = 30;
  std::uint64_t batch_size = 0;
  std::uint64_t max_jobs = std::uint64_t{1} << 24;
  bool no_timings = false;
  auto* run = app.add_subcommand("run", "Contract and report the amplitude");
  run->add_option("--circuit", circuit_path, "circuit file")->required();
  run->add_option("--cut", cut_path, "cut-set file");
  run->add_option("--backend", backend, "serial | pool | distributed");
  run->add_option("--workers", workers, "pool threads / expected workers");
  run->add_option("--listen", listen, "host:port for the master (0 = pick)");
  run->add_option("--timeout-secs", timeout_secs, "batch heartbeat timeout");
  run->add_option("--connect-timeout-secs", connect_timeout_secs,
                  "worker connect timeout");
  run->add_option("--batch-size", batch_size,
                  "assignments per batch (0 = jobs/workers)");
  run->add_option("--max-jobs", max_jobs, "refuse runs with more than this "
                                          "many subnetworks");
  run->add_option("--max-rank", max_rank, "tensor rank guard")
      ->envname("QCUT_MAX_RANK");
  run->add_option("--seed", seed, "ordering / GA seed");
  run->add_option("--restarts", restarts, "ordering restarts per strategy");
  run->add_flag("--no-timings", no_timings,
                "omit wall-clock fields for reproducible output");
  run->add_option("--sweep-cuts", sweep,
                  "LO..HI: GA-search each m and contract when feasible");
  run->add_option("--population", population, "GA population for --sweep-cuts");
  run->add_option("--generations", generations,
                  "GA generations for --sweep-cuts");
  run->add_option("--out", out_path, "also write the JSON report here");

  std::string connect = "127.0.0.1:9000";
  int worker_id = 0, slots = 1;
  auto* worker = app.add_subcommand("worker", "Run a contraction worker");
  worker->add_option("--connect", connect, "master host:port")->required();
  worker->add_option("--id", worker_id, "worker id for the report");
  worker->add_option("--slots", slots, "parallel connections to the master");

  int bench_samples = 5;
  std::uint64_t seed_base = 1;
  int bench_cut = 0;
  auto* bench = app.add_subcommand("bench",
                                   "Width/cost statistics over random QAOA "
                                   "samples");
  bench->add_option("--n", n, "qubit count")->required();
  bench->add_option("--degree", degree, "graph degree");
  bench->add_option("--samples", bench_samples, "sample count");
  bench->add_option("--seed-base", seed_base, "first sample seed");
  bench->add_option("--cut-size", bench_cut, "also GA-search at this m");
  bench->add_option("--population", population, "GA population");
  bench->add_option("--generations", generations, "GA generations");
  bench->add_option("--restarts", restarts, "ordering restarts");
  bench->add_flag("--no-timings", no_timings, "omit wall-clock fields");
  bench->add_option("--out", out_path, "also write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      return cmd_gen_qaoa(n, degree, seed, gamma, beta, layers, z, out_circuit,
                          out_graph);
    }
    if (plan->parsed()) {
      return cmd_plan(circuit_path, cut_path, seed, restarts, max_rank,
                      out_path);
    }
    if (cuts->parsed()) {
      return cmd_cuts(circuit_path, cut_size, population, generations, seed,
                      ga_restarts, cuts_out);
    }
    if (run->parsed()) {
      return cmd_run(circuit_path, cut_path, backend, workers, listen,
                     timeout_secs, connect_timeout_secs, batch_size, max_jobs,
                     max_rank, seed, restarts, no_timings, sweep, population,
                     generations, out_path);
    }
    if (worker->parsed()) return cmd_worker(connect, worker_id, slots);
    if (bench->parsed()) {
      return cmd_bench(n, degree, bench_samples, seed_base, bench_cut,
                       population, generations, restarts, no_timings,
                       out_path);
    }
  } catch (const qcut::RankGuardError& e) {
    std::cerr << "qcut: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qcut: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
