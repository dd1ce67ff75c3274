#include "safecol/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <optional>

#include "safecol/acceptance.hpp"
#include "safecol/errors.hpp"
#include "safecol/io.hpp"

namespace safecol {

namespace {

// Refusal of a well-formed request the operation does not accept.
struct Refusal {
  std::string reason;
  std::string message;
  Json extra;
};

// "-" reads standard input, text starting with '{' or '[' is parsed inline, anything
// else is a file path.
Json load_json(const std::string& source) {
  std::string text;
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (!source.empty() && (source.front() == '{' || source.front() == '[')) {
    text = source;
  } else {
    std::ifstream in(source);
    if (!in) throw PreconditionError("cannot read " + source);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError(std::string("malformed JSON: ") + e.what());
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int effective_jobs(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

struct Options {
  std::string colouring, graph;
  int n_max = 3, jobs = 0, l = 0, n = 0, k = 0;
  bool chordless = false, up_to_equivalence = false, explore = false, no_meta = false;
};

int do_classify(const Options& o, std::ostream& out) {
  emit(out, verdict_to_json(classify(colouring_from_json(load_json(o.colouring)))));
  return kExitOk;
}

int do_witness(const Options& o, std::ostream& out) {
  CycleColouring c = colouring_from_json(load_json(o.colouring));
  Verdict v = classify(c);
  Json result{{"verdict", verdict_to_json(v)}, {"gadget", nullptr}, {"extends", nullptr}};
  if (v.bad) {
    Gadget g = gadget_for(c, *v.bad);
    result["gadget"] = gadget_to_json(g);
    result["extends"] = brute_force_extend(c, g.graph).has_value();
  }
  emit(out, result);
  return kExitOk;
}

int do_extend(const Options& o, std::ostream& out) {
  CycleColouring c = colouring_from_json(load_json(o.colouring));
  NearTriangulation g = graph_from_json(load_json(o.graph));
  if (g.boundary_len() != c.size())
    throw Refusal{"length_mismatch", "graph boundary length differs from the colouring length", {}};
  if (c.k() < 5) throw Refusal{"k_too_small", "constructive extension needs k >= 5", {}};
  Verdict v = classify(c);
  if (v.kind != VerdictKind::kGood)
    throw Refusal{"not_good", "the colouring is not good", verdict_to_json(v)};
  if (auto chord = find_chord(g)) {
    throw Refusal{"not_chordless", "the boundary cycle has a chord",
                  Json{{"chord", {chord->first + 1, chord->second + 1}}}};
  }
  emit(out, full_colouring_to_json(c.k(), theorem_main_extend(c, g)));
  return kExitOk;
}

int do_probe(const Options& o, std::ostream& out) {
  if (o.explore) {
    if (o.k < 1 || o.l < 3) throw PreconditionError("--explore needs --k and --l");
    for (const auto& e : conjecture_explorer(o.k, o.l, o.n_max, o.jobs)) {
      Json line = probe_to_json(e.probe);
      if (!o.no_meta) line["meta"] = {{"scanned", e.probe.scanned}};
      emit(out, line);
    }
    return kExitOk;
  }
  if (o.colouring.empty()) throw PreconditionError("probe needs --colouring or --explore");
  CycleColouring c = colouring_from_json(load_json(o.colouring));
  auto start = std::chrono::steady_clock::now();
  ProbeVerdict p = safety_probe_parallel(c, o.n_max, o.jobs);
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Json result = probe_to_json(p);
  if (!o.no_meta)
    result["meta"] = {{"scanned", p.scanned}, {"jobs", effective_jobs(o.jobs)}, {"wall_seconds", wall}};
  emit(out, result);
  return kExitOk;
}

int do_enumerate(const Options& o, std::ostream& out) {
  if (o.k > 0) {
    for_each_colouring(o.l, o.k, o.up_to_equivalence, [&](const CycleColouring& c) {
      Json line{{"colouring", colouring_to_json(c)}};
      // Bad and good are only defined from four colours up.
      if (c.k() >= 4) line["verdict"] = verdict_to_json(classify(c));
      emit(out, line);
    });
    return kExitOk;
  }
  for (const auto& g : enumerate_disk_triangulations(o.l, o.n, o.chordless)) emit(out, graph_to_json(g));
  return kExitOk;
}

int do_selftest(std::ostream& out, std::ostream& err) {
  Json criteria = Json::array(), seconds = Json::array();
  bool all = true;
  run_acceptance([&](const CriterionResult& r) {
    all = all && r.pass;
    err << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << '\n';
    criteria.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    seconds.push_back(r.seconds);
  });
  emit(out, Json{{"pass", all}, {"criteria", criteria}, {"meta", {{"seconds", seconds}}}});
  return all ? kExitOk : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify and extend k-colourings of a cycle in a plane near-triangulation"};
  app.name("safecol");
  app.require_subcommand(1);
  Options o;

  auto add_colouring = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--colouring", o.colouring,
                                "colouring JSON: a file path, inline JSON, or - for stdin");
    if (required) opt->required();
  };
  auto* classify_cmd = app.add_subcommand("classify", "bad / good / neither with its witness");
  add_colouring(classify_cmd, true);
  auto* witness_cmd = app.add_subcommand("witness", "unsafety gadget of a bad colouring and the oracle's verdict on it");
  add_colouring(witness_cmd, true);
  auto* extend_cmd = app.add_subcommand("extend", "extend a good colouring over a chordless near-triangulation");
  add_colouring(extend_cmd, true);
  extend_cmd->add_option("--graph", o.graph, "graph JSON: a file path, inline JSON, or -")->required();
  auto* probe_cmd = app.add_subcommand("probe", "search chordless disk triangulations for a non-extendable one");
  add_colouring(probe_cmd, false);
  probe_cmd->add_option("--nmax", o.n_max, "largest number of internal vertices")->check(CLI::Range(0, 8));
  probe_cmd->add_option("--jobs", o.jobs, "worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
  probe_cmd->add_flag("--explore", o.explore, "probe every neither class of length --l with --k colours");
  probe_cmd->add_option("--k", o.k, "colours, with --explore")->check(CLI::Range(1, 30));
  probe_cmd->add_option("--l", o.l, "cycle length, with --explore")->check(CLI::Range(3, 16));
  probe_cmd->add_flag("--no-meta", o.no_meta, "omit the meta block");
  auto* enumerate_cmd = app.add_subcommand("enumerate", "stream disk triangulations (or cycle colourings with --k) as JSON lines");
  enumerate_cmd->add_option("--l", o.l, "boundary length")->required()->check(CLI::Range(3, 16));
  enumerate_cmd->add_option("--n", o.n, "internal vertices")->check(CLI::Range(0, 8));
  enumerate_cmd->add_flag("--chordless", o.chordless, "skip graphs whose boundary has a chord");
  enumerate_cmd->add_option("--k", o.k, "list proper k-colourings of C_l instead of graphs")->check(CLI::Range(1, 30));
  enumerate_cmd->add_flag("--up-to-equivalence", o.up_to_equivalence, "one colouring per equivalence class");
  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit(out, Json{{"error", "invalid_arguments"}, {"message", e.what()}});
    return kExitInput;
  }

  try {
    if (classify_cmd->parsed()) return do_classify(o, out);
    if (witness_cmd->parsed()) return do_witness(o, out);
    if (extend_cmd->parsed()) return do_extend(o, out);
    if (probe_cmd->parsed()) return do_probe(o, out);
    if (enumerate_cmd->parsed()) return do_enumerate(o, out);
    if (selftest_cmd->parsed()) return do_selftest(out, err);
  } catch (const Refusal& r) {
    Json j{{"error", "refused"}, {"reason", r.reason}, {"message", r.message}};
    if (!r.extra.is_null()) j["detail"] = r.extra;
    emit(out, j);
    return kExitInput;
  } catch (const GraphError& e) {
    emit(out, Json{{"error", "invalid_graph"}, {"kind", to_string(e.kind())}, {"message", e.what()}});
    return kExitInput;
  } catch (const PreconditionError& e) {
    emit(out, Json{{"error", "invalid_input"}, {"message", e.what()}});
    return kExitInput;
  } catch (const InternalInvariantError& e) {
    emit(out, Json{{"error", "internal_invariant"}, {"message", e.what()}, {"trace", e.trace()}});
    return kExitInternal;
  }
  return kExitInput;
}

}  // namespace safecol
