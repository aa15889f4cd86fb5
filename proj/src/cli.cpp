#include "lfree/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "lfree/construct.hpp"
#include "lfree/detect.hpp"
#include "lfree/error.hpp"
#include "lfree/hypergraph.hpp"
#include "lfree/report.hpp"
#include "lfree/search.hpp"
#include "lfree/sequences.hpp"

namespace lfree {

namespace {

struct Budgets {
  std::uint64_t nodes = SearchOptions{}.max_nodes;
  std::uint64_t decompositions = DetectOptions{}.max_decompositions;
  std::uint64_t subsets = HypergraphOptions{}.max_subsets;
};

Budgets default_budgets() {
  Budgets b;
  if (const char* env = std::getenv("LFREE_BUDGET")) {
    std::uint64_t v = 0;
    std::size_t pos = 0;
    try {
      v = std::stoull(env, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || env[pos] != '\0') throw InvalidInput(std::string("LFREE_BUDGET is not an integer: ") + env);
    b.nodes = b.decompositions = b.subsets = v;
  }
  return b;
}

struct Args {
  std::string format = "json";
  std::string out;
  std::string write;
  int threads = 1;
  Budgets budget;

  std::vector<int> signature;
  std::optional<Value> n;
  Value lo = 1;
  std::vector<Value> moduli;
  std::string set, a, b, x, hypergraph;
  std::string through;
  std::string check = "sumset";
  int r = 0;
  std::size_t limit = 1000;
  bool allow_large = false;
  std::optional<std::uint64_t> seed;
  int max_attempts = DeletionOptions{}.max_attempts;
  std::int64_t p = 0;
  bool embed = false;
  double epsilon = 0.1;
  int m_min = 1;
  int m_max = 8;
  std::vector<Value> xs;
};

Signature sig_of(const Args& a) {
  if (a.signature.empty()) throw InvalidInput("--signature is required");
  return Signature::normalize(a.signature);
}

Ambient ambient_of(const Args& a) {
  if (a.n && !a.moduli.empty()) throw InvalidInput("give either --n or --moduli, not both");
  if (a.n) {
    if (*a.n < 1) throw InvalidInput("--n must be >= 1");
    return Ambient::interval(*a.n, a.lo);
  }
  if (!a.moduli.empty()) return Ambient::product(a.moduli);
  throw InvalidInput("an ambient is required: --n N or --moduli n1,n2,...");
}

Value need_n(const Args& a) {
  if (!a.n) throw InvalidInput("--n is required");
  return *a.n;
}

DetectOptions detect_options(const Args& a) { return DetectOptions{a.budget.decompositions, a.threads}; }

void write_artifact(const Args& a, const GroundSet& s) {
  if (!a.write.empty()) write_set_file(a.write, s);
}

Report set_report(const GroundSet& s, Json extra) {
  Report r;
  r.doc = std::move(extra);
  r.doc["ambient"] = s.ambient().describe();
  r.doc["size"] = s.size();
  r.doc["set"] = to_json(s);
  scalar_view(r);
  return r;
}

Json stats_json(const SequencePrefix& seq, const std::vector<Value>& xs) {
  Json out = Json::array();
  if (seq.signature.r() < 2) return out;
  const auto st = liminf_statistic(seq, xs);
  for (std::size_t i = 0; i < xs.size(); ++i)
    out.push_back({{"x", xs[i]}, {"A", counting_function(seq, xs[i])}, {"liminf_stat", st[i]}});
  return out;
}

void stats_view(Report& r) {
  r.header = {"x", "A", "liminf_stat"};
  r.rows.clear();
  for (const auto& s : r.doc["statistics"]) r.rows.push_back({cell(s["x"]), cell(s["A"]), cell(s["liminf_stat"])});
}

std::vector<Value> default_xs(Value limit) {
  std::vector<Value> xs;
  for (Value x = 4; x < limit; x *= 2) xs.push_back(x);
  if (limit >= 2) xs.push_back(limit);
  return xs;
}

GroundSet sequence_set(const std::vector<Value>& terms, Value n) {
  return GroundSet::from_values(Ambient::interval(std::max<Value>(n, terms.empty() ? 1 : terms.back())), terms);
}

// ---- commands ----

Report cmd_detect(const Args& a) {
  const GroundSet s = read_set_file(a.set);
  Report r;
  r.doc["ambient"] = s.ambient().describe();
  r.doc["size"] = s.size();
  r.doc["check"] = a.check;
  if (a.check == "sidon") {
    r.doc["free"] = is_sidon(s);
  } else if (a.check == "cube") {
    r.doc["r"] = a.r;
    r.doc["free"] = is_hilbert_cube_free(s, a.r);
  } else if (a.check == "sumset") {
    const Signature sig = sig_of(a);
    auto w = a.through.empty() ? contains_sumset(s, sig)
                               : contains_sumset_through(s, sig, parse_element(a.through, s.ambient()));
    r.doc["signature"] = to_json(sig);
    r.doc["free"] = !w;
    r.doc["witness"] = w ? to_json(*w, s.ambient()) : Json(nullptr);
  } else {
    throw InvalidInput("unknown --check '" + a.check + "' (sumset, sidon, cube)");
  }
  scalar_view(r);
  return r;
}

Report cmd_enumerate(const Args& a) {
  const Signature sig = sig_of(a);
  Report r;
  r.doc["signature"] = to_json(sig);
  if (a.set.empty()) {
    const Value n = need_n(a);
    const auto c = count_all_sumsets(n, sig, detect_options(a));
    const long double bound = std::pow(static_cast<long double>(n), static_cast<long double>(sig.sum() - sig.r() + 1));
    r.doc["n"] = n;
    r.doc["decompositions"] = c.decompositions;
    r.doc["distinct_value_sets"] = c.distinct_value_sets;
    if (bound < 9e18L) r.doc["bound"] = static_cast<std::uint64_t>(std::llround(bound));
    else r.doc["bound"] = static_cast<double>(bound);
    r.doc["within_bound"] = static_cast<long double>(c.decompositions) <= bound;
  } else {
    const GroundSet s = read_set_file(a.set);
    std::uint64_t count = 0;
    Json list = Json::array();
    enumerate_sumsets(
        s, sig,
        [&](const SumsetWitness& w) {
          if (count++ < a.limit) list.push_back(to_json(w, s.ambient()));
          return true;
        },
        detect_options(a));
    r.doc["ambient"] = s.ambient().describe();
    r.doc["count"] = count;
    r.doc["truncated"] = count > a.limit;
    r.doc["decompositions"] = list;
  }
  scalar_view(r);
  return r;
}

Report cmd_search(const Args& a) {
  const Ambient amb = ambient_of(a);
  const Signature sig = sig_of(a);
  SearchOptions opt;
  opt.max_nodes = a.budget.nodes;
  opt.allow_large = a.allow_large;
  const auto rep = max_free_set(amb, sig, opt);
  write_artifact(a, rep.witness);
  Report r;
  r.doc = {{"ambient", amb.describe()}, {"signature", to_json(sig)}, {"F", rep.best_size},
           {"witness", to_json(rep.witness)}, {"nodes", rep.nodes}, {"ms", rep.ms},
           {"pruned_by", Json(rep.pruned_by)}};
  if (!rep.table.empty()) r.doc["table"] = rep.table;
  r.header = {"ambient", "signature", "F", "nodes", "ms"};
  r.rows = {{amb.describe(), sig.to_string(), std::to_string(rep.best_size), std::to_string(rep.nodes),
             cell(Json(rep.ms))}};
  return r;
}

Report cmd_bounds(const Args& a) {
  Report r;
  if (!a.a.empty() || !a.b.empty() || !a.x.empty()) {
    if (a.a.empty() || a.b.empty() || a.x.empty()) throw InvalidInput("overlap needs --a, --b and --x");
    const auto res = overlap_check(read_set_file(a.a), read_set_file(a.b), read_set_file(a.x), a.r);
    r.doc = {{"r", a.r}, {"lhs", res.lhs}, {"rhs", res.rhs}, {"holds", res.lhs >= res.rhs}};
  } else {
    const Value n = need_n(a);
    const Signature sig = sig_of(a);
    const auto e = lower_bound_exponent(sig);
    r.doc = {{"n", n},
             {"signature", to_json(sig)},
             {"upper_bound_leading", upper_bound_leading(n, sig)},
             {"turan_upper_bound", turan_upper_bound(n, sig)},
             {"lower_bound_exponent", {{"num", e.num}, {"den", e.den}, {"value", e.value()}}}};
    if (sig.lengths() == std::vector<int>{2, 2}) {
      const double nd = static_cast<double>(n);
      r.doc["sidon_refined_bound"] = std::sqrt(nd) + std::pow(nd, 0.25) + 0.5;
    }
  }
  scalar_view(r);
  return r;
}

Report cmd_behrend(const Args& a) {
  const Value n = need_n(a);
  const GroundSet s = behrend_set(n);
  write_artifact(a, s);
  return set_report(s, {{"n", n}});
}

Report cmd_random(const Args& a) {
  if (!a.seed) throw InvalidInput("construct random requires --seed");
  const Value n = need_n(a);
  const Signature sig = sig_of(a);
  DeletionOptions opt;
  opt.max_attempts = a.max_attempts;
  opt.detect = detect_options(a);
  const auto rep = random_deletion(n, sig, *a.seed, opt);
  write_artifact(a, rep.result);
  Json attempts = Json::array();
  for (const auto& t : rep.attempts)
    attempts.push_back({{"seed", t.seed}, {"S", t.sampled}, {"bad", t.bad}, {"A", t.result}});
  Report r;
  r.doc = {{"n", n},
           {"signature", to_json(sig)},
           {"seed", rep.seed},
           {"seed_used", rep.seed_used},
           {"p", rep.p_used},
           {"omega", rep.omega},
           {"behrend_size", rep.behrend_size},
           {"goal", static_cast<double>(rep.behrend_size) * rep.p_used / 4.0},
           {"sizes", {{"S", rep.sampled.size()}, {"bad", rep.bad.size()}, {"A", rep.result.size()}}},
           {"attempts", attempts},
           {"set", to_json(rep.result)}};
  r.header = {"attempt", "seed", "S", "bad", "A"};
  for (std::size_t i = 0; i < rep.attempts.size(); ++i) {
    const auto& t = rep.attempts[i];
    r.rows.push_back({std::to_string(i), std::to_string(t.seed), std::to_string(t.sampled), std::to_string(t.bad),
                      std::to_string(t.result)});
  }
  return r;
}

Report cmd_zp3(const Args& a) {
  GroundSet s = zp3_construction(a.p);
  if (a.embed) s = mixed_radix_embed(s);
  write_artifact(a, s);
  return set_report(s, {{"p", a.p}, {"embedded", a.embed}});
}

Report cmd_embed(const Args& a) {
  const GroundSet s = mixed_radix_embed(read_set_file(a.set));
  write_artifact(a, s);
  return set_report(s, Json::object());
}

Report cmd_l222(const Args& a) {
  const Value n = need_n(a);
  const GroundSet s = integer_l222_construction(n);
  write_artifact(a, s);
  return set_report(s, {{"n", n}, {"p", l222_prime(n)}});
}

Ambient group_of(const Args& a) {
  if (a.moduli.empty()) throw InvalidInput("--moduli is required");
  return Ambient::product(a.moduli);
}

GroundSet set_in(const Ambient& g, const std::string& path) {
  const GroundSet s = read_set_file(path);
  if (!(s.ambient() == g)) throw InvalidInput("set file ambient '" + s.ambient().describe() + "' differs from " +
                                              g.describe());
  return s;
}

Report cmd_hg_build(const Args& a) {
  const Ambient g = group_of(a);
  const auto h = cayley_hypergraph(g, set_in(g, a.set), a.r, HypergraphOptions{a.budget.subsets});
  if (!a.write.empty()) {
    std::ofstream f(a.write);
    if (!f) throw InvalidInput("cannot write " + a.write);
    write_hypergraph(f, h);
  }
  Report r;
  r.doc = {{"group", g.describe()}, {"n", h.n}, {"r", h.r}, {"edges", h.edges.size()}};
  scalar_view(r);
  return r;
}

Report cmd_hg_check(const Args& a) {
  std::ifstream f(a.hypergraph);
  if (!f) throw InvalidInput("cannot open hypergraph file: " + a.hypergraph);
  const auto h = read_hypergraph(f);
  const Signature sig = sig_of(a);
  const auto classes = contains_complete_rpartite(h, sig);
  Report r;
  r.doc = {{"n", h.n},
           {"r", h.r},
           {"edges", h.edges.size()},
           {"signature", to_json(sig)},
           {"free", !classes},
           {"classes", classes ? Json(*classes) : Json(nullptr)}};
  scalar_view(r);
  return r;
}

Report cmd_hg_translate(const Args& a) {
  const Ambient g = group_of(a);
  const GroundSet s = set_in(g, a.set);
  const HypergraphOptions opt{a.budget.subsets};
  const auto t = best_translate(g, s, a.r, opt);
  std::uint64_t total = 0;
  for (auto c : sum_representation_counts(g, a.r, opt)) total += c;
  Report r;
  r.doc = {{"group", g.describe()},
           {"r", a.r},
           {"x", to_json(t.x, g)},
           {"edge_count", t.edge_count},
           {"average", static_cast<double>(s.size()) * static_cast<double>(total) / static_cast<double>(g.cardinality())},
           {"per_translate", t.per_translate}};
  scalar_view(r);
  return r;
}

Report cmd_greedy(const Args& a) {
  const Signature sig = sig_of(a);
  if (a.limit < 1) throw InvalidInput("--limit must be >= 1");
  const auto limit = static_cast<Value>(a.limit);
  const auto seq = greedy_sequence(sig, limit);
  write_artifact(a, sequence_set(seq.terms, limit));
  Report r;
  r.doc = {{"signature", to_json(sig)},
           {"provenance", seq.provenance},
           {"terms", seq.terms},
           {"per_m", Json::array()},
           {"statistics", stats_json(seq, a.xs.empty() ? default_xs(limit) : a.xs)}};
  stats_view(r);
  return r;
}

Report cmd_dyadic(const Args& a) {
  if (!a.seed) throw InvalidInput("sequence dyadic requires --seed");
  const Signature sig = sig_of(a);
  const DyadicParams p{a.epsilon, a.m_min, a.m_max, *a.seed};
  const auto res = dyadic_random_sequence(sig, p, detect_options(a));
  const Value top = (Value{1} << (2 * (p.m_max + 2))) + (Value{1} << (2 * p.m_max));
  write_artifact(a, sequence_set(res.sequence.terms, top));
  Json per_m = Json::array();
  std::vector<Value> xs = a.xs;
  for (const auto& b : res.blocks) {
    per_m.push_back({{"m", b.m},
                     {"lo", b.lo},
                     {"behrend", b.behrend},
                     {"dense", b.dense},
                     {"expected", b.expected},
                     {"S", b.sampled},
                     {"N", b.obstructions},
                     {"bad", b.bad},
                     {"retained", b.retained},
                     {"N_over_S", b.sampled ? Json(static_cast<double>(b.obstructions) / static_cast<double>(b.sampled))
                                            : Json(nullptr)}});
    if (a.xs.empty()) xs.push_back(b.lo + (Value{1} << (2 * b.m)) - 1);
  }
  Report r;
  r.doc = {{"signature", to_json(sig)},
           {"provenance", res.sequence.provenance},
           {"alpha", res.alpha},
           {"epsilon", p.epsilon},
           {"seed", p.seed},
           {"experimental", res.experimental},
           {"decompositions", res.decompositions},
           {"terms", res.sequence.terms},
           {"per_m", per_m},
           {"statistics", stats_json(res.sequence, xs)}};
  r.header = {"m", "|S|", "N", "retained"};
  for (const auto& b : res.blocks)
    r.rows.push_back(
        {std::to_string(b.m), std::to_string(b.sampled), std::to_string(b.obstructions), std::to_string(b.retained)});
  return r;
}

Report cmd_stats(const Args& a) {
  const GroundSet s = read_set_file(a.set);
  if (!s.ambient().is_interval()) throw InvalidInput("sequence stats needs an interval set file");
  const SequencePrefix seq{s.values(), sig_of(a), "file"};
  const Value last = seq.terms.empty() ? 2 : std::max<Value>(seq.terms.back(), 2);
  Report r;
  r.doc = {{"signature", to_json(seq.signature)},
           {"provenance", seq.provenance},
           {"terms", seq.terms},
           {"per_m", Json::array()},
           {"statistics", stats_json(seq, a.xs.empty() ? default_xs(last) : a.xs)}};
  stats_view(r);
  return r;
}

void emit(const Report& r, const Args& a, std::ostream& out) {
  const std::string text = render_report(r, parse_format(a.format));
  if (a.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(a.out);
  if (!f) throw InvalidInput("cannot write " + a.out);
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Args a;
  try {
    a.budget = default_budgets();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  CLI::App app{"Sumset-free sets: detection, exact search, constructions, hypergraphs, sequences", "lfree"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  auto common = [&](CLI::App* c) {
    c->add_option("--format", a.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
    c->add_option("--out", a.out, "Write the report to this file instead of stdout");
    c->add_option("--threads", a.threads, "Worker threads for enumeration")->check(CLI::Range(1, 1024));
    c->add_option("--max-nodes", a.budget.nodes, "Search node budget");
    c->add_option("--max-decompositions", a.budget.decompositions, "Decomposition enumeration budget");
  };
  auto signature = [&](CLI::App* c) {
    c->add_option("--signature", a.signature, "Summand sizes, e.g. 2,2,3")->delimiter(',');
  };
  auto writes = [&](CLI::App* c, const char* what) { c->add_option("--write", a.write, what); };

  auto* detect = app.add_subcommand("detect", "Decide whether a set contains a forbidden sumset");
  common(detect);
  signature(detect);
  detect->add_option("--set", a.set, "Set file")->required();
  detect->add_option("--through", a.through, "Only sumsets containing this element");
  detect->add_option("--check", a.check, "sumset (default), sidon, or cube");
  detect->add_option("--r", a.r, "Hilbert cube dimension for --check cube");

  auto* enumerate = app.add_subcommand("enumerate", "List decompositions in a set, or count all in [1,n]");
  common(enumerate);
  signature(enumerate);
  enumerate->add_option("--set", a.set, "Set file");
  enumerate->add_option("--n", a.n, "Count every sumset inside [1,n] instead");
  enumerate->add_option("--limit", a.limit, "Decompositions listed in the report");

  auto* search = app.add_subcommand("search", "Exact maximum free set");
  common(search);
  signature(search);
  search->add_option("--n", a.n, "Interval [lo, lo+n)");
  search->add_option("--lo", a.lo, "Interval origin (default 1)");
  search->add_option("--moduli", a.moduli, "Cyclic product Z_n1 x ... x Z_nk")->delimiter(',');
  search->add_flag("--allow-large", a.allow_large, "Permit ambients above 64 elements");
  writes(search, "Write the witness set file");

  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds, or the overlap inequality for --a/--b/--x");
  common(bounds);
  signature(bounds);
  bounds->add_option("--n", a.n, "Interval size");
  bounds->add_option("--a", a.a, "Set file A");
  bounds->add_option("--b", a.b, "Set file B");
  bounds->add_option("--x", a.x, "Set file X containing A+B");
  bounds->add_option("--r", a.r, "Overlap order r");

  auto* construct = app.add_subcommand("construct", "Explicit and randomized constructions");
  construct->require_subcommand(1);
  auto* behrend = construct->add_subcommand("behrend", "3-AP-free subset of [1,n]");
  auto* random = construct->add_subcommand("random", "Random sampling of a Behrend set with obstruction deletion");
  auto* zp3 = construct->add_subcommand("zp3", "(2,2,2)-free subset of Z_{p-1}^3");
  auto* embed = construct->add_subcommand("embed", "Mixed-radix embedding of a product set into the integers");
  auto* l222 = construct->add_subcommand("l222", "(2,2,2)-free subset of [0,n)");
  for (auto* c : {behrend, random, zp3, embed, l222}) {
    common(c);
    writes(c, "Write the constructed set file");
  }
  for (auto* c : {behrend, random, l222}) c->add_option("--n", a.n, "Interval size")->required();
  signature(random);
  random->add_option("--seed", a.seed, "Master seed (required)")->required();
  random->add_option("--max-attempts", a.max_attempts, "Derived-seed retries")->check(CLI::Range(1, 1000));
  zp3->add_option("--p", a.p, "Prime p >= 5")->required();
  zp3->add_flag("--embed", a.embed, "Embed the result into the integers");
  embed->add_option("--set", a.set, "Product set file")->required();

  auto* hyper = app.add_subcommand("hypergraph", "Cayley sum hypergraphs");
  hyper->require_subcommand(1);
  auto* build = hyper->add_subcommand("build", "Cayley sum hypergraph of A in G");
  auto* hcheck = hyper->add_subcommand("check", "Search a hypergraph file for a complete r-partite subgraph");
  auto* translate = hyper->add_subcommand("best-translate", "Translate of A with the most Cayley edges");
  for (auto* c : {build, hcheck, translate}) common(c);
  for (auto* c : {build, translate}) {
    c->add_option("--moduli", a.moduli, "Group Z_n1 x ... x Z_nk")->delimiter(',')->required();
    c->add_option("--set", a.set, "Set file in the group")->required();
    c->add_option("--r", a.r, "Uniformity")->required();
  }
  writes(build, "Write the hypergraph file");
  signature(hcheck);
  hcheck->add_option("--hypergraph", a.hypergraph, "Hypergraph file")->required();

  auto* sequence = app.add_subcommand("sequence", "Infinite-sequence experiments");
  sequence->require_subcommand(1);
  auto* greedy = sequence->add_subcommand("greedy", "Greedy free sequence up to --limit");
  auto* dyadic = sequence->add_subcommand("dyadic", "Random dyadic-block construction");
  auto* stats = sequence->add_subcommand("stats", "Counting function and liminf statistic of a set file");
  for (auto* c : {greedy, dyadic, stats}) {
    common(c);
    signature(c);
    c->add_option("--x", a.xs, "Evaluation points for the statistics")->delimiter(',');
  }
  writes(greedy, "Write the sequence as a set file");
  writes(dyadic, "Write the sequence as a set file");
  greedy->add_option("--limit", a.limit, "Largest candidate")->required();
  dyadic->add_option("--seed", a.seed, "Master seed (required)")->required();
  dyadic->add_option("--epsilon", a.epsilon, "Exponent slack");
  dyadic->add_option("--m-min", a.m_min, "First block");
  dyadic->add_option("--m-max", a.m_max, "Last block");
  stats->add_option("--set", a.set, "Interval set file")->required();

  std::vector<const char*> argv{"lfree"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Report r;
    if (app.got_subcommand(detect)) r = cmd_detect(a);
    else if (app.got_subcommand(enumerate)) r = cmd_enumerate(a);
    else if (app.got_subcommand(search)) r = cmd_search(a);
    else if (app.got_subcommand(bounds)) r = cmd_bounds(a);
    else if (construct->got_subcommand(behrend)) r = cmd_behrend(a);
    else if (construct->got_subcommand(random)) r = cmd_random(a);
    else if (construct->got_subcommand(zp3)) r = cmd_zp3(a);
    else if (construct->got_subcommand(embed)) r = cmd_embed(a);
    else if (construct->got_subcommand(l222)) r = cmd_l222(a);
    else if (hyper->got_subcommand(build)) r = cmd_hg_build(a);
    else if (hyper->got_subcommand(hcheck)) r = cmd_hg_check(a);
    else if (hyper->got_subcommand(translate)) r = cmd_hg_translate(a);
    else if (sequence->got_subcommand(greedy)) r = cmd_greedy(a);
    else if (sequence->got_subcommand(dyadic)) r = cmd_dyadic(a);
    else if (sequence->got_subcommand(stats)) r = cmd_stats(a);
    emit(r, a, out);
  } catch (const ResourceExceeded& e) {
    err << "resource budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace lfree
