#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "hlindex/canonical.hpp"
#include "hlindex/catalog.hpp"
#include "hlindex/generators.hpp"
#include "hlindex/imbalance.hpp"
#include "hlindex/inertia.hpp"
#include "hlindex/io.hpp"
#include "hlindex/json.hpp"
#include "hlindex/poly.hpp"
#include "hlindex/spectra.hpp"

namespace hl::cli {
namespace {

namespace fs = std::filesystem;

/// Bad input or arguments; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string input = "-";
  std::string format = "auto";
  std::string output = "json";
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string slurp(std::istream& s) {
  std::ostringstream buf;
  buf << s.rdbuf();
  return buf.str();
}

std::string read_source(const std::string& source, std::istream& in) {
  if (source == "-") return slurp(in);
  std::ifstream file(source, std::ios::binary);
  if (!file) throw InputError(source + ": cannot open file");
  return slurp(file);
}

Graph builtin_graph(std::string_view name) {
  if (name == "heawood") return heawood();
  auto numbered = [&](char prefix) -> std::optional<std::size_t> {
    if (name.size() < 2 || name[0] != prefix) return std::nullopt;
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
    if (ec != std::errc{} || ptr != name.data() + name.size()) return std::nullopt;
    return k;
  };
  if (auto k = numbered('c'); k && *k >= 3) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < *k; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % *k));
    return Graph::from_edge_list(*k, edges);
  }
  if (auto k = numbered('p'); k && *k >= 1) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < *k; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edge_list(*k, edges);
  }
  if (auto e = find_entry(name)) return e->graph;
  throw InputError("builtin:" + std::string(name) +
                   ": unknown builtin (heawood, c<N>, p<N> or a catalog entry name)");
}

GraphFormat format_of(const std::string& flag, std::string_view text) {
  if (flag == "graph6") return GraphFormat::graph6;
  if (flag == "edgelist") return GraphFormat::edgelist;
  return detect_format(text);
}

Graph load_graph(const Common& c, std::istream& in) {
  if (c.input.starts_with("builtin:")) return builtin_graph(std::string_view(c.input).substr(8));
  const std::string text = read_source(c.input, in);
  const std::string where = c.input == "-" ? "<stdin>" : c.input;
  try {
    return parse_graph(text, format_of(c.format, text));
  } catch (const ParseError& e) {
    throw InputError(where + ": " + e.what());
  } catch (const GraphError& e) {
    throw InputError(where + ": " + e.what());
  }
}

void require_bipartite_subcubic(const Graph& g) {
  if (!g.is_subcubic()) throw InputError("graph has a vertex of degree above 3");
  if (!is_bipartite(g)) throw InputError("graph is not bipartite");
}

Rational rational_arg(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(flag + ": " + e.what());
  }
}

VertexSet vertex_list(const std::string& text, std::size_t n, const std::string& flag) {
  std::vector<Vertex> out;
  std::string token;
  std::istringstream s(text);
  while (std::getline(s, token, ',')) {
    if (token.empty()) continue;
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InputError(flag + ": \"" + token + "\" is not a vertex index");
    }
    if (v >= n) throw InputError(flag + ": vertex " + token + " out of range");
    out.push_back(static_cast<Vertex>(v));
  }
  return VertexSet(std::move(out));
}

// Text mode flattens the JSON document, so both modes carry the same values.
void flatten(const Json& j, const std::string& prefix, std::vector<std::string>& lines) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, lines);
    return;
  }
  if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", lines);
    return;
  }
  std::string value;
  if (j.is_array()) {
    for (const auto& x : j) {
      if (!value.empty()) value += ' ';
      value += x.is_string() ? x.get<std::string>() : x.dump();
    }
  } else {
    value = j.is_string() ? j.get<std::string>() : j.dump();
  }
  lines.push_back(prefix + ": " + value);
}

void emit(const Json& j, const std::string& mode, std::ostream& out, bool record = false) {
  if (mode == "json") {
    out << j.dump() << '\n';
    return;
  }
  std::vector<std::string> lines;
  flatten(j, "", lines);
  const char* sep = record ? " " : "\n";
  for (std::size_t i = 0; i < lines.size(); ++i) out << (i ? sep : "") << lines[i];
  out << '\n';
}

unsigned default_jobs() {
  if (const char* env = std::getenv("HLINDEX_JOBS")) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::char_traits<char>::length(env), v);
    if (ec == std::errc{} && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs task(i) for i in [0, count) on `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task) {
  jobs = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), count));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
          try {
            task(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

void add_common(CLI::App* sub, Common& c, bool with_input = true) {
  if (with_input) sub->add_option("input", c.input, "Graph file, - for stdin, or builtin:<name>");
  sub->add_option("--format", c.format, "Input format")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
  sub->add_option("--output", c.output, "Output mode")->check(CLI::IsMember({"json", "text"}));
}

int cmd_eigs(const Common& c, Io io) {
  const Graph g = load_graph(c, io.in);
  Json j = eigenvalues(g);
  j["n"] = g.order();
  emit(j, c.output, io.out);
  return kOk;
}

int cmd_median(const Common& c, Io io) {
  emit(median_report(load_graph(c, io.in)), c.output, io.out);
  return kOk;
}

int cmd_inertia(const Common& c, const std::string& threshold, bool cross_check, Io io) {
  const Graph g = load_graph(c, io.in);
  const Rational t = rational_arg(threshold, "--threshold");
  const auto count = inertia(g, t);
  Json j = count;
  if (cross_check) {
    const bool agrees = inertia_sturm(g, t) == count;
    j["sturm_agrees"] = agrees;
    emit(j, c.output, io.out);
    return agrees ? kOk : kViolation;
  }
  emit(j, c.output, io.out);
  return kOk;
}

int cmd_charpoly(const Common& c, std::size_t bound, Io io) {
  const Graph g = load_graph(c, io.in);
  IntPoly p;
  try {
    p = char_poly(g, bound);
  } catch (const CharPolyBoundError& e) {
    throw InputError(e.what());
  }
  emit(Json{{"n", g.order()}, {"degree", p.degree()}, {"coefficients", p}}, c.output, io.out);
  return kOk;
}

struct ImbalanceArgs {
  std::string a_side;
  bool swap = false;
  std::string move;
  std::string side = "A";
  std::string replay;
};

int cmd_imbalance(const Common& c, const ImbalanceArgs& args, Io io) {
  const Graph g = load_graph(c, io.in);
  if (!g.is_subcubic()) throw InputError("graph has a vertex of degree above 3");
  const auto bip = bipartition(g);
  Partition p;
  if (!args.a_side.empty()) {
    p.a = vertex_list(args.a_side, g.order(), "--a");
    p.b = p.a.complement(g.order());
  } else {
    if (!bip) throw InputError("graph is not bipartite; pass --a to choose a partition");
    p = {bip->a_side, bip->b_side};
  }
  if (args.swap) p = p.swapped();

  if (!args.replay.empty()) {
    if (!bip) throw InputError("graph is not bipartite");
    IncreaseCertificate cert;
    try {
      cert = Json::parse(read_source(args.replay, io.in)).get<IncreaseCertificate>();
    } catch (const Json::exception& e) {
      throw InputError(args.replay + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw InputError(args.replay + ": " + e.what());
    }
    const Bipartition ref = args.swap ? bip->swapped() : *bip;
    const auto r = replay_certificate(g, ref, cert);
    emit(Json{{"replay_ok", r.ok}, {"detail", r.detail}}, c.output, io.out);
    return r.ok ? kOk : kViolation;
  }

  Json j{{"a", p.a},
         {"b", p.b},
         {"ab", imbalance(g, p)},
         {"ba", imbalance(g, p.swapped())},
         {"median_bound", median_bound(g, p)}};
  if (!args.move.empty()) {
    const VertexSet cset = vertex_list(args.move, g.order(), "--move");
    const Side side = args.side == "A" ? Side::a : Side::b;
    try {
      const auto cert = increases_imbalance(g, p, cset, side);
      j["increase"] = cert ? Json(*cert) : Json(nullptr);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--move: ") + e.what());
    }
  }
  emit(j, c.output, io.out);
  return kOk;
}

struct SearchArgs {
  std::size_t vertex = 0;
  std::size_t radius = 17;
  std::size_t max_size = 8;
  std::uint64_t budget = 10'000'000;
  bool no_patterns = false;
  bool swap = false;
  std::size_t separation = 38;
  unsigned jobs = 0;
};

SearchConfig search_config(const SearchArgs& a) {
  return {a.radius, a.max_size, a.budget, !a.no_patterns};
}

int cmd_find_set(const Common& c, const SearchArgs& a, Io io) {
  const Graph g = load_graph(c, io.in);
  require_bipartite_subcubic(g);
  if (a.vertex >= g.order()) throw InputError("--vertex out of range");
  auto bip = *bipartition(g);
  if (a.swap) bip = bip.swapped();
  Json j = search_increasing_set(g, bip, static_cast<Vertex>(a.vertex), search_config(a));
  j["v0"] = a.vertex;
  emit(j, c.output, io.out);
  return kOk;
}

int cmd_pipeline(const Common& c, const SearchArgs& a, Io io) {
  const Graph g = load_graph(c, io.in);
  require_bipartite_subcubic(g);
  PipelineConfig cfg;
  cfg.separation = a.separation;
  cfg.search = search_config(a);
  cfg.jobs = a.jobs ? a.jobs : default_jobs();
  const auto report = fraction_pipeline(g, cfg);
  emit(report, c.output, io.out);
  return report.ok() ? kOk : kViolation;
}

struct GenArgs {
  std::size_t n = 14;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::optional<std::size_t> girth;
  std::optional<std::size_t> extra_edges;
  bool saturate = false;
  bool disconnected = false;
  std::string graph_format = "graph6";
};

int cmd_gen(const Common& c, const GenArgs& a, Io io) {
  for (std::size_t i = 0; i < a.count; ++i) {
    GeneratorConfig cfg;
    cfg.n = a.n;
    cfg.seed = a.seed + i;
    cfg.connected = !a.disconnected;
    cfg.girth_floor = a.girth;
    cfg.extra_edges = a.extra_edges;
    cfg.saturate = a.saturate;
    Graph g;
    try {
      g = random_bipartite_subcubic(cfg);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    const std::string text =
        a.graph_format == "graph6" ? graph6_encode(g) : edgelist_encode(g);
    if (c.output == "json") {
      io.out << Json{{"seed", cfg.seed}, {"n", g.order()}, {a.graph_format, text}}.dump() << '\n';
    } else {
      io.out << text << (text.ends_with('\n') ? "" : "\n");
    }
  }
  return kOk;
}

struct CatalogArgs {
  std::vector<std::string> entries;
  std::string export_dir;
  std::string from;
  unsigned jobs = 0;
};

std::vector<CatalogEntry> load_entries(const std::string& from) {
  std::vector<fs::path> files;
  if (fs::is_directory(from)) {
    for (const auto& f : fs::directory_iterator(from)) {
      if (f.path().extension() == ".json") files.push_back(f.path());
    }
    std::sort(files.begin(), files.end());
  } else if (fs::exists(from)) {
    files.emplace_back(from);
  } else {
    throw InputError(from + ": no such file or directory");
  }
  std::vector<CatalogEntry> out;
  for (const auto& f : files) {
    std::ifstream s(f);
    try {
      out.push_back(Json::parse(s).get<CatalogEntry>());
    } catch (const Json::exception& e) {
      throw InputError(f.string() + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw InputError(f.string() + ": " + e.what());
    } catch (const ParseError& e) {
      throw InputError(f.string() + ": " + e.what());
    }
  }
  return out;
}

void export_entries(const std::vector<CatalogEntry>& entries, const fs::path& dir) {
  fs::create_directories(dir);
  std::ofstream g6(dir / "catalog.g6");
  for (const auto& e : entries) {
    g6 << graph6_encode(e.graph) << '\n';
    std::ofstream meta(dir / (e.name + ".json"));
    meta << Json(e).dump(2) << '\n';
    if (!meta) throw InputError((dir / (e.name + ".json")).string() + ": write failed");
  }
}

int cmd_verify_catalog(const Common& c, const CatalogArgs& a, Io io) {
  std::vector<CatalogEntry> entries;
  if (!a.from.empty()) {
    entries = load_entries(a.from);
  } else if (a.entries.empty()) {
    entries = catalog();
  }
  for (const auto& name : a.entries) {
    auto e = find_entry(name);
    if (!e) throw InputError("--entry: unknown catalog entry " + name);
    entries.push_back(std::move(*e));
  }
  if (!a.export_dir.empty()) export_entries(entries, a.export_dir);

  std::vector<EntryReport> reports(entries.size());
  parallel_for(entries.size(), a.jobs ? a.jobs : default_jobs(),
               [&](std::size_t i) { reports[i] = verify_entry(entries[i]); });
  std::size_t failed = 0;
  for (const auto& r : reports) {
    emit(r, c.output, io.out, true);
    failed += !r.ok();
  }
  io.err << reports.size() - failed << "/" << reports.size() << " entries pass\n";
  return failed ? kViolation : kOk;
}

struct TheoremArgs {
  std::size_t nmax = 0;
  std::size_t nmin = 1;
  bool exhaustive = false;
  std::size_t random = 0;
  std::uint64_t seed = 1;
  std::size_t random_nmin = 15;
  std::size_t random_nmax = 200;
  std::string resume;
  unsigned jobs = 0;
};

struct Verdict {
  Json line;
  bool violation = false;
  Json witness;
};

Verdict judge(const Graph& g, std::string code) {
  const auto m = median_report(g);
  const bool heawood = is_heawood(g);
  Verdict v;
  v.line = Json{{"graph6", std::move(code)},
                {"n", g.order()},
                {"hl_index", m.hl_index},
                {"exact_at_most_one", m.exact_at_most_one},
                {"is_heawood", heawood}};
  v.violation = !m.exact_at_most_one && !heawood;
  if (v.violation) {
    v.witness = Json{{"finding", "R > 1 on a non-Heawood graph"},
                     {"graph6", v.line["graph6"]},
                     {"median", m},
                     {"inertia_at_1", inertia(g, Rational(1))},
                     {"inertia_at_minus_1", inertia(g, Rational(-1))},
                     {"spectrum", eigenvalues(g)}};
  }
  return v;
}

/// A batch of graphs with the graph6 text reported in each verdict.
using Batch = std::vector<std::pair<Graph, std::string>>;

int cmd_verify_theorem(const Common& c, const TheoremArgs& a, Io io) {
  const unsigned jobs = a.jobs ? a.jobs : default_jobs();
  std::size_t total = 0, violations = 0, heawood_count = 0;

  auto process = [&](const Batch& batch) {
    std::vector<Verdict> verdicts(batch.size());
    parallel_for(batch.size(), jobs,
                 [&](std::size_t i) { verdicts[i] = judge(batch[i].first, batch[i].second); });
    for (const auto& v : verdicts) {
      emit(v.line, c.output, io.out, true);
      if (v.violation) {
        io.err << v.witness.dump() << '\n';
        ++violations;
      }
      heawood_count += v.line["is_heawood"].get<bool>();
    }
    total += batch.size();
  };

  if (a.exhaustive) {
    if (a.nmax == 0) throw InputError("--exhaustive needs --nmax");
    if (a.nmax > kEnumerationLimit) {
      throw InputError("--nmax is capped at " + std::to_string(kEnumerationLimit));
    }
    std::size_t resume_n = 0;
    std::string resume_code;
    if (!a.resume.empty()) {
      const auto colon = a.resume.find(':');
      if (colon == std::string::npos) throw InputError("--resume expects <n>:<graph6>");
      auto [ptr, ec] = std::from_chars(a.resume.data(), a.resume.data() + colon, resume_n);
      if (ec != std::errc{} || ptr != a.resume.data() + colon) {
        throw InputError("--resume expects <n>:<graph6>");
      }
      resume_code = a.resume.substr(colon + 1);
    }
    const auto levels = enumerate_by_order(a.nmax);
    for (std::size_t n = std::max<std::size_t>(a.nmin, 1); n <= a.nmax; ++n) {
      if (n < resume_n) continue;
      Batch batch;
      for (const auto& g : levels[n - 1]) {
        std::string code = graph6_encode(g);
        if (n == resume_n && code <= resume_code) continue;
        batch.emplace_back(g, std::move(code));
      }
      process(batch);
    }
  } else if (a.random > 0) {
    if (a.random_nmin == 0 || a.random_nmin > a.random_nmax) {
      throw InputError("--random-nmin must be between 1 and --random-nmax");
    }
    Batch batch;
    std::mt19937_64 rng(a.seed);
    while (batch.size() < a.random) {
      GeneratorConfig cfg;
      cfg.n = a.random_nmin + uniform_below(rng, a.random_nmax - a.random_nmin + 1);
      cfg.seed = rng();
      Graph g = random_bipartite_subcubic(cfg);
      if (is_heawood(g)) continue;
      std::string code = graph6_encode(g);
      batch.emplace_back(std::move(g), std::move(code));
    }
    process(batch);
  } else {
    std::istringstream text(read_source(c.input, io.in));
    const std::string where = c.input == "-" ? "<stdin>" : c.input;
    Batch batch;
    std::string line;
    for (std::size_t lineno = 1; std::getline(text, line); ++lineno) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (line.empty() || line.starts_with('#')) continue;
      const std::string at = where + ":" + std::to_string(lineno);
      Graph g;
      try {
        g = graph6_decode(line);
      } catch (const ParseError& e) {
        throw InputError(at + ": " + e.what());
      }
      if (!g.is_subcubic() || !is_bipartite(g) || !is_connected(g)) {
        throw InputError(at + ": graph is not a connected bipartite subcubic graph");
      }
      batch.emplace_back(std::move(g), line);
      if (batch.size() == 1024) {
        process(batch);
        batch.clear();
      }
    }
    process(batch);
  }
  io.err << total << " graphs, " << violations << " violations, " << heawood_count
         << " Heawood\n";
  return violations ? kViolation : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact median-eigenvalue tools for bipartite subcubic graphs", "hlindex"};
  app.require_subcommand(1);
  Io io{in, out, err};

  Common common;
  std::function<int()> action;

  auto* eigs = app.add_subcommand("eigs", "Floating-point spectrum with residual bound");
  add_common(eigs, common);
  eigs->callback([&] { action = [&] { return cmd_eigs(common, io); }; });

  auto* median = app.add_subcommand("median", "Median eigenvalues and exact R <= 1 test");
  add_common(median, common);
  median->callback([&] { action = [&] { return cmd_median(common, io); }; });

  std::string threshold = "1";
  bool cross_check = false;
  auto* inert = app.add_subcommand("inertia", "Exact eigenvalue counts around a rational");
  add_common(inert, common);
  inert->add_option("--threshold", threshold, "Rational threshold p/q");
  inert->add_flag("--cross-check", cross_check, "Also count via Sturm sequences");
  inert->callback([&] { action = [&] { return cmd_inertia(common, threshold, cross_check, io); }; });

  std::size_t bound = kCharPolyDefaultBound;
  auto* cp = app.add_subcommand("charpoly", "Exact characteristic polynomial");
  add_common(cp, common);
  cp->add_option("--bound", bound, "Largest order accepted");
  cp->callback([&] { action = [&] { return cmd_charpoly(common, bound, io); }; });

  ImbalanceArgs imb;
  auto* im = app.add_subcommand("imbalance", "Imbalance of a partition; test or replay a move");
  add_common(im, common);
  im->add_option("--a", imb.a_side, "Comma-separated A side (default: bipartition class)");
  im->add_flag("--swap", imb.swap, "Exchange the two sides");
  im->add_option("--move", imb.move, "Comma-separated set C to test");
  im->add_option("--side", imb.side, "Label for the moved side")->check(CLI::IsMember({"A", "B"}));
  im->add_option("--replay", imb.replay, "Certificate JSON file to replay");
  im->callback([&] { action = [&] { return cmd_imbalance(common, imb, io); }; });

  SearchArgs search;
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--radius", search.radius, "Ball radius");
    sub->add_option("--max-size", search.max_size, "Largest candidate set");
    sub->add_option("--budget", search.budget, "Candidate sets per side");
    sub->add_flag("--no-patterns", search.no_patterns, "Skip pattern-directed candidates");
  };
  auto* fs_cmd = app.add_subcommand("find-set", "Search for an imbalance-increasing set");
  add_common(fs_cmd, common);
  add_search(fs_cmd);
  fs_cmd->add_option("--vertex", search.vertex, "Centre vertex");
  fs_cmd->add_flag("--swap", search.swap, "Exchange the bipartition classes");
  fs_cmd->callback([&] { action = [&] { return cmd_find_set(common, search, io); }; });

  auto* pipe = app.add_subcommand("pipeline", "Fraction pipeline over a separated vertex set");
  add_common(pipe, common);
  add_search(pipe);
  pipe->add_option("--separation", search.separation, "Minimum pairwise distance");
  pipe->add_option("--jobs", search.jobs, "Worker threads (default: HLINDEX_JOBS or cores)");
  pipe->callback([&] { action = [&] { return cmd_pipeline(common, search, io); }; });

  GenArgs gen;
  auto* gn = app.add_subcommand("gen", "Seeded random bipartite subcubic graphs");
  add_common(gn, common, false);
  gn->add_option("--n", gen.n, "Order")->check(CLI::PositiveNumber);
  gn->add_option("--seed", gen.seed, "Seed of the first graph");
  gn->add_option("--count", gen.count, "Number of graphs (seeds seed, seed+1, ...)");
  gn->add_option("--girth", gen.girth, "Girth floor for added edges");
  gn->add_option("--extra-edges", gen.extra_edges, "Edges added on top of the spanning tree");
  gn->add_flag("--saturate", gen.saturate, "Add edges until none is admissible");
  gn->add_flag("--disconnected", gen.disconnected, "Cut a few tree edges");
  gn->add_option("--graph-format", gen.graph_format, "Encoding of each graph")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  gn->callback([&] { action = [&] { return cmd_gen(common, gen, io); }; });

  CatalogArgs cat;
  auto* vc = app.add_subcommand("verify-catalog", "Verify catalog entries");
  add_common(vc, common, false);
  vc->add_option("--entry", cat.entries, "Entry name (repeatable; p_hat_<t> for any t)");
  vc->add_option("--export", cat.export_dir, "Write graph6 and JSON records to this directory");
  vc->add_option("--from", cat.from, "Verify JSON records from a file or directory");
  vc->add_option("--jobs", cat.jobs, "Worker threads (default: HLINDEX_JOBS or cores)");
  vc->callback([&] { action = [&] { return cmd_verify_catalog(common, cat, io); }; });

  TheoremArgs thm;
  auto* vt = app.add_subcommand("verify-theorem", "Exact R <= 1 verdicts over a graph stream");
  add_common(vt, common);
  vt->add_flag("--exhaustive", thm.exhaustive, "Enumerate every connected graph up to --nmax");
  vt->add_option("--nmax", thm.nmax, "Largest order enumerated");
  vt->add_option("--nmin", thm.nmin, "Smallest order enumerated");
  vt->add_option("--resume", thm.resume, "Skip enumeration up to and including <n>:<graph6>");
  vt->add_option("--random", thm.random, "Check this many seeded random graphs");
  vt->add_option("--seed", thm.seed, "Seed for --random");
  vt->add_option("--random-nmin", thm.random_nmin, "Smallest random order");
  vt->add_option("--random-nmax", thm.random_nmax, "Largest random order");
  vt->add_option("--jobs", thm.jobs, "Worker threads (default: HLINDEX_JOBS or cores)");
  vt->callback([&] { action = [&] { return cmd_verify_theorem(common, thm, io); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace hl::cli
