// mfb: Milnor fiber boundaries of line arrangements from the command line.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "milnor/batch.hpp"
#include "milnor/boundary.hpp"
#include "milnor/calculus.hpp"
#include "milnor/corpus.hpp"
#include "milnor/error.hpp"
#include "milnor/io.hpp"
#include "milnor/reconstruct.hpp"

using namespace milnor;

namespace {

struct Options {
  std::string in;
  std::string out;
  std::string format;
  bool trace = false;
  std::optional<std::uint64_t> seed;
  int max_d = 7;
  std::string family;
  int d = 0;
  int a = 0;
  int b = 0;
  bool gnsz = false;
  bool g = false;
  bool config = false;
};

std::string input_text(const Options& o) {
  if (o.in.empty() || o.in == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  return read_file(o.in);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") std::cout << text;
  else write_file(o.out, text);
}

std::string format_of(const Options& o, const std::string& text) {
  if (!o.format.empty()) return o.format;
  const auto f = detect_format(text);
  if (f.empty()) return "plumbing";  // an empty file is the empty graph
  return f;
}

Arrangement read_arrangement(const Options& o) {
  const auto text = input_text(o);
  const auto f = format_of(o, text);
  if (f == "arrangement") return parse_arrangement(text);
  if (f == "lines") return from_lines(parse_lines(text));
  throw Error(ErrorCode::ParseError, "line 1: expected an arrangement or lines file, got '" + f + "'");
}

// Plumbing input, or an arrangement turned into G_NSz.
PlumbingGraph read_graph(const Options& o) {
  const auto text = input_text(o);
  const auto f = format_of(o, text);
  if (f == "plumbing") return text.find_first_not_of(" \t\r\n") == std::string::npos ? PlumbingGraph{} : parse_plumbing(text);
  if (f == "arrangement") return build_gnsz(parse_arrangement(text));
  if (f == "lines") return build_gnsz(from_lines(parse_lines(text)));
  throw Error(ErrorCode::ParseError, "line 1: unknown format '" + f + "'");
}

Arrangement relabel(const Arrangement& arr, std::uint64_t seed) {
  std::vector<int> perm(arr.d());
  std::iota(perm.begin(), perm.end(), 1);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<int>> pts;
  for (const auto& p : arr.points()) {
    std::vector<int> q;
    for (int x : p) q.push_back(perm[x - 1]);
    std::sort(q.begin(), q.end());
    pts.push_back(q);
  }
  return Arrangement::validate(pts, arr.d());
}

Arrangement family_instance(const Options& o) {
  const std::string& f = o.family;
  if (f == "pappus") return pappus();
  if (f == "ceva") return ceva();
  if (f == "broken_pappus") return broken_pappus();
  const auto kind = family_from_string(f);
  if (!kind) throw Error(ErrorCode::ParamOutOfRange, "unknown family '" + f + "'");
  if (*kind == Family::DoublePencil) return make_family(*kind, o.a, o.b);
  return make_family(*kind, o.d);
}

int cmd_gen(const Options& o) {
  if (o.family == "all") {
    if (o.out.empty()) throw Error(ErrorCode::ParseError, "gen --family all needs --out <dir>");
    std::filesystem::create_directories(o.out);
    for (const auto& e : corpus(o.max_d)) {
      const auto arr = o.seed ? relabel(e.arr, *o.seed) : e.arr;
      write_file((std::filesystem::path(o.out) / (e.key + ".arr")).string(), write_arrangement(arr));
    }
    return 0;
  }
  if (o.format == "lines") {
    if (o.family == "pappus") return emit(o, write_lines(pappus_lines())), 0;
    if (o.family == "ceva") return emit(o, write_lines(ceva_lines())), 0;
    throw Error(ErrorCode::ParamOutOfRange, "only pappus and ceva have line coordinates");
  }
  auto arr = family_instance(o);
  if (o.seed) arr = relabel(arr, *o.seed);
  emit(o, write_arrangement(arr));
  return 0;
}

int cmd_build(const Options& o) {
  const auto arr = read_arrangement(o);
  if (o.config) emit(o, write_config_graph(build_config_graph(arr)));
  else if (o.g) emit(o, write_plumbing(build_g(arr)));
  else emit(o, write_plumbing(build_gnsz(arr)));
  return 0;
}

int cmd_normalize(const Options& o) {
  NormalizeOptions opts;
  opts.seed = o.seed;
  opts.trace = o.trace;
  const auto res = normalize(read_graph(o), opts);
  emit(o, write_plumbing(res.graph));
  for (const auto& line : res.trace) std::cerr << line << '\n';
  return 0;
}

int cmd_reconstruct(const Options& o) {
  NormalizeOptions opts;
  opts.seed = o.seed;
  const auto cls = classify_boundary(normalize(read_graph(o), opts).graph);
  std::ostringstream os;
  os << "class=" << to_string(cls.kind) << " d=" << cls.d;
  if (cls.kind == BoundaryClass::Kind::DoublePencil) os << " a=" << cls.a << " b=" << cls.b;
  os << '\n';
  if (cls.poset) {
    if (!cls.poset->pair_axiom_ok) os << "# warning: the poset violates the pair axiom\n";
    os << "arrangement d=" << cls.poset->incidence.lines << '\n';
    for (const auto& p : cls.poset->incidence.points) {
      os << "point:";
      for (int x : p) os << ' ' << x;
      os << '\n';
    }
  }
  emit(o, os.str());
  return 0;
}

int cmd_roundtrip(const Options& o) {
  if (o.family == "all") {
    const auto rows = roundtrip_parallel(corpus(o.max_d));
    emit(o, format_table(rows));
    const auto bad = std::count_if(rows.begin(), rows.end(), [](const BatchRow& r) { return !r.ok; });
    std::cerr << rows.size() << " instances, " << bad << " failed\n";
    return bad == 0 ? 0 : 1;
  }
  const auto arr = o.family.empty() ? read_arrangement(o) : family_instance(o);
  const auto rep = roundtrip(arr);
  emit(o, rep.summary() + "\nmoves=" + std::to_string(rep.moves) + "\n");
  return rep.iso ? 0 : 1;
}

int cmd_invariants(const Options& o) {
  const auto g = without_arrowheads(read_graph(o));
  const auto h = first_homology(g);
  const auto nf = is_normal_form(g);
  std::ostringstream os;
  os << "vertices=" << g.vertex_count() << '\n'
     << "edges=" << g.edges().size() << '\n'
     << "components=" << g.components().size() << '\n'
     << "betti=" << h.betti << '\n'
     << "torsion=";
  for (std::size_t i = 0; i < h.torsion.size(); ++i) os << (i ? "," : "") << h.torsion[i];
  os << '\n' << "normal_form=" << (nf.ok ? "yes" : "no") << '\n';
  emit(o, os.str());
  return 0;
}

int cmd_export_dot(const Options& o) {
  const auto text = input_text(o);
  const auto f = format_of(o, text);
  PlumbingGraph g;
  if (f == "plumbing") {
    g = text.find_first_not_of(" \t\r\n") == std::string::npos ? PlumbingGraph{} : parse_plumbing(text);
  } else {
    const auto arr = f == "lines" ? from_lines(parse_lines(text)) : parse_arrangement(text);
    g = o.g ? build_g(arr) : build_gnsz(arr);
  }
  emit(o, to_dot(g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Milnor fiber boundaries of line arrangements"};
  app.require_subcommand(1);
  Options o;
  std::uint64_t seed = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--in", o.in, "input file (default stdin)");
    sub->add_option("--out", o.out, "output file (default stdout)");
    sub->add_option("--format", o.format, "input format")
        ->check(CLI::IsMember({"arrangement", "lines", "plumbing"}));
    sub->add_flag("--trace", o.trace, "log applied moves to stderr");
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--max-d", o.max_d, "largest d for --family all");
    sub->add_option("--family", o.family,
                    "pencil, near_pencil, double_pencil, generic, pappus, ceva, broken_pappus or all");
    sub->add_option("--d", o.d, "number of lines");
    sub->add_option("--a", o.a, "first pencil size");
    sub->add_option("--b", o.b, "second pencil size");
  };

  auto* gen = app.add_subcommand("gen", "write an arrangement");
  auto* build = app.add_subcommand("build", "build a plumbing graph from an arrangement");
  auto* norm = app.add_subcommand("normalize", "reduce a plumbing graph to normal form");
  auto* rec = app.add_subcommand("reconstruct", "classify a boundary and recover the poset");
  auto* rt = app.add_subcommand("roundtrip", "arrangement -> boundary -> arrangement");
  auto* inv = app.add_subcommand("invariants", "homology and basic counts");
  auto* dot = app.add_subcommand("export-dot", "Graphviz output");
  for (auto* s : {gen, build, norm, rec, rt, inv, dot}) common(s);
  auto* which = build->add_option_group("graph");
  which->add_flag("--gnsz", o.gnsz, "G_NSz (default)");
  which->add_flag("--g", o.g, "the almost minimal graph G");
  which->add_flag("--config", o.config, "the configuration graph");
  which->require_option(0, 1);
  dot->add_flag("--g", o.g, "draw G instead of G_NSz for arrangement input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  for (auto* s : {gen, build, norm, rec, rt, inv, dot})
    if (s->count("--seed")) o.seed = seed;

  try {
    if (*gen) return cmd_gen(o);
    if (*build) return cmd_build(o);
    if (*norm) return cmd_normalize(o);
    if (*rec) return cmd_reconstruct(o);
    if (*rt) return cmd_roundtrip(o);
    if (*inv) return cmd_invariants(o);
    if (*dot) return cmd_export_dot(o);
  } catch (const Error& e) {
    std::cerr << "mfb: " << e.what() << '\n';
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "mfb: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
