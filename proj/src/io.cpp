#include "milnor/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "milnor/error.hpp"

namespace milnor {

namespace {

struct Line {
  int number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line l{number, {}};
    for (std::string w; words >> w;) l.words.push_back(w);
    if (!l.words.empty()) out.push_back(std::move(l));
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::int64_t to_int(const Line& l, std::string_view s) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) fail(l.number, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

std::int64_t keyed_int(const Line& l, const std::string& word, const std::string& key) {
  if (word.rfind(key + "=", 0) != 0) fail(l.number, "expected " + key + "=<int>, got '" + word + "'");
  return to_int(l, std::string_view(word).substr(key.size() + 1));
}

std::int64_t header_d(const std::vector<Line>& lines, const std::string& word) {
  if (lines.empty()) throw Error(ErrorCode::ParseError, "line 1: empty input, expected '" + word + "'");
  const Line& h = lines.front();
  if (h.words.size() != 2 || h.words[0] != word) fail(h.number, "expected '" + word + " d=<int>'");
  return keyed_int(h, h.words[1], "d");
}

}  // namespace

std::string detect_format(const std::string& text) {
  const auto lines = tokenize(text);
  if (lines.empty()) return "";
  return lines.front().words.front();
}

Arrangement parse_arrangement(const std::string& text) {
  const auto lines = tokenize(text);
  const auto d = header_d(lines, "arrangement");
  std::vector<std::vector<int>> points;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.words[0] != "point:") fail(l.number, "expected 'point:'");
    std::vector<int> pt;
    for (std::size_t k = 1; k < l.words.size(); ++k) {
      const auto v = to_int(l, l.words[k]);
      if (!pt.empty() && v <= pt.back()) fail(l.number, "line indices must increase");
      pt.push_back(static_cast<int>(v));
    }
    points.push_back(std::move(pt));
  }
  return Arrangement::validate(points, static_cast<int>(d));
}

std::string write_arrangement(const Arrangement& arr) {
  std::ostringstream os;
  os << "arrangement d=" << arr.d() << '\n';
  for (const auto& pt : arr.points()) {
    os << "point:";
    for (int x : pt) os << ' ' << x;
    os << '\n';
  }
  return os.str();
}

std::vector<RationalLine> parse_lines(const std::string& text) {
  const auto lines = tokenize(text);
  const auto d = header_d(lines, "lines");
  std::vector<RationalLine> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.words[0] != "line:" || l.words.size() != 4) fail(l.number, "expected 'line: p/q p/q p/q'");
    RationalLine rl;
    for (int k = 0; k < 3; ++k) {
      const std::string& w = l.words[k + 1];
      const auto slash = w.find('/');
      if (slash == std::string::npos) fail(l.number, "expected p/q, got '" + w + "'");
      const auto p = to_int(l, std::string_view(w).substr(0, slash));
      const auto q = to_int(l, std::string_view(w).substr(slash + 1));
      if (q <= 0) fail(l.number, "denominator must be positive");
      rl.coeffs[k] = Rational(p, q);
    }
    out.push_back(rl);
  }
  if (static_cast<std::int64_t>(out.size()) != d)
    throw Error(ErrorCode::ParseError, "line 1: header says d=" + std::to_string(d) + " but " +
                                           std::to_string(out.size()) + " lines follow");
  return out;
}

std::string write_lines(const std::vector<RationalLine>& lines) {
  std::ostringstream os;
  os << "lines d=" << lines.size() << '\n';
  for (const auto& l : lines) {
    os << "line:";
    for (const auto& c : l.coeffs) os << ' ' << numerator(c) << '/' << denominator(c);
    os << '\n';
  }
  return os.str();
}

PlumbingGraph parse_plumbing(const std::string& text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines.front().words != std::vector<std::string>{"plumbing"})
    fail(lines.empty() ? 1 : lines.front().number, "expected 'plumbing'");
  PlumbingGraph g;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const auto& w = l.words;
    try {
      if (w[0] == "v" && w.size() == 4) {
        g.add_vertex_with_id(static_cast<int>(to_int(l, w[1])), keyed_int(l, w[2], "e"),
                             keyed_int(l, w[3], "g"));
      } else if (w[0] == "e" && w.size() == 4 && (w[3] == "+" || w[3] == "-")) {
        g.add_edge(static_cast<int>(to_int(l, w[1])), static_cast<int>(to_int(l, w[2])),
                   w[3] == "+" ? 1 : -1);
      } else if (w[0] == "a" && w.size() == 4 && w[2] == "->") {
        g.add_arrowhead_with_id(static_cast<int>(to_int(l, w[1])), static_cast<int>(to_int(l, w[3])));
      } else if (w[0] == "m" && w.size() == 3) {
        g.set_multiplicity(static_cast<int>(to_int(l, w[1])), to_int(l, w[2]));
      } else {
        fail(l.number, "unrecognised record '" + w[0] + "'");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      fail(l.number, e.what());
    }
  }
  return g;
}

std::string write_plumbing(const PlumbingGraph& g) {
  std::ostringstream os;
  os << "plumbing\n";
  for (const auto& [id, v] : g.vertices()) os << "v " << id << " e=" << v.euler << " g=" << v.genus << '\n';
  for (const auto& e : g.edges()) os << "e " << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
  for (const auto& a : g.arrowheads()) os << "a " << a.id << " -> " << a.vertex << '\n';
  for (const auto& [id, m] : g.multiplicities()) os << "m " << id << ' ' << m << '\n';
  return os.str();
}

std::string write_config_graph(const ConfigGraph& cg) {
  std::ostringstream os;
  os << "config\n";
  for (std::size_t i = 0; i < cg.nodes.size(); ++i) {
    const auto& n = cg.nodes[i];
    const char* kind = n.kind == ConfigGraph::Kind::Line ? "line"
                       : n.kind == ConfigGraph::Kind::Point ? "point"
                                                            : "arrow";
    os << "n " << i << ' ' << kind << ' ' << n.index << " (" << n.decoration[0] << ','
       << n.decoration[1] << ',' << n.decoration[2] << ") g=" << n.genus << '\n';
  }
  for (const auto& l : cg.links) os << "l " << l.a << ' ' << l.b << ' ' << l.weight << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << contents;
  if (!out) throw Error(ErrorCode::ParseError, "write failed for " + path);
}

}  // namespace milnor
