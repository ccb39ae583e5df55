#include "streamcert/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "streamcert/errors.hpp"

namespace streamcert {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line split into tokens; empty at end of input.
  std::vector<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      std::istringstream ls(line);
      std::vector<std::string> tokens;
      for (std::string t; ls >> t;) tokens.push_back(t);
      if (!tokens.empty()) return tokens;
    }
    return {};
  }
  int line() const { return line_no_; }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

long long to_int(const std::string& token, int line) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size()) throw ParseError(line, "expected an integer, got '" + token + "'");
  return v;
}

Node to_node(const std::string& token, int n, int line) {
  long long v = to_int(token, line);
  if (v < 0 || v >= n) throw ParseError(line, "node " + token + " out of range");
  return static_cast<Node>(v);
}

std::ifstream open(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ArgumentError("cannot open '" + path + "'");
  return f;
}

}  // namespace

Digraph read_graph(std::istream& in) {
  LineReader reader(in);
  auto head = reader.next();
  if (head.size() != 2) throw ParseError(reader.line(), "expected header 'n m'");
  long long n = to_int(head[0], reader.line());
  long long m = to_int(head[1], reader.line());
  if (n < 0 || m < 0) throw ParseError(reader.line(), "negative size in header");
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  for (long long i = 0; i < m; ++i) {
    auto t = reader.next();
    if (t.empty()) throw ParseError(reader.line(), "expected " + std::to_string(m) + " arcs");
    if (t.size() != 2) throw ParseError(reader.line(), "expected 'u v'");
    Arc a{to_node(t[0], static_cast<int>(n), reader.line()),
          to_node(t[1], static_cast<int>(n), reader.line())};
    if (a.from == a.to) throw ParseError(reader.line(), "self-loop");
    if (!seen.insert(a).second) throw ParseError(reader.line(), "duplicate arc");
    arcs.push_back(a);
  }
  if (!reader.next().empty()) throw ParseError(reader.line(), "trailing content");
  return Digraph(static_cast<int>(n), std::move(arcs));
}

Digraph read_graph_file(const std::string& path) {
  auto f = open(path);
  return read_graph(f);
}

void write_graph(std::ostream& out, const Digraph& g) {
  out << g.num_nodes() << ' ' << g.num_arcs() << '\n';
  for (const Arc& a : g.arcs()) out << a.from << ' ' << a.to << '\n';
}

ArcStream read_stream(std::istream& in) {
  LineReader reader(in);
  auto head = reader.next();
  if (head.size() != 2) throw ParseError(reader.line(), "expected header 'n ins|turn'");
  long long n = to_int(head[0], reader.line());
  if (n < 0) throw ParseError(reader.line(), "negative node count");
  ArcStream s;
  s.n = static_cast<int>(n);
  if (head[1] == "ins") {
    s.model = StreamModel::kInsertOnly;
  } else if (head[1] == "turn") {
    s.model = StreamModel::kTurnstile;
  } else {
    throw ParseError(reader.line(), "model must be 'ins' or 'turn'");
  }
  for (auto t = reader.next(); !t.empty(); t = reader.next()) {
    if (t.size() != 3 || (t[0] != "+" && t[0] != "-")) {
      throw ParseError(reader.line(), "expected '+ u v' or '- u v'");
    }
    s.updates.push_back({{to_node(t[1], s.n, reader.line()), to_node(t[2], s.n, reader.line())},
                         t[0] == "+" ? +1 : -1});
  }
  return s;
}

ArcStream read_stream_file(const std::string& path) {
  auto f = open(path);
  return read_stream(f);
}

void write_stream(std::ostream& out, const ArcStream& s) {
  out << s.n << ' ' << (s.model == StreamModel::kInsertOnly ? "ins" : "turn") << '\n';
  for (const ArcUpdate& u : s.updates) {
    out << (u.sign > 0 ? '+' : '-') << ' ' << u.arc.from << ' ' << u.arc.to << '\n';
  }
}

ArcStream read_graph_or_stream_file(const std::string& path) {
  auto f = open(path);
  std::string first;
  std::getline(f, first);
  std::istringstream ls(first);
  std::string a, b;
  ls >> a >> b;
  f.clear();
  f.seekg(0);
  if (b == "ins" || b == "turn") return read_stream(f);
  return insertion_stream(read_graph(f));
}

}  // namespace streamcert
