#include "cofree/codec.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace cofree {

namespace {

constexpr int kBias = 63;

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63u) + kBias));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63u) + kBias));
  }
}

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", pos);
  int c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126)
    throw ParseError("graph6: invalid character '" + std::string(1, text[pos]) + "'", pos);
  return c - kBias;
}

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space_in_line() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'))
      ++pos;
  }
  void skip_blank() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() const { return pos >= text.size(); }

  long long integer(const char* what) {
    skip_space_in_line();
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + pos)
      throw ParseError(std::string("expected integer for ") + what, pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }

  void end_of_line() {
    skip_space_in_line();
    if (pos < text.size() && text[pos] != '\n')
      throw ParseError("unexpected trailing characters", pos);
    if (pos < text.size()) ++pos;
  }

  void skip_line() {
    while (pos < text.size() && text[pos] != '\n') ++pos;
    if (pos < text.size()) ++pos;
  }
};

std::string_view first_line(std::string_view text) {
  auto end = text.find('\n');
  auto line = text.substr(0, end);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  append_size(out, n);
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = first_line(text);
  std::size_t pos = 0;
  if (text.substr(0, 10) == ">>graph6<<") pos = 10;
  std::uint64_t n = 0;
  if (pos < text.size() && text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      pos += 2;
      for (int k = 0; k < 6; ++k) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos++));
    } else {
      pos += 1;
      for (int k = 0; k < 3; ++k) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos++));
    }
  } else {
    n = static_cast<std::uint64_t>(sextet(text, pos++));
  }
  if (n > 1u << 20) throw ParseError("graph6: order too large", 0);
  int order = static_cast<int>(n);
  std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() - pos < need) throw ParseError("graph6: unexpected end of input", text.size());
  if (text.size() - pos > need) throw ParseError("graph6: trailing characters", pos + need);

  GraphBuilder b(order);
  std::uint64_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      std::size_t at = pos + static_cast<std::size_t>(k / 6);
      int s = sextet(text, at);
      if ((s >> (5 - static_cast<int>(k % 6))) & 1) b.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (pairs % 6 != 0) {
    std::size_t at = pos + need - 1;
    int pad = static_cast<int>(6 - pairs % 6);
    if (sextet(text, at) & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits", at);
  }
  return b.build();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_edge_list(std::string_view text) {
  Cursor c{text};
  c.skip_blank();
  std::size_t header = c.pos;
  long long n = c.integer("vertex count");
  long long m = c.integer("edge count");
  if (n < 0 || m < 0) throw ParseError("edge list: negative header value", header);
  c.end_of_line();
  GraphBuilder b(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    c.skip_blank();
    std::size_t at = c.pos;
    long long u = c.integer("edge endpoint");
    long long v = c.integer("edge endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge list: endpoint out of range", at);
    if (u == v) throw ParseError("edge list: self-loop", at);
    b.add_edge(static_cast<int>(u), static_cast<int>(v));
    c.end_of_line();
  }
  c.skip_blank();
  if (!c.at_end()) throw ParseError("edge list: more edges than the header declares", c.pos);
  return b.build();
}

std::string to_dimacs_col(const Graph& g, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "c " << comment << '\n';
  out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Graph from_dimacs_col(std::string_view text) {
  Cursor c{text};
  std::optional<GraphBuilder> b;
  long long n = 0;
  while (true) {
    c.skip_blank();
    if (c.at_end()) break;
    std::size_t at = c.pos;
    char tag = text[c.pos];
    if (tag == 'c') {
      c.skip_line();
    } else if (tag == 'p') {
      if (b) throw ParseError("dimacs: duplicate problem line", at);
      ++c.pos;
      c.skip_space_in_line();
      auto word_end = c.pos;
      while (word_end < text.size() && std::isalpha(static_cast<unsigned char>(text[word_end])))
        ++word_end;
      auto kind = text.substr(c.pos, word_end - c.pos);
      if (kind != "edge" && kind != "col") throw ParseError("dimacs: expected 'p edge'", c.pos);
      c.pos = word_end;
      n = c.integer("vertex count");
      c.integer("edge count");
      if (n < 0) throw ParseError("dimacs: negative vertex count", at);
      c.end_of_line();
      b.emplace(static_cast<int>(n));
    } else if (tag == 'e') {
      if (!b) throw ParseError("dimacs: edge before problem line", at);
      ++c.pos;
      long long u = c.integer("edge endpoint");
      long long v = c.integer("edge endpoint");
      if (u < 1 || v < 1 || u > n || v > n) throw ParseError("dimacs: endpoint out of range", at);
      if (u == v) throw ParseError("dimacs: self-loop", at);
      b->add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
      c.end_of_line();
    } else {
      throw ParseError(std::string("dimacs: unknown line type '") + tag + "'", at);
    }
  }
  if (!b) throw ParseError("dimacs: missing problem line", text.size());
  return b->build();
}

GraphFormat detect_format(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  auto line = first_line(text.substr(pos));
  if (!line.empty() && (line[0] == 'c' || line[0] == 'p') &&
      (line.size() == 1 || line[1] == ' ' || line[1] == '\t'))
    return GraphFormat::DimacsCol;
  bool numeric = !line.empty();
  for (char ch : line)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == ' ' || ch == '\t')) numeric = false;
  return numeric && line.find_first_of(" \t") != std::string_view::npos ? GraphFormat::EdgeList
                                                                       : GraphFormat::Graph6;
}

Graph parse_graph(std::string_view text) {
  switch (detect_format(text)) {
    case GraphFormat::DimacsCol: return from_dimacs_col(text);
    case GraphFormat::EdgeList: return from_edge_list(text);
    case GraphFormat::Graph6: break;
  }
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  try {
    return from_graph6(text.substr(pos));
  } catch (const ParseError& e) {
    throw ParseError(e.what(), e.offset() + pos);
  }
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      try {
        out.push_back(from_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), e.offset() + pos);
      }
    }
    pos = end + 1;
  }
  return out;
}

std::string encode(const Graph& g, GraphFormat fmt) {
  switch (fmt) {
    case GraphFormat::Graph6: return to_graph6(g) + "\n";
    case GraphFormat::EdgeList: return to_edge_list(g);
    case GraphFormat::DimacsCol: return to_dimacs_col(g);
  }
  return {};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write file: " + path);
  out << content;
}

}  // namespace cofree
