#include <algorithm>
#include <array>
#include <cctype>

#include "cofree/cli.hpp"
#include "cofree/codec.hpp"

namespace cofree::cli {

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Graph parse() {
    Graph g = sum();
    skip();
    if (pos_ != text_.size()) throw ParseError("pattern: unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return g;
  }

private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::optional<int> number() {
    skip();
    std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 10000) throw ParseError("pattern: number too large", start);
      ++pos_;
    }
    if (pos_ == start) return std::nullopt;
    return static_cast<int>(v);
  }

  int need_number() {
    std::size_t at = pos_;
    auto v = number();
    if (!v) throw ParseError("pattern: expected a number", at);
    return *v;
  }

  Graph sum() {
    Graph g = term();
    while (eat('+')) g = disjoint_union(g, term());
    return g;
  }

  Graph term() {
    skip();
    std::size_t at = pos_;
    int count = number().value_or(1);
    if (count < 1) throw ParseError("pattern: repetition count must be positive", at);
    Graph one = atom();
    Graph g(0);
    for (int i = 0; i < count; ++i) g = disjoint_union(g, one);
    return g;
  }

  Graph atom() {
    skip();
    std::size_t at = pos_;
    if (text_.substr(pos_, 3) == "co(") {
      pos_ += 3;
      Graph inner = sum();
      if (!eat(')')) throw ParseError("pattern: expected ')'", pos_);
      return complement(inner);
    }
    if (pos_ >= text_.size()) throw ParseError("pattern: expected a graph name", at);
    char family = text_[pos_++];
    try {
      switch (family) {
        case 'P':
          return path_graph(need_number());
        case 'C':
          return cycle_graph(need_number());
        case 'K': {
          int a = need_number();
          if (eat(',')) {
            int r = need_number();
            if (a != 1) throw ParseError("pattern: only stars K1,r are supported", at);
            return star_graph(r);
          }
          return complete_graph(a);
        }
        case 'S': {
          int h = need_number();
          if (!eat(',')) throw ParseError("pattern: expected ','", pos_);
          int i = need_number();
          if (!eat(',')) throw ParseError("pattern: expected ','", pos_);
          int j = need_number();
          std::array<int, 3> legs{h, i, j};
          std::sort(legs.begin(), legs.end());
          return make_named(claw_spec(legs[0], legs[1], legs[2]));
        }
        default:
          throw ParseError("pattern: unknown graph family '" + std::string(1, family) + "'", at);
      }
    } catch (const InvalidArgument& e) {
      throw ParseError(std::string("pattern: ") + e.what(), at);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_pattern(std::string_view text) { return Parser(text).parse(); }

}  // namespace cofree::cli
