#include "cofree/instances.hpp"

#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cofree/codec.hpp"
#include "cofree/graph.hpp"

namespace cofree {

void X3CInstance::validate() const {
  if (q < 1) throw InvalidArgument("x3c: q must be positive");
  if (k < q) throw InvalidArgument("x3c: k must be at least q");
  if (static_cast<int>(triples.size()) != k)
    throw InvalidArgument("x3c: expected " + std::to_string(k) + " triples, got " +
                          std::to_string(triples.size()));
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& t = triples[i];
    for (int e : t)
      if (e < 0 || e >= ground_size())
        throw InvalidArgument("x3c: triple " + std::to_string(i) + " has element " +
                              std::to_string(e) + " outside the ground set");
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
      throw InvalidArgument("x3c: triple " + std::to_string(i) + " repeats an element");
  }
}

X3CInstance x3c_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("x3c json: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  X3CInstance inst;
  try {
    inst.q = j.at("q").get<int>();
    inst.k = j.at("k").get<int>();
    for (const auto& t : j.at("triples")) {
      if (!t.is_array() || t.size() != 3) throw InvalidArgument("x3c: each triple needs 3 elements");
      inst.triples.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("x3c json: ") + e.what());
  }
  inst.validate();
  return inst;
}

std::string x3c_to_json(const X3CInstance& inst) {
  nlohmann::json j;
  j["q"] = inst.q;
  j["k"] = inst.k;
  j["triples"] = nlohmann::json::array();
  for (const auto& t : inst.triples) j["triples"].push_back({t[0], t[1], t[2]});
  return j.dump();
}

void SatInstance::validate() const {
  if (num_vars < 0) throw InvalidArgument("sat: negative variable count");
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const auto& cl = clauses[c];
    for (const auto& lit : cl)
      if (lit.var < 0 || lit.var >= num_vars)
        throw InvalidArgument("sat: clause " + std::to_string(c) + " uses unknown variable");
    if (cl[0].var == cl[1].var || cl[0].var == cl[2].var || cl[1].var == cl[2].var)
      throw InvalidArgument("sat: clause " + std::to_string(c) +
                            " repeats a variable; clauses need three distinct variables");
  }
}

bool SatInstance::satisfied_by(const std::vector<bool>& assignment) const {
  for (const auto& cl : clauses) {
    bool sat = false;
    for (const auto& lit : cl)
      if (assignment[static_cast<std::size_t>(lit.var)] == lit.positive) sat = true;
    if (!sat) return false;
  }
  return true;
}

SatInstance sat_from_dimacs(std::string_view text) {
  SatInstance inst;
  bool have_header = false;
  long long declared_clauses = 0;
  std::vector<long long> pending;
  std::size_t pending_at = 0;
  std::size_t pos = 0;

  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r' ||
                                 text[pos] == '\n'))
      ++pos;
  };
  auto skip_line = [&] {
    while (pos < text.size() && text[pos] != '\n') ++pos;
  };
  auto read_int = [&](const char* what) {
    skip_space();
    long long v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc{} || ptr == text.data() + pos)
      throw ParseError(std::string("cnf: expected integer for ") + what, pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    return v;
  };

  while (true) {
    skip_space();
    if (pos >= text.size()) break;
    char ch = text[pos];
    if (ch == 'c') {
      skip_line();
      continue;
    }
    if (ch == '%') break;  // SATLIB trailer
    if (ch == 'p') {
      std::size_t at = pos;
      if (have_header) throw ParseError("cnf: duplicate problem line", at);
      ++pos;
      skip_space();
      if (text.substr(pos, 3) != "cnf") throw ParseError("cnf: expected 'p cnf'", pos);
      pos += 3;
      long long n = read_int("variable count");
      declared_clauses = read_int("clause count");
      if (n < 0 || declared_clauses < 0) throw ParseError("cnf: negative header value", at);
      inst.num_vars = static_cast<int>(n);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("cnf: clause before problem line", pos);
    if (pending.empty()) pending_at = pos;
    long long lit = read_int("literal");
    if (lit == 0) {
      if (pending.size() != 3)
        throw ParseError("cnf: clause has " + std::to_string(pending.size()) +
                             " literals; exactly 3 are required",
                         pending_at);
      Clause cl;
      for (std::size_t i = 0; i < 3; ++i) {
        long long l = pending[i];
        long long var = l < 0 ? -l : l;
        if (var > inst.num_vars) throw ParseError("cnf: variable out of range", pending_at);
        cl[i] = Literal{static_cast<int>(var - 1), l > 0};
      }
      if (cl[0].var == cl[1].var || cl[0].var == cl[2].var || cl[1].var == cl[2].var)
        throw ParseError("cnf: clause repeats a variable", pending_at);
      inst.clauses.push_back(cl);
      pending.clear();
    } else {
      pending.push_back(lit);
    }
  }
  if (!have_header) throw ParseError("cnf: missing problem line", text.size());
  if (!pending.empty()) throw ParseError("cnf: unterminated clause", pending_at);
  if (static_cast<long long>(inst.clauses.size()) != declared_clauses)
    throw ParseError("cnf: header declares " + std::to_string(declared_clauses) +
                         " clauses, found " + std::to_string(inst.clauses.size()),
                     text.size());
  return inst;
}

std::string sat_to_dimacs(const SatInstance& inst) {
  std::ostringstream out;
  out << "p cnf " << inst.num_vars << ' ' << inst.clauses.size() << '\n';
  for (const auto& cl : inst.clauses) {
    for (const auto& lit : cl) out << (lit.positive ? lit.var + 1 : -(lit.var + 1)) << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace cofree
