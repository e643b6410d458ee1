#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "commutant/chain.hpp"

namespace commutant {

/// Line-oriented chain-definition format:
///
///   # comment
///   [generators]
///   l1 l2 l3
///   [brackets]
///   l1 l2 = i*l3
///   l2 l3 = i*l1 + 2/3*l2
///   [subalgebra]
///   l3
///
/// Omitted brackets are zero. Names are [A-Za-z_][A-Za-z0-9_]*; "i" is
/// reserved for the imaginary unit. Serialization is canonical and
/// bit-stable: sections in this order, generators in stored order, bracket
/// lines sorted by index pair, terms by target index.
namespace chain_format {

inline bool valid_name(const std::string& s) {
  if (s.empty() || s == "i") return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace chain_format

inline ChainSpec parse_chain_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  enum class Section { none, generators, brackets, subalgebra };
  Section section = Section::none;

  std::vector<std::string> generators;
  struct BracketLine {
    int lineno;
    std::string lhs_a, lhs_b, rhs;
  };
  std::vector<BracketLine> bracket_lines;
  std::vector<std::pair<int, std::string>> sub_names;
  bool seen_any = false;

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    seen_any = true;

    if (line.front() == '[') {
      if (line == "[generators]")
        section = Section::generators;
      else if (line == "[brackets]")
        section = Section::brackets;
      else if (line == "[subalgebra]")
        section = Section::subalgebra;
      else
        throw ParseError("syntax", "unknown section header '" + line + "'",
                         lineno, 1);
      continue;
    }

    switch (section) {
      case Section::none:
        throw ParseError("syntax", "content before any section header", lineno,
                         1);
      case Section::generators: {
        std::istringstream ls(line);
        std::string name;
        while (ls >> name) {
          if (!chain_format::valid_name(name))
            throw ParseError("syntax", "invalid generator name '" + name + "'",
                             lineno, 1);
          generators.push_back(name);
        }
        break;
      }
      case Section::brackets: {
        auto eq = line.find('=');
        if (eq == std::string::npos)
          throw ParseError("syntax", "bracket line without '='", lineno,
                           int(line.size()));
        std::istringstream lhs(line.substr(0, eq));
        std::string a, bname, extra;
        if (!(lhs >> a >> bname) || (lhs >> extra))
          throw ParseError("syntax",
                           "bracket left-hand side must be two generator names",
                           lineno, 1);
        bracket_lines.push_back({lineno, a, bname, line.substr(eq + 1)});
        break;
      }
      case Section::subalgebra: {
        std::istringstream ls(line);
        std::string name;
        while (ls >> name) sub_names.emplace_back(lineno, name);
        break;
      }
    }
  }

  if (!seen_any) throw ParseError("syntax", "empty chain document", 1, 1);
  if (generators.empty())
    throw ParseError("syntax", "missing or empty [generators] section", lineno,
                     1);

  LieAlgebraSpec alg("file chain", generators);
  auto index_of = [&](const std::string& name, int at_line) {
    auto ix = alg.index_of(name);
    if (!ix)
      throw ParseError("unknown-generator", "unknown generator '" + name + "'",
                       at_line, 1);
    return *ix;
  };

  for (const auto& bl : bracket_lines) {
    int i = index_of(bl.lhs_a, bl.lineno);
    int j = index_of(bl.lhs_b, bl.lineno);
    if (i == j)
      throw ParseError("syntax", "bracket of a generator with itself",
                       bl.lineno, 1);
    Polynomial rhs(alg.dim());
    try {
      rhs = Polynomial::parse(bl.rhs, alg.generators());
    } catch (const ParseError& pe) {
      throw ParseError(pe.code(), pe.what(), bl.lineno, pe.column());
    }
    std::vector<BracketTerm> terms;
    for (const auto& t : rhs.terms()) {
      if (t.mono.total_degree() != 1)
        throw ParseError("syntax",
                         "bracket right-hand side must be linear in generators",
                         bl.lineno, 1);
      for (std::size_t v = 0; v < alg.dim(); ++v)
        if (t.mono.deg(v)) terms.push_back({int(v), t.coeff});
    }
    int a = std::min(i, j), b2 = std::max(i, j);
    for (auto& t : terms)
      alg.add_bracket_term(a, b2, t.target,
                           i < j ? t.coeff : -t.coeff);
  }

  std::vector<int> sub;
  for (const auto& [ln, name] : sub_names) sub.push_back(index_of(name, ln));
  if (sub.empty())
    throw ParseError("syntax", "missing or empty [subalgebra] section", lineno,
                     1);

  ChainSpec chain = [&]() {
    try {
      return ChainSpec(std::move(alg), std::move(sub));
    } catch (const ValidationError& ve) {
      throw ParseError("subalgebra-not-closed", ve.what());
    }
  }();

  ValidationReport rep = validate_structure(chain.algebra());
  if (!rep.passed) {
    std::string msg = "Jacobi identity fails on triples:";
    for (const auto& t : rep.failing_triples) {
      msg += " (" + chain.algebra().generators()[t[0]] + "," +
             chain.algebra().generators()[t[1]] + "," +
             chain.algebra().generators()[t[2]] + ")";
      if (msg.size() > 300) {
        msg += " ...";
        break;
      }
    }
    throw ParseError("jacobi-failure", msg);
  }
  return chain;
}

/// Canonical serialization; parse_chain_file(serialize_chain(c)) == c.
inline std::string serialize_chain(const ChainSpec& chain) {
  const auto& alg = chain.algebra();
  std::string out = "[generators]\n";
  for (std::size_t k = 0; k < alg.dim(); ++k) {
    if (k) out += " ";
    out += alg.generators()[k];
  }
  out += "\n[brackets]\n";
  for (const auto& [key, terms] : alg.table()) {
    Polynomial rhs(alg.dim());
    for (const auto& t : terms)
      rhs += Polynomial::monomial_term(Monomial::unit(alg.dim(), t.target),
                                       t.coeff);
    // terms of a linear polynomial sort by generator order under grevlex
    // (x_a > x_b for a < b), which is the canonical emission order
    out += alg.generators()[key.first] + " " + alg.generators()[key.second] +
           " = " + rhs.str(alg.generators()) + "\n";
  }
  out += "[subalgebra]\n";
  std::string subline;
  for (int u : chain.subalgebra()) {
    if (!subline.empty()) subline += " ";
    subline += alg.generators()[u];
  }
  out += subline + "\n";
  return out;
}

}  // namespace commutant
