#include "posets/gpterm.hpp"

#include <algorithm>

namespace posets {

GpTerm GpTerm::glue_of(std::vector<GpTerm> cs) {
  std::vector<GpTerm> flat;
  for (auto& c : cs) {
    if (c.kind == Kind::Glue)
      for (auto& g : c.children) flat.push_back(std::move(g));
    else
      flat.push_back(std::move(c));
  }
  if (flat.empty()) return empty();
  if (flat.size() == 1) return std::move(flat[0]);
  return {Kind::Glue, false, false, std::move(flat)};
}

GpTerm GpTerm::par_of(std::vector<GpTerm> cs) {
  std::vector<GpTerm> flat;
  for (auto& c : cs) {
    if (c.kind == Kind::Par)
      for (auto& g : c.children) flat.push_back(std::move(g));
    else if (c.kind == Kind::Empty)
      continue;  // unit
    else
      flat.push_back(std::move(c));
  }
  if (flat.empty()) return empty();
  if (flat.size() == 1) return std::move(flat[0]);
  return {Kind::Par, false, false, std::move(flat)};
}

Iposet eval(const GpTerm& t) {
  switch (t.kind) {
    case GpTerm::Kind::Empty:
      return identity(0);
    case GpTerm::Kind::Singleton:
      return idpos(t.has_source ? 1 : 0, t.has_target ? 1 : 0, 1);
    case GpTerm::Kind::Glue: {
      Iposet acc = eval(t.children.front());
      for (std::size_t i = 1; i < t.children.size(); ++i) acc = glue(acc, eval(t.children[i]));
      return acc;
    }
    case GpTerm::Kind::Par: {
      Iposet acc = identity(0);
      for (const auto& c : t.children) acc = par(acc, eval(c));
      return acc;
    }
  }
  return identity(0);
}

int alternation_depth(const GpTerm& t) {
  if (t.children.empty()) return 0;
  int d = 0;
  for (const auto& c : t.children) {
    int cd = alternation_depth(c);
    if (c.kind == GpTerm::Kind::Glue || c.kind == GpTerm::Kind::Par) ++cd;
    d = std::max(d, cd);
  }
  return d;
}

std::string term_to_string(const GpTerm& t) {
  switch (t.kind) {
    case GpTerm::Kind::Empty:
      return "0";
    case GpTerm::Kind::Singleton: {
      std::string s;
      if (t.has_source) s += ">";
      s += ".";
      if (t.has_target) s += ">";
      return s;
    }
    case GpTerm::Kind::Glue:
    case GpTerm::Kind::Par: {
      const bool gl = t.kind == GpTerm::Kind::Glue;
      std::string out;
      for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i) out += gl ? " * " : " || ";
        const auto& c = t.children[i];
        bool parens = gl && c.kind == GpTerm::Kind::Par;
        if (parens) out += "(";
        out += term_to_string(c);
        if (parens) out += ")";
      }
      return out;
    }
  }
  return {};
}

namespace {

struct TermParser {
  std::string_view text;
  std::size_t at = 0;

  void skip_ws() {
    while (at < text.size() && (text[at] == ' ' || text[at] == '\t' || text[at] == '\n'))
      ++at;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (text.substr(at, tok.size()) == tok) {
      at += tok.size();
      return true;
    }
    return false;
  }

  GpTerm parse_atom() {
    skip_ws();
    if (eat("(")) {
      GpTerm t = parse_par();
      if (!eat(")")) throw ParseError("expected ')' in term");
      return t;
    }
    if (eat("0")) return GpTerm::empty();
    if (eat(">.>")) return GpTerm::singleton(true, true);
    if (eat(">.")) return GpTerm::singleton(true, false);
    if (eat(".>")) return GpTerm::singleton(false, true);
    if (eat(".")) return GpTerm::singleton(false, false);
    throw ParseError("expected a term leaf");
  }

  GpTerm parse_glue() {
    std::vector<GpTerm> cs{parse_atom()};
    while (eat("*")) cs.push_back(parse_atom());
    return GpTerm::glue_of(std::move(cs));
  }

  GpTerm parse_par() {
    std::vector<GpTerm> cs{parse_glue()};
    while (eat("||")) cs.push_back(parse_glue());
    return GpTerm::par_of(std::move(cs));
  }
};

}  // namespace

GpTerm term_from_string(std::string_view text) {
  TermParser p{text};
  GpTerm t = p.parse_par();
  p.skip_ws();
  if (p.at != text.size()) throw ParseError("trailing characters after term");
  return t;
}

}  // namespace posets
