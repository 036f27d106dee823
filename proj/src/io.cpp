#include "posets/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace posets {

namespace {

using json = nlohmann::ordered_json;

int require_index(const json& v, const char* field) {
  if (!v.is_number_integer()) throw ParseError(std::string(field) + ": expected an integer");
  long long x = v.get<long long>();
  if (x < 0 || x > Poset::kMaxPoints) throw ParseError(std::string(field) + ": out of range");
  return static_cast<int>(x);
}

std::vector<int> read_interface(const json& doc, const char* field) {
  std::vector<int> out;
  if (!doc.contains(field)) return out;
  const json& arr = doc.at(field);
  if (!arr.is_array()) throw ParseError(std::string(field) + ": expected an array");
  for (const json& v : arr) out.push_back(require_index(v, field));
  return out;
}

}  // namespace

PosetDocument document_from_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("input is not valid JSON");
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  if (!doc.contains("size")) throw ParseError("size: missing");
  PosetDocument out;
  out.size = require_index(doc.at("size"), "size");
  if (doc.contains("relation")) {
    const json& rel = doc.at("relation");
    if (!rel.is_array()) throw ParseError("relation: expected an array of pairs");
    for (const json& pr : rel) {
      if (!pr.is_array() || pr.size() != 2)
        throw ParseError("relation: each entry must be a pair [i, j]");
      out.relation.emplace_back(require_index(pr[0], "relation"),
                                require_index(pr[1], "relation"));
    }
  }
  out.source = read_interface(doc, "source");
  out.target = read_interface(doc, "target");
  return out;
}

std::string document_to_json(const PosetDocument& doc) {
  json j;
  j["size"] = doc.size;
  json rel = json::array();
  for (auto [a, b] : doc.relation) rel.push_back(json::array({a, b}));
  j["relation"] = std::move(rel);
  j["source"] = doc.source;
  j["target"] = doc.target;
  return j.dump(2) + "\n";
}

Iposet document_to_iposet(const PosetDocument& doc) {
  Poset p = make_poset(doc.size, doc.relation);
  return make_iposet(std::move(p), doc.source, doc.target);
}

PosetDocument document_of(const Iposet& p) {
  PosetDocument doc;
  doc.size = p.size();
  doc.relation = covering_pairs(p.poset);
  doc.source = p.source;
  doc.target = p.target;
  return doc;
}

std::string dot_export(const Iposet& p) {
  const int n = p.size();
  std::vector<int> spos(n, -1), tpos(n, -1);
  for (int i = 0; i < p.src_arity(); ++i) spos[p.source[i]] = i + 1;
  for (int i = 0; i < p.tgt_arity(); ++i) tpos[p.target[i]] = i + 1;

  std::ostringstream out;
  out << "digraph iposet {\n  rankdir=LR;\n";
  for (int x = 0; x < n; ++x) {
    const char* shape = "circle";
    if (spos[x] > 0 && tpos[x] > 0)
      shape = "diamond";
    else if (spos[x] > 0)
      shape = "invtriangle";
    else if (tpos[x] > 0)
      shape = "triangle";
    out << "  n" << x << " [shape=" << shape << ", label=\"" << x;
    if (spos[x] > 0) out << "\\ns" << spos[x];
    if (tpos[x] > 0) out << "\\nt" << tpos[x];
    out << "\"];\n";
  }
  for (auto [a, b] : covering_pairs(p.poset)) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace posets
