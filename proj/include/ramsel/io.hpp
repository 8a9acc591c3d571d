#pragma once

// JSON bindings: inline literals for streams, sequences, partitions, fronts,
// families and closed trees; the labeled-tree file format; report rendering.
// A spec string is resolved as: existing file path, inline JSON ('{' or '['),
// otherwise a registered name.

#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramsel/borelcodes.hpp"
#include "ramsel/fronts.hpp"
#include "ramsel/ideals.hpp"
#include "ramsel/selectors.hpp"
#include "ramsel/streams.hpp"
#include "ramsel/workbench.hpp"

namespace ramsel::io {

using json = nlohmann::json;

inline json spec_to_json(const std::string& spec) {
  if (!spec.empty() && (spec[0] == '{' || spec[0] == '[')) {
    return json::parse(spec);
  }
  std::ifstream in(spec);
  if (in.good()) {
    json j;
    in >> j;
    return j;
  }
  return json(spec);  // bare registered name
}

inline nat get_nat(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_unsigned())
    throw std::invalid_argument(std::string("missing natural field: ") +
                                field);
  return j[field].get<nat>();
}

inline NatStream stream_from_json(const json& j) {
  if (j.is_string()) return stream_by_name(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("stream literal needs a kind");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "arith")
    return NatStream::arithmetic(get_nat(j, "a"), get_nat(j, "d"));
  if (kind == "pow") return NatStream::powers(get_nat(j, "b"));
  if (kind == "explicit-prefix") {
    if (!j.contains("prefix") || !j["prefix"].is_array())
      throw std::invalid_argument("explicit-prefix needs a prefix array");
    std::vector<nat> pre;
    for (const auto& e : j["prefix"]) pre.push_back(e.get<nat>());
    return NatStream::prefix_then(FinSet(pre), stream_from_json(j["then"]));
  }
  throw std::invalid_argument("unknown stream kind: " + kind);
}

inline NatStream stream_from_spec(const std::string& spec) {
  return stream_from_json(spec_to_json(spec));
}

inline DecreasingSeq seq_from_json(const json& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name.rfind("geometric-", 0) == 0)
      return geometric_tails(std::stoul(name.substr(10)));
    throw std::invalid_argument("unknown sequence name: " + name);
  }
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("sequence literal needs a kind");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "geometric-tails") return geometric_tails(get_nat(j, "b"));
  if (kind == "tail-chain") {
    std::vector<nat> offsets;
    for (const auto& e : j.at("offsets")) offsets.push_back(e.get<nat>());
    return tail_chain(stream_from_json(j.at("base")), std::move(offsets));
  }
  throw std::invalid_argument("unknown sequence kind: " + kind);
}

inline DecreasingSeq seq_from_spec(const std::string& spec) {
  return seq_from_json(spec_to_json(spec));
}

inline PartitionSeq partition_from_json(const json& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name.rfind("blocks-", 0) == 0)
      return block_partition(std::stoul(name.substr(7)));
    throw std::invalid_argument("unknown partition name: " + name);
  }
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("partition literal needs a kind");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "blocks") return block_partition(get_nat(j, "width"));
  if (kind == "cuts") {
    std::vector<nat> cuts;
    for (const auto& e : j.at("cuts")) cuts.push_back(e.get<nat>());
    return cut_partition(stream_from_json(j.at("ground")), std::move(cuts));
  }
  throw std::invalid_argument("unknown partition kind: " + kind);
}

inline PartitionSeq partition_from_spec(const std::string& spec) {
  return partition_from_json(spec_to_json(spec));
}

inline ClosedFamilyTree closed_from_json(const json& j) {
  if (j.is_string()) return closed_by_name(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("closed-family literal needs a kind");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "subset-of")
    return closed_subsets_of(stream_from_json(j.at("stream")));
  if (kind == "hom-sierpinski") {
    const std::string en =
        j.contains("enum") ? j["enum"].get<std::string>() : "stern-brocot";
    return mono_color_tree(sierpinski_family(enumeration_by_name(en)),
                           "hom-sierpinski");
  }
  throw std::invalid_argument("unknown closed-family kind: " + kind);
}

inline ClosedFamilyTree closed_from_spec(const std::string& spec) {
  return closed_from_json(spec_to_json(spec));
}

inline std::function<bool(const FinSet&)> family_from_json(const json& j) {
  if (j.is_string()) return family_by_name(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("family literal needs a kind");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "even-sum") return even_sum_family();
  if (kind == "table") {
    auto table = std::make_shared<std::set<std::vector<nat>>>();
    for (const auto& row : j.at("members")) {
      std::vector<nat> s;
      for (const auto& e : row) s.push_back(e.get<nat>());
      table->insert(FinSet(s).elements());
    }
    return [table](const FinSet& s) { return table->count(s.elements()) > 0; };
  }
  if (kind == "cy") return cy_family(stream_from_json(j.at("y")));
  if (kind == "sierpinski") {
    const std::string en =
        j.contains("enum") ? j["enum"].get<std::string>() : "stern-brocot";
    return sierpinski_family(enumeration_by_name(en));
  }
  throw std::invalid_argument("unknown family kind: " + kind);
}

inline std::function<bool(const FinSet&)> family_from_spec(
    const std::string& spec) {
  return family_from_json(spec_to_json(spec));
}

inline Front front_from_json(const json& j, NatStream base, nat horizon) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name.rfind("tuples-", 0) == 0)
      return tuple_front(std::stoul(name.substr(7)), std::move(base));
    if (name.rfind("schreier-", 0) == 0)
      return schreier_front(std::stoul(name.substr(9)), std::move(base),
                            horizon);
    throw std::invalid_argument("unknown front name: " + name);
  }
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("front literal needs a kind");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "tuples") return tuple_front(get_nat(j, "n"), std::move(base));
  if (kind == "schreier")
    return schreier_front(get_nat(j, "offset"), std::move(base), horizon);
  if (kind == "from-closed")
    return front_from_closed(closed_from_json(j.at("K")), std::move(base),
                             horizon);
  throw std::invalid_argument("unknown front kind: " + kind);
}

inline Front front_from_spec(const std::string& spec, NatStream base,
                             nat horizon) {
  return front_from_json(spec_to_json(spec), std::move(base), horizon);
}

// Tree file format: root [label, [child, ...]], child [coord, label,
// [child, ...]], children ordered by coordinate.
namespace detail {

inline std::size_t tree_node_from_json(const json& j, bool root, LabeledTree& T) {
  if (!j.is_array() || j.size() != (root ? 2u : 3u))
    throw std::invalid_argument("tree node must be [label,[kids]] at the root "
                                "and [coord,label,[kids]] below it");
  const std::size_t off = root ? 0 : 1;
  LabeledTree::Node nd;
  nd.coord = root ? 0 : j[0].get<nat>();
  nd.label = j[off].get<int>();
  const std::size_t idx = T.nodes.size();
  T.nodes.push_back(nd);
  for (const auto& kid : j[off + 1]) {
    std::size_t kidIdx = tree_node_from_json(kid, false, T);
    T.nodes[idx].kids.push_back(kidIdx);
  }
  return idx;
}

inline json tree_node_to_json(const LabeledTree& T, std::size_t i, bool root) {
  json kids = json::array();
  for (std::size_t k : T.nodes[i].kids)
    kids.push_back(tree_node_to_json(T, k, false));
  if (root) return json::array({T.nodes[i].label, kids});
  return json::array({T.nodes[i].coord, T.nodes[i].label, kids});
}

}  // namespace detail

inline LabeledTree tree_from_json(const json& j) {
  LabeledTree T;
  detail::tree_node_from_json(j, true, T);
  std::string why;
  if (!validate_tree(T, &why))
    throw std::invalid_argument("invalid tree: " + why);
  return T;
}

inline json tree_to_json(const LabeledTree& T) {
  return detail::tree_node_to_json(T, 0, true);
}

inline LabeledTree tree_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::invalid_argument("cannot open tree file: " + path);
  json j;
  in >> j;
  return tree_from_json(j);
}

inline FuncCode func_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coords"))
    throw std::invalid_argument("function code needs a coords array");
  FuncCode F;
  for (const auto& t : j["coords"]) F.coords.push_back(tree_from_json(t));
  if (j.contains("default")) F.dflt = tree_from_json(j["default"]);
  return F;
}

inline FuncCode func_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::invalid_argument("cannot open func file: " + path);
  json j;
  in >> j;
  return func_from_json(j);
}

inline std::vector<bool> bits_from_string(const std::string& s) {
  std::vector<bool> x;
  for (char c : s) {
    if (c == '0')
      x.push_back(false);
    else if (c == '1')
      x.push_back(true);
    else
      throw std::invalid_argument("bit string must contain only 0 and 1");
  }
  return x;
}

inline std::string bits_to_string(const std::vector<bool>& x) {
  std::string s;
  for (bool b : x) s += b ? '1' : '0';
  return s;
}

inline FinSet set_from_csv(const std::string& csv) {
  std::vector<nat> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoull(tok));
  }
  return FinSet(out);
}

inline std::string trace_line(const TraceEntry& e) {
  return "step=" + std::to_string(e.step) + " branch=" +
         std::to_string(e.branch) + " verdict=" + to_string(e.verdict);
}

inline json set_to_json(const FinSet& s) {
  json a = json::array();
  for (nat e : s) a.push_back(e);
  return a;
}

inline json report_to_json(const SelectorReport& r,
                           json certificates = json::object()) {
  json t = json::array();
  for (const auto& e : r.trace) t.push_back(trace_line(e));
  return json{{"output", set_to_json(r.output)},
              {"verdict", to_string(r.verdict)},
              {"trace", std::move(t)},
              {"certificates", std::move(certificates)}};
}

}  // namespace ramsel::io
