#include "apds/proof_io.hpp"

#include <json.hpp>

#include "apds/error.hpp"

namespace apds {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const ProofNode& n) {
  switch (n.kind) {
    case ProofNode::Kind::Hypothesis:
      return Json{{"hyp", format_atom(n.atom)}};
    case ProofNode::Kind::Continuation:
      return Json{{"continue", format_atom(n.atom)}};
    case ProofNode::Kind::Step:
      break;
  }
  Json children = Json::array();
  for (const ProofNode& c : n.children) children.push_back(to_json(c));
  return Json{{"atom", format_atom(n.atom)}, {"rule", n.rule}, {"children", std::move(children)}};
}

Atom atom_field(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string", 0, 0);
  return parse_atom(v.get<std::string>());
}

ProofNode from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("proof node must be a JSON object", 0, 0);
  if (j.contains("hyp")) return ProofNode::hypothesis(atom_field(j, "hyp"));
  if (j.contains("continue")) return ProofNode::continuation(atom_field(j, "continue"));
  if (!j.contains("atom") || !j.contains("rule")) throw ParseError("proof node needs 'atom' and 'rule'", 0, 0);
  if (!j.at("rule").is_string()) throw ParseError("field 'rule' must be a string", 0, 0);
  std::vector<ProofNode> children;
  if (j.contains("children")) {
    if (!j.at("children").is_array()) throw ParseError("field 'children' must be an array", 0, 0);
    for (const Json& c : j.at("children")) children.push_back(from_json(c));
  }
  return ProofNode::step(atom_field(j, "atom"), j.at("rule").get<std::string>(), std::move(children));
}

Json path_json(const ProofPath& path) {
  Json out = Json::array();
  for (std::size_t i : path) out.push_back(i);
  return out;
}

}  // namespace

std::string write_proof_json(const ProofNode& proof, int indent) {
  return to_json(proof).dump(indent) + "\n";
}

ProofNode read_proof_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0, 0);
  }
  try {
    return from_json(j);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed proof document: ") + e.what(), 0, 0);
  }
}

std::string write_trace_json(const std::vector<ReductionStep>& trace, int indent) {
  Json out = Json::array();
  for (const ReductionStep& s : trace) {
    out.push_back(Json{{"path", path_json(s.path)},
                       {"shape", std::string(to_string(s.shape))},
                       {"removed", s.removed_rule},
                       {"added", s.added_rule},
                       {"measure_before", Json::array({s.before.elims, s.before.neutrals})},
                       {"measure_after", Json::array({s.after.elims, s.after.neutrals})}});
  }
  return out.dump(indent) + "\n";
}

std::string write_expansion_map_json(const ExpansionMap& map, const NegationSystem& automaton_negation, int indent) {
  Json out = Json::array();
  for (const auto& [id, e] : map.entries()) {
    Json derivations = Json::array();
    for (const ProofNode& d : e.premise_derivations) derivations.push_back(to_json(d));
    out.push_back(Json{{"automaton_rule", automaton_negation.system.at(id).format()},
                       {"extension_rule", e.extension_rule},
                       {"derivations", std::move(derivations)}});
  }
  return out.dump(indent) + "\n";
}

}  // namespace apds
