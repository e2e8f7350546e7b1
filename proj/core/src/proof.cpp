#include "apds/proof.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "apds/error.hpp"
#include "apds/saturate.hpp"

namespace apds {

const ProofNode& node_at(const ProofNode& root, const ProofPath& path) {
  const ProofNode* n = &root;
  for (std::size_t i : path) {
    if (i >= n->children.size()) throw ContractError("proof path out of range");
    n = &n->children[i];
  }
  return *n;
}

std::size_t proof_size(const ProofNode& root) {
  std::size_t n = 1;
  for (const ProofNode& c : root.children) n += proof_size(c);
  return n;
}

std::size_t proof_height(const ProofNode& root) {
  std::size_t h = 0;
  for (const ProofNode& c : root.children) h = std::max(h, proof_height(c));
  return h + 1;
}

namespace {

void collect_rules(const ProofNode& n, std::vector<std::string>& out) {
  if (n.is_step()) out.push_back(n.rule);
  for (const ProofNode& c : n.children) collect_rules(c, out);
}

void collect_continuations(const ProofNode& n, ProofPath& path, std::vector<ProofPath>& out) {
  if (n.is_continuation()) out.push_back(path);
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    path.push_back(i);
    collect_continuations(n.children[i], path, out);
    path.pop_back();
  }
}

std::string format_path(const ProofPath& path) {
  if (path.empty()) return "root";
  std::string out = "root";
  for (std::size_t i : path) out += "." + std::to_string(i);
  return out;
}

}  // namespace

std::vector<std::string> rules_used(const ProofNode& root) {
  std::vector<std::string> out;
  collect_rules(root, out);
  return out;
}

std::vector<ProofPath> continuation_paths(const ProofNode& root) {
  std::vector<ProofPath> out;
  ProofPath path;
  collect_continuations(root, path, out);
  return out;
}

// ---------------------------------------------------------------------------
// check_proof

namespace {

class Checker {
 public:
  Checker(const System& system, CheckOptions options) : system_(system), options_(options) {}

  void visit(const ProofNode& n, ProofPath& path) {
    switch (n.kind) {
      case ProofNode::Kind::Hypothesis:
        if (!options_.admit_hypotheses) report(path, "hypothesis leaf " + format_atom(n.atom) + " not admitted");
        return;
      case ProofNode::Kind::Continuation:
        if (!options_.admit_continuations) report(path, "continuation marker " + format_atom(n.atom) + " not admitted");
        return;
      case ProofNode::Kind::Step:
        break;
    }
    if (n.atom.is_open() && !options_.admit_hypotheses) {
      report(path, "open label " + format_atom(n.atom) + " in a closed proof");
    }
    check_step(n, path);
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      path.push_back(i);
      visit(n.children[i], path);
      path.pop_back();
    }
  }

  std::vector<CheckIssue> issues;

 private:
  void check_step(const ProofNode& n, const ProofPath& path) {
    const Rule* rule = system_.find(n.rule);
    if (!rule) {
      report(path, "unknown rule id '" + n.rule + "'");
      return;
    }
    auto subst = match(rule->conclusion(), n.atom);
    if (!subst) {
      report(path, format_atom(n.atom) + " is not an instance of the conclusion " + format_atom(rule->conclusion()) +
                       " of rule " + rule->id());
      return;
    }
    auto premises = rule->premises();
    if (premises.size() != n.children.size()) {
      report(path, "rule " + rule->id() + " has " + std::to_string(premises.size()) + " premises but the node has " +
                       std::to_string(n.children.size()) + " children");
      return;
    }
    for (std::size_t i = 0; i < premises.size(); ++i) {
      Atom expected = apply(premises[i], *subst);
      if (n.children[i].atom != expected) {
        report(path, "child " + std::to_string(i) + " is " + format_atom(n.children[i].atom) + " but rule " +
                         rule->id() + " requires " + format_atom(expected));
      }
    }
  }

  void report(const ProofPath& path, std::string message) { issues.push_back({path, std::move(message)}); }

  const System& system_;
  CheckOptions options_;
};

}  // namespace

std::vector<CheckIssue> check_proof(const System& system, const ProofNode& proof, CheckOptions options) {
  Checker checker(system, options);
  ProofPath path;
  checker.visit(proof, path);
  return std::move(checker.issues);
}

std::string format_issues(const std::vector<CheckIssue>& issues) {
  std::ostringstream out;
  for (const CheckIssue& i : issues) out << format_path(i.path) << ": " << i.message << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Cut elimination

std::string_view to_string(CutShape shape) {
  switch (shape) {
    case CutShape::ElimOverIntro: return "elim-over-intro";
    case CutShape::NeutralOverIntros: return "neutral-over-intros";
    case CutShape::NeutralAtEmpty: return "neutral-at-eps";
  }
  return "?";
}

Measure measure(const ProofNode& proof, const System& system) {
  Measure m;
  if (proof.is_step()) {
    switch (system.at(proof.rule).kind()) {
      case RuleKind::Elim: ++m.elims; break;
      case RuleKind::Neutral: ++m.neutrals; break;
      default: break;
    }
  }
  for (const ProofNode& c : proof.children) {
    Measure sub = measure(c, system);
    m.elims += sub.elims;
    m.neutrals += sub.neutrals;
  }
  return m;
}

namespace {

RuleKind kind_of(const ProofNode& n, const System& system) {
  if (!n.is_step()) return RuleKind::General;
  const Rule* r = system.find(n.rule);
  return r ? r->kind() : RuleKind::General;
}

std::size_t head_index(const Rule& elim) {
  const Atom* head = elim_head(elim);
  auto premises = elim.premises();
  return static_cast<std::size_t>(head - premises.data());
}

std::optional<CutShape> cut_at(const ProofNode& n, const System& system) {
  if (!n.is_step()) return std::nullopt;
  const Rule* rule = system.find(n.rule);
  if (!rule) return std::nullopt;
  if (rule->kind() == RuleKind::Elim) {
    std::size_t h = head_index(*rule);
    if (h < n.children.size() && kind_of(n.children[h], system) == RuleKind::Intro) return CutShape::ElimOverIntro;
    return std::nullopt;
  }
  if (rule->kind() != RuleKind::Neutral) return std::nullopt;
  if (n.atom.prefix.empty()) {
    if (n.atom.is_open()) return std::nullopt;
    bool all = std::all_of(n.children.begin(), n.children.end(),
                           [&](const ProofNode& c) { return kind_of(c, system) == RuleKind::EpsIntro; });
    return all ? std::optional(CutShape::NeutralAtEmpty) : std::nullopt;
  }
  bool all = std::all_of(n.children.begin(), n.children.end(),
                         [&](const ProofNode& c) { return kind_of(c, system) == RuleKind::Intro; });
  return all ? std::optional(CutShape::NeutralOverIntros) : std::nullopt;
}

bool find_cut_rec(const ProofNode& n, const System& system, ProofPath& path, std::optional<Cut>& out) {
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    path.push_back(i);
    if (find_cut_rec(n.children[i], system, path, out)) return true;
    path.pop_back();
  }
  if (auto shape = cut_at(n, system)) {
    out = Cut{path, *shape};
    return true;
  }
  return false;
}

// Builds a node for `rule` at `label`, taking each premise's subproof from
// the pool (first subproof with the matching label).
ProofNode assemble(const Rule& rule, const Atom& label, const std::vector<const ProofNode*>& pool) {
  auto subst = match(rule.conclusion(), label);
  if (!subst) throw ContractError("rule " + rule.id() + " does not conclude " + format_atom(label));
  std::vector<ProofNode> children;
  for (const Atom& premise : rule.premises()) {
    Atom want = apply(premise, *subst);
    auto it = std::find_if(pool.begin(), pool.end(), [&](const ProofNode* p) { return p->atom == want; });
    if (it == pool.end()) throw ContractError("no subproof for premise " + format_atom(want) + " of " + rule.id());
    children.push_back(**it);
  }
  return ProofNode::step(label, rule.id(), std::move(children));
}

const Rule& require_shape(const System& saturated, const RuleShape& shape, std::string_view what) {
  const Rule* r = saturated.find_shape(shape);
  if (!r) {
    std::string text = format_atom(shape.conclusion) + " <=";
    for (const Atom& a : shape.premises) text += " " + format_atom(a);
    throw ContractError("system " + saturated.name() + " lacks the " + std::string(what) + " " + text +
                        " (not saturated?)");
  }
  return *r;
}

std::vector<Atom> sorted_unique(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

}  // namespace

std::optional<Cut> find_cut(const ProofNode& proof, const System& system) {
  std::optional<Cut> out;
  ProofPath path;
  find_cut_rec(proof, system, path, out);
  return out;
}

ProofNode reduce_cut(const ProofNode& proof, const ProofPath& path, const System& saturated) {
  const ProofNode& node = node_at(proof, path);
  auto shape = cut_at(node, saturated);
  if (!shape) throw ContractError("no cut at the given position");
  const Rule& rule = saturated.at(node.rule);

  std::vector<const ProofNode*> pool;
  std::vector<Atom> premises;
  Atom conclusion = rule.conclusion();

  switch (*shape) {
    case CutShape::ElimOverIntro: {
      std::size_t h = head_index(rule);
      const ProofNode& head = node.children[h];
      const Rule& intro = saturated.at(head.rule);
      premises.assign(intro.premises().begin(), intro.premises().end());
      for (const ProofNode& c : head.children) pool.push_back(&c);
      auto rp = rule.premises();
      for (std::size_t i = 0; i < rp.size(); ++i) {
        if (i == h) continue;
        premises.push_back(rp[i]);
        pool.push_back(&node.children[i]);
      }
      break;
    }
    case CutShape::NeutralOverIntros:
      conclusion.prefix = {node.atom.prefix.front()};
      for (const ProofNode& c : node.children) {
        const Rule& intro = saturated.at(c.rule);
        premises.insert(premises.end(), intro.premises().begin(), intro.premises().end());
        for (const ProofNode& g : c.children) pool.push_back(&g);
      }
      break;
    case CutShape::NeutralAtEmpty:
      conclusion = Atom::closed(conclusion.state, {}, conclusion.polarity);
      break;
  }

  RuleShape key{conclusion, sorted_unique(std::move(premises))};
  const char* what = *shape == CutShape::ElimOverIntro ? "neutral rule" : "introduction rule";
  const Rule& replacement = require_shape(saturated, key, what);
  ProofNode rewritten = assemble(replacement, node.atom, pool);

  ProofNode out = proof;
  ProofNode* target = &out;
  for (std::size_t i : path) target = &target->children[i];
  *target = std::move(rewritten);
  return out;
}

CutElimination eliminate_cuts(const ProofNode& proof, const System& saturated) {
  CutElimination result{proof, {}};
  Measure current = measure(proof, saturated);
  while (auto cut = find_cut(result.proof, saturated)) {
    std::string removed = node_at(result.proof, cut->path).rule;
    result.proof = reduce_cut(result.proof, cut->path, saturated);
    Measure next = measure(result.proof, saturated);
    if (!(next < current)) throw Error("cut reduction did not decrease the measure");
    result.trace.push_back({cut->path, cut->shape, removed, node_at(result.proof, cut->path).rule, current, next});
    current = next;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Skeletons and replay

ProofNode substitute(const ProofNode& skeleton, const Subst& subst) {
  ProofNode out = skeleton;
  out.atom = apply(skeleton.atom, subst);
  for (ProofNode& c : out.children) c = substitute(c, subst);
  return out;
}

ProofNode graft(const ProofNode& skeleton, const std::vector<std::pair<Atom, ProofNode>>& proofs) {
  if (skeleton.is_hypothesis()) {
    for (const auto& [atom, proof] : proofs) {
      if (atom == skeleton.atom) return proof;
    }
    return skeleton;
  }
  ProofNode out = skeleton;
  for (ProofNode& c : out.children) c = graft(c, proofs);
  return out;
}

namespace {

class Replayer {
 public:
  explicit Replayer(const System& saturated) : saturated_(saturated) {}

  ProofNode run(const ProofNode& n) {
    ProofNode out = n;
    for (ProofNode& c : out.children) c = run(c);
    if (!n.is_step()) return out;
    const Rule& rule = saturated_.at(n.rule);
    if (!rule.from_saturation()) return out;

    auto subst = match(rule.conclusion(), n.atom);
    if (!subst) throw ContractError("node " + format_atom(n.atom) + " does not match rule " + rule.id());
    std::vector<std::pair<Atom, ProofNode>> pool;
    for (ProofNode& c : out.children) pool.emplace_back(c.atom, std::move(c));
    return graft(substitute(skeleton(rule.id()), *subst), pool);
  }

 private:
  const ProofNode& skeleton(const std::string& id) {
    auto it = cache_.find(id);
    if (it == cache_.end()) it = cache_.emplace(id, expand_saturated_rule(id, saturated_)).first;
    return it->second;
  }

  const System& saturated_;
  std::map<std::string, ProofNode> cache_;
};

}  // namespace

ProofNode replay(const ProofNode& proof, const System& saturated) {
  return Replayer(saturated).run(proof);
}

}  // namespace apds
