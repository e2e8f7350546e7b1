#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apds/atom.hpp"
#include "apds/system.hpp"

namespace apds {

/// A proof tree node. Step nodes are rule instances; hypothesis leaves occur
/// in derivation skeletons; continuation leaves mark where a depth-bounded
/// co-inductive proof was cut off and carry the finite proof that justifies
/// the pending configuration.
struct ProofNode {
  enum class Kind : unsigned char { Step, Hypothesis, Continuation };

  Kind kind = Kind::Step;
  Atom atom;
  std::string rule;
  std::vector<ProofNode> children;
  std::shared_ptr<const ProofNode> witness;

  static ProofNode step(Atom atom, std::string rule, std::vector<ProofNode> children = {}) {
    return ProofNode{Kind::Step, std::move(atom), std::move(rule), std::move(children), nullptr};
  }
  static ProofNode hypothesis(Atom atom) { return ProofNode{Kind::Hypothesis, std::move(atom), {}, {}, nullptr}; }
  static ProofNode continuation(Atom atom, std::shared_ptr<const ProofNode> witness = nullptr) {
    return ProofNode{Kind::Continuation, std::move(atom), {}, {}, std::move(witness)};
  }

  bool is_step() const noexcept { return kind == Kind::Step; }
  bool is_hypothesis() const noexcept { return kind == Kind::Hypothesis; }
  bool is_continuation() const noexcept { return kind == Kind::Continuation; }

  /// Structural equality; witnesses are not compared.
  friend bool operator==(const ProofNode& a, const ProofNode& b) {
    return a.kind == b.kind && a.atom == b.atom && a.rule == b.rule && a.children == b.children;
  }
};

using ProofTree = ProofNode;

/// Child indices from the root.
using ProofPath = std::vector<std::size_t>;

const ProofNode& node_at(const ProofNode& root, const ProofPath& path);
std::size_t proof_size(const ProofNode& root);
std::size_t proof_height(const ProofNode& root);
/// Rule ids used, in preorder.
std::vector<std::string> rules_used(const ProofNode& root);
std::vector<ProofPath> continuation_paths(const ProofNode& root);

// ---------------------------------------------------------------------------
// Checking

struct CheckOptions {
  bool admit_hypotheses = false;
  bool admit_continuations = false;
};

struct CheckIssue {
  ProofPath path;
  std::string message;
};

/// Empty when every step node is an instance of a rule of `system`: some
/// substitution of the tail variable maps the rule's conclusion to the node
/// label and its premises, in canonical order, to the children's labels.
std::vector<CheckIssue> check_proof(const System& system, const ProofNode& proof, CheckOptions options = {});

inline bool proof_checks(const System& system, const ProofNode& proof, CheckOptions options = {}) {
  return check_proof(system, proof, options).empty();
}

std::string format_issues(const std::vector<CheckIssue>& issues);

// ---------------------------------------------------------------------------
// Cut elimination

/// (number of elimination nodes, number of neutral nodes), ordered
/// lexicographically.
struct Measure {
  std::size_t elims = 0;
  std::size_t neutrals = 0;
  friend auto operator<=>(const Measure&, const Measure&) = default;
};

Measure measure(const ProofNode& proof, const System& system);

enum class CutShape {
  ElimOverIntro,     // an elimination whose head premise ends with an introduction
  NeutralOverIntros, // a neutral rule at γw whose premises all end with introductions
  NeutralAtEmpty,    // a neutral rule at ε whose premises all end with ε-introductions
};

struct Cut {
  ProofPath path;
  CutShape shape;
};

/// Leftmost-innermost cut (first in post-order), if any.
std::optional<Cut> find_cut(const ProofNode& proof, const System& system);

/// Rewrites the cut at `path` into a single node of the saturated rule with
/// exactly the combined premise set. Throws ContractError if `path` is not a
/// cut or the required rule is missing (the system is not saturated).
ProofNode reduce_cut(const ProofNode& proof, const ProofPath& path, const System& saturated);

struct ReductionStep {
  ProofPath path;
  CutShape shape;
  std::string removed_rule;  // rule of the rewritten node before the step
  std::string added_rule;    // rule of the node that replaced it
  Measure before;
  Measure after;
};

struct CutElimination {
  ProofNode proof;
  std::vector<ReductionStep> trace;
};

CutElimination eliminate_cuts(const ProofNode& proof, const System& saturated);

std::string_view to_string(CutShape shape);

// ---------------------------------------------------------------------------
// Skeleton manipulation

/// Applies a tail substitution to every label.
ProofNode substitute(const ProofNode& skeleton, const Subst& subst);

/// Replaces each hypothesis leaf whose atom has an entry in `proofs`.
/// `proofs` is searched linearly; lists here are premise-sized.
ProofNode graft(const ProofNode& skeleton, const std::vector<std::pair<Atom, ProofNode>>& proofs);

/// Expands every saturation-provenance node of a proof over a saturated system
/// into a derivation in the rules that were present before saturation.
ProofNode replay(const ProofNode& proof, const System& saturated);

}  // namespace apds
