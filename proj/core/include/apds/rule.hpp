#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "apds/atom.hpp"

namespace apds {

enum class RuleKind { Intro, EpsIntro, Elim, Neutral, General };

std::string_view to_string(RuleKind kind);

struct OriginalRule {
  friend bool operator==(const OriginalRule&, const OriginalRule&) = default;
};

/// Rules introduced when splitting a general rule into small steps.
struct NormalizationStep {
  enum class Role { PushChain, PopChain, Residue };
  std::string source;  // id of the general rule (Residue), or of the fresh state (chains)
  Role role = Role::Residue;
  friend bool operator==(const NormalizationStep&, const NormalizationStep&) = default;
};

/// A rule added by saturation. `base` is the elimination rule (case 1) or the
/// neutral rule (cases 2 and 3); `intros` lists the introduction rules that
/// were combined with it, in the base rule's premise order.
struct SaturationStep {
  int combination = 1;
  std::string base;
  std::vector<std::string> intros;
  friend bool operator==(const SaturationStep&, const SaturationStep&) = default;
};

/// A negative rule produced by complementation: one premise chosen from each
/// rule sharing the conclusion. `choice[i]` is a 0-based premise index into
/// `sources[i]`.
struct ComplementChoice {
  std::vector<std::string> sources;
  std::vector<std::size_t> choice;
  friend bool operator==(const ComplementChoice&, const ComplementChoice&) = default;
};

/// A rule instance produced by instantiating the tail variable of `source`.
struct Instantiation {
  std::string source;
  friend bool operator==(const Instantiation&, const Instantiation&) = default;
};

using Provenance = std::variant<OriginalRule, NormalizationStep, SaturationStep, ComplementChoice, Instantiation>;

/// An inference rule. Premises are kept as a canonical set: sorted and
/// deduplicated, so two rules with the same conclusion and the same premises
/// have the same shape regardless of how they were written.
class Rule {
 public:
  /// Throws ContractError when premises and conclusion mix polarities.
  Rule(std::string id, std::vector<Atom> premises, Atom conclusion, Provenance provenance = OriginalRule{});

  const std::string& id() const noexcept { return id_; }
  std::span<const Atom> premises() const noexcept { return premises_; }
  const Atom& conclusion() const noexcept { return conclusion_; }
  const Provenance& provenance() const noexcept { return provenance_; }
  RuleKind kind() const noexcept { return kind_; }
  Polarity polarity() const noexcept { return conclusion_.polarity; }

  bool is_intro() const noexcept { return kind_ == RuleKind::Intro || kind_ == RuleKind::EpsIntro; }
  bool from_saturation() const noexcept { return std::holds_alternative<SaturationStep>(provenance_); }

  /// Same conclusion and same premise set.
  bool same_shape(const Rule& other) const { return conclusion_ == other.conclusion_ && premises_ == other.premises_; }

  Rule renamed(std::string id) const;
  Rule with_provenance(Provenance provenance) const;

  /// `id: A, B => C`
  std::string format() const;

  /// Id, premises and conclusion; provenance is bookkeeping and not compared.
  friend bool operator==(const Rule& a, const Rule& b) {
    return a.id_ == b.id_ && a.same_shape(b);
  }

 private:
  std::string id_;
  std::vector<Atom> premises_;
  Atom conclusion_;
  Provenance provenance_;
  RuleKind kind_;
};

RuleKind classify_rule(const Rule& rule);

/// The P(γx) premise of an elimination rule; nullptr for other kinds.
const Atom* elim_head(const Rule& rule);

/// Shape key used to deduplicate rules: conclusion followed by premises.
struct RuleShape {
  Atom conclusion;
  std::vector<Atom> premises;

  static RuleShape of(const Rule& r) { return {r.conclusion(), {r.premises().begin(), r.premises().end()}}; }
  friend bool operator==(const RuleShape&, const RuleShape&) = default;
  friend auto operator<=>(const RuleShape&, const RuleShape&) = default;
};

}  // namespace apds
