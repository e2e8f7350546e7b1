#include "apds/rule.hpp"

#include <algorithm>

#include "apds/error.hpp"

namespace apds {

std::string_view to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::Intro: return "intro";
    case RuleKind::EpsIntro: return "eps-intro";
    case RuleKind::Elim: return "elim";
    case RuleKind::Neutral: return "neutral";
    case RuleKind::General: return "general";
  }
  return "?";
}

Rule::Rule(std::string id, std::vector<Atom> premises, Atom conclusion, Provenance provenance)
    : id_(std::move(id)),
      premises_(std::move(premises)),
      conclusion_(std::move(conclusion)),
      provenance_(std::move(provenance)),
      kind_(RuleKind::General) {
  std::sort(premises_.begin(), premises_.end());
  premises_.erase(std::unique(premises_.begin(), premises_.end()), premises_.end());
  for (const Atom& p : premises_) {
    if (p.polarity != conclusion_.polarity) throw ContractError("rule " + id_ + ": premise/conclusion polarity mixed");
  }
  kind_ = classify_rule(*this);
}

Rule Rule::renamed(std::string id) const {
  Rule r = *this;
  r.id_ = std::move(id);
  return r;
}

Rule Rule::with_provenance(Provenance provenance) const {
  Rule r = *this;
  r.provenance_ = std::move(provenance);
  return r;
}

std::string Rule::format() const {
  std::string out = id_ + ":";
  for (std::size_t i = 0; i < premises_.size(); ++i) {
    out += i ? ", " : " ";
    out += format_atom(premises_[i]);
  }
  out += " => ";
  out += format_atom(conclusion_);
  return out;
}

RuleKind classify_rule(const Rule& rule) {
  const Atom& c = rule.conclusion();
  auto premises = rule.premises();
  auto bare = [](const Atom& a) { return a.is_open() && a.prefix.empty(); };

  if (c.is_closed()) {
    return c.prefix.empty() && premises.empty() ? RuleKind::EpsIntro : RuleKind::General;
  }
  bool all_bare = std::all_of(premises.begin(), premises.end(), bare);
  if (c.prefix.size() == 1) return all_bare ? RuleKind::Intro : RuleKind::General;
  if (!c.prefix.empty()) return RuleKind::General;
  if (all_bare) return RuleKind::Neutral;

  // Elim: exactly one premise P(γx), all others P(x).
  std::size_t heads = 0;
  for (const Atom& p : premises) {
    if (bare(p)) continue;
    if (p.is_open() && p.prefix.size() == 1) {
      ++heads;
    } else {
      return RuleKind::General;
    }
  }
  return heads == 1 ? RuleKind::Elim : RuleKind::General;
}

const Atom* elim_head(const Rule& rule) {
  if (rule.kind() != RuleKind::Elim) return nullptr;
  for (const Atom& p : rule.premises()) {
    if (!p.prefix.empty()) return &p;
  }
  return nullptr;
}

}  // namespace apds
