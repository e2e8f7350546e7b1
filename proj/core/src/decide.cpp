#include "apds/decide.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

#include "apds/error.hpp"
#include "apds/saturate.hpp"

namespace apds {

namespace {

bool intro_shaped(const Rule& r) {
  return r.is_intro();
}

// Bottom-up search over the suffixes of one word.
class Recognizer {
 public:
  Recognizer(const System& automaton, const Atom& config) : config_(config) {
    automaton.require_in_language(config);
    if (config.is_open()) throw ContractError("membership is defined for closed atoms, got " + format_atom(config));
    for (const Rule& r : automaton.rules()) {
      if (r.polarity() != config.polarity) continue;
      if (!intro_shaped(r)) throw ContractError("rule " + r.id() + " is not an introduction rule");
      const Atom& c = r.conclusion();
      if (c.is_closed()) {
        axioms_[c.state].push_back(&r);
      } else {
        intros_[{c.state, c.prefix.front()}].push_back(&r);
      }
    }
  }

  bool provable(StateSym state, std::size_t pos) { return best(state, pos) != nullptr; }

  std::optional<ProofNode> proof(StateSym state, std::size_t pos) {
    const Rule* r = best(state, pos);
    if (!r) return std::nullopt;
    Word suffix(config_.prefix.begin() + static_cast<std::ptrdiff_t>(pos), config_.prefix.end());
    std::vector<ProofNode> children;
    for (const Atom& p : r->premises()) children.push_back(*proof(p.state, pos + 1));
    return ProofNode::step(Atom::closed(state, std::move(suffix), config_.polarity), r->id(), std::move(children));
  }

 private:
  // Smallest-id applicable rule, or nullptr.
  const Rule* best(StateSym state, std::size_t pos) {
    auto key = std::make_pair(state, pos);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    memo_[key] = nullptr;  // words shrink upward, so no cycles; placeholder only
    const Rule* chosen = nullptr;
    if (pos == config_.prefix.size()) {
      if (auto it = axioms_.find(state); it != axioms_.end()) chosen = it->second.front();
    } else if (auto it = intros_.find({state, config_.prefix[pos]}); it != intros_.end()) {
      for (const Rule* r : it->second) {
        bool ok = true;
        for (const Atom& p : r->premises()) {
          if (!provable(p.state, pos + 1)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          chosen = r;
          break;
        }
      }
    }
    memo_[key] = chosen;
    return chosen;
  }

  const Atom& config_;
  std::map<std::pair<StateSym, StackSym>, std::vector<const Rule*>> intros_;
  std::map<StateSym, std::vector<const Rule*>> axioms_;
  std::map<std::pair<StateSym, std::size_t>, const Rule*> memo_;
};

}  // namespace

bool member(const System& automaton, const Atom& config) {
  Recognizer rec(automaton, config);
  return rec.provable(config.state, 0);
}

std::optional<ProofNode> extract_cut_free_proof(const System& automaton, const Atom& config) {
  Recognizer rec(automaton, config);
  return rec.proof(config.state, 0);
}

Decider::Decider(System original)
    : original_(std::move(original)),
      normalized_(to_small_step(original_)),
      saturated_(saturate(normalized_.system)),
      automaton_(extract_multi_automaton(saturated_)),
      negated_(negate_automaton(automaton_)) {}

void Decider::require_config(const Atom& config) const {
  if (config.is_open() || config.is_negative()) {
    throw ContractError("expected a closed positive configuration, got " + format_atom(config));
  }
  original_.require_in_language(config);
}

bool Decider::provable(const Atom& config) const {
  require_config(config);
  return member(automaton_, config);
}

std::optional<ProofNode> Decider::saturated_certificate(const Atom& config) const {
  require_config(config);
  return extract_cut_free_proof(automaton_, config);
}

ProofNode Decider::to_original(const ProofNode& saturated_proof) const {
  return erase_proof(replay(saturated_proof, saturated_), normalized_, original_);
}

Verdict Decider::decide(const Atom& config, bool want_refutation) const {
  Verdict v;
  if (auto proof = saturated_certificate(config)) {
    v.provable = true;
    v.certificate = to_original(*proof);
    return v;
  }
  if (want_refutation) v.refutation = extract_cut_free_proof(negated_.system, config.negated());
  return v;
}

std::shared_ptr<const Decider> decider_for(const System& system) {
  static std::mutex mutex;
  static std::unordered_map<std::string, std::shared_ptr<const Decider>> cache;
  std::string key = serialize_system(system);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const Decider>(system);
  std::lock_guard lock(mutex);
  return cache.emplace(std::move(key), std::move(built)).first->second;
}

Verdict decide(const System& system, const Atom& config, bool want_refutation) {
  return decider_for(system)->decide(config, want_refutation);
}

}  // namespace apds
