#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "apds/symbol.hpp"

namespace apds {

enum class Polarity : std::uint8_t { Positive, Negative };
enum class Tail : std::uint8_t { Closed, Open };

/// P(w) or P(w x), possibly negated. An open atom always refers to the
/// single tail variable x.
struct Atom {
  Polarity polarity = Polarity::Positive;
  StateSym state;
  Word prefix;
  Tail tail = Tail::Closed;

  static Atom open(StateSym state, Word prefix = {}, Polarity polarity = Polarity::Positive) {
    return Atom{polarity, state, std::move(prefix), Tail::Open};
  }
  static Atom closed(StateSym state, Word word = {}, Polarity polarity = Polarity::Positive) {
    return Atom{polarity, state, std::move(word), Tail::Closed};
  }

  bool is_open() const noexcept { return tail == Tail::Open; }
  bool is_closed() const noexcept { return tail == Tail::Closed; }
  bool is_negative() const noexcept { return polarity == Polarity::Negative; }

  Atom negated() const;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct AtomHash {
  std::size_t operator()(const Atom& a) const noexcept;
};

/// Substitution for the tail variable: x := word, followed by x again when
/// the tail stays open.
struct Subst {
  Word word;
  Tail tail = Tail::Closed;

  static Subst identity() { return Subst{{}, Tail::Open}; }
  static Subst closing(Word w) { return Subst{std::move(w), Tail::Closed}; }
  static Subst pushing(Word w) { return Subst{std::move(w), Tail::Open}; }

  friend bool operator==(const Subst&, const Subst&) = default;
};

Atom apply(const Atom& atom, const Subst& subst);

/// Closes an open atom with the word w. Throws ContractError on a closed atom.
Atom instantiate(const Atom& atom, const Word& w);

/// The substitution turning the rule conclusion into the label, if any.
/// A closed conclusion only matches itself.
std::optional<Subst> match(const Atom& conclusion, const Atom& label);

std::string format_atom(const Atom& atom);

/// Parses a single atom in the system text syntax (`!P(a b x)`, `Q(eps)`).
/// Symbols are interned but not checked against any alphabet.
Atom parse_atom(std::string_view text);

}  // namespace apds
