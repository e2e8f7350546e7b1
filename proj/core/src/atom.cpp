#include "apds/atom.hpp"

#include "apds/error.hpp"
#include "lexer.hpp"

namespace apds {

Atom Atom::negated() const {
  Atom a = *this;
  a.polarity = polarity == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
  return a;
}

std::size_t AtomHash::operator()(const Atom& a) const noexcept {
  std::size_t h = a.state.hash();
  h = h * 31 + static_cast<std::size_t>(a.polarity) * 2 + static_cast<std::size_t>(a.tail);
  for (StackSym s : a.prefix) h = h * 1000003u ^ s.hash();
  return h;
}

Atom apply(const Atom& atom, const Subst& subst) {
  if (atom.is_closed()) return atom;
  Atom out = atom;
  out.prefix.insert(out.prefix.end(), subst.word.begin(), subst.word.end());
  out.tail = subst.tail;
  return out;
}

Atom instantiate(const Atom& atom, const Word& w) {
  if (atom.is_closed()) throw ContractError("cannot instantiate closed atom " + format_atom(atom));
  return apply(atom, Subst::closing(w));
}

std::optional<Subst> match(const Atom& conclusion, const Atom& label) {
  if (conclusion.state != label.state || conclusion.polarity != label.polarity) return std::nullopt;
  if (conclusion.is_closed()) {
    if (label.is_closed() && label.prefix == conclusion.prefix) return Subst::closing({});
    return std::nullopt;
  }
  const Word& v = conclusion.prefix;
  if (label.prefix.size() < v.size()) return std::nullopt;
  if (!std::equal(v.begin(), v.end(), label.prefix.begin())) return std::nullopt;
  return Subst{Word(label.prefix.begin() + static_cast<std::ptrdiff_t>(v.size()), label.prefix.end()), label.tail};
}

std::string format_atom(const Atom& atom) {
  std::string out;
  if (atom.is_negative()) out += '!';
  out += atom.state.name();
  out += '(';
  for (std::size_t i = 0; i < atom.prefix.size(); ++i) {
    if (i) out += ' ';
    out += atom.prefix[i].name();
  }
  if (atom.is_open()) {
    out += atom.prefix.empty() ? "x" : " x";
  } else if (atom.prefix.empty()) {
    out += "eps";
  }
  out += ')';
  return out;
}

Atom parse_atom(std::string_view text) {
  detail::Cursor cur(text, 1);
  Atom a = cur.atom();
  if (!cur.at_end()) cur.fail("trailing characters after atom");
  return a;
}

}  // namespace apds
