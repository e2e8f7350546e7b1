#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace apds {

namespace detail {
enum class SymbolPool { States, Stack };
const std::string* intern(SymbolPool pool, std::string_view name);
}  // namespace detail

/// Interned identifier. Equality and hashing use the interned address;
/// ordering compares names so canonical orders do not depend on interning
/// history.
template <detail::SymbolPool Pool>
class Symbol {
 public:
  Symbol() = default;

  static Symbol intern(std::string_view name) { return Symbol(detail::intern(Pool, name)); }

  std::string_view name() const noexcept { return name_ ? std::string_view(*name_) : std::string_view(); }
  bool valid() const noexcept { return name_ != nullptr; }

  friend bool operator==(Symbol a, Symbol b) noexcept { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) noexcept {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    return a.name().compare(b.name()) <=> 0;
  }

  std::size_t hash() const noexcept { return std::hash<const void*>{}(name_); }

 private:
  explicit Symbol(const std::string* name) : name_(name) {}
  const std::string* name_ = nullptr;
};

using StateSym = Symbol<detail::SymbolPool::States>;
using StackSym = Symbol<detail::SymbolPool::Stack>;

/// A stack word; the empty vector is ε.
using Word = std::vector<StackSym>;

Word make_word(std::initializer_list<std::string_view> symbols);
Word concat(const Word& a, const Word& b);
/// "a b", or "eps" for the empty word.
std::string format_word(const Word& w);

}  // namespace apds

template <apds::detail::SymbolPool Pool>
struct std::hash<apds::Symbol<Pool>> {
  std::size_t operator()(apds::Symbol<Pool> s) const noexcept { return s.hash(); }
};
