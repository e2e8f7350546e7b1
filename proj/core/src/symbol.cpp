#include "apds/symbol.hpp"

#include <mutex>
#include <unordered_set>

namespace apds {
namespace detail {

namespace {

struct Pool {
  std::mutex mutex;
  std::unordered_set<std::string> names;  // node-based: addresses are stable
};

Pool& pool_for(SymbolPool which) {
  static Pool states;
  static Pool stack;
  return which == SymbolPool::States ? states : stack;
}

}  // namespace

const std::string* intern(SymbolPool which, std::string_view name) {
  Pool& pool = pool_for(which);
  std::lock_guard lock(pool.mutex);
  auto [it, inserted] = pool.names.emplace(name);
  return &*it;
}

}  // namespace detail

Word make_word(std::initializer_list<std::string_view> symbols) {
  Word w;
  w.reserve(symbols.size());
  for (auto s : symbols) w.push_back(StackSym::intern(s));
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i].name();
  }
  return out;
}

}  // namespace apds
