#include "gl2q/symbolics/symbol.hpp"

#include <utility>

namespace gl2q::sym {

namespace {

constexpr std::array<std::string_view, kSymbolCount> kNames = {
    "a+",     "a-", "b+", "b-",   "a",    "b",  "beta+", "beta-", "alpha+", "theta",
    "xi",     "tau1", "tau2", "c1", "c2", "c3", "c4",    "c5",    "c6",
};

constexpr std::array<std::pair<std::string_view, Sym>, 12> kAliases = {{
    {"ap", Sym::a_plus},
    {"aplus", Sym::a_plus},
    {"am", Sym::a_minus},
    {"aminus", Sym::a_minus},
    {"bp", Sym::b_plus},
    {"bplus", Sym::b_plus},
    {"bm", Sym::b_minus},
    {"bminus", Sym::b_minus},
    {"vartheta", Sym::vartheta},
    {"betap", Sym::beta_plus},
    {"betam", Sym::beta_minus},
    {"alphap", Sym::alpha_plus},
}};

}  // namespace

std::string_view symbol_name(Sym s) { return kNames[index_of(s)]; }

std::optional<Sym> parse_symbol(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<Sym>(i);
  }
  for (const auto& [alias, s] : kAliases) {
    if (alias == name) return s;
  }
  return std::nullopt;
}

}  // namespace gl2q::sym
