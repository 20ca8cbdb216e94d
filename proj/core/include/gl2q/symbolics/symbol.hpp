#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gl2q::sym {

/// Global parameter symbols. The enumeration order is the canonical variable
/// order used by every polynomial normal form.
enum class Sym : std::uint8_t {
  a_plus,
  a_minus,
  b_plus,
  b_minus,
  a,
  b,
  beta_plus,
  beta_minus,
  alpha_plus,
  vartheta,
  xi,
  tau1,
  tau2,
  c1,
  c2,
  c3,
  c4,
  c5,
  c6,
};

inline constexpr std::size_t kSymbolCount = 19;

/// ASCII names used in canonical text ("a+", "b-", "beta+", "theta", ...).
std::string_view symbol_name(Sym s);

/// Inverse of symbol_name. Also accepts a few aliases ("ap", "aplus", "vartheta").
std::optional<Sym> parse_symbol(std::string_view name);

inline constexpr std::size_t index_of(Sym s) { return static_cast<std::size_t>(s); }

/// The six deformation parameters of a gl(2) bialgebra, in canonical order.
inline constexpr std::array<Sym, 6> kDeformationParameters = {Sym::a_plus, Sym::a_minus, Sym::b_plus,
                                                              Sym::b_minus, Sym::a,      Sym::b};

}  // namespace gl2q::sym
