#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gl2q/bialgebra/classify.hpp"
#include "gl2q/symbolics/laurent.hpp"

namespace gl2q::contract {

using bialg::Cocommutator;
using bialg::LaurentCocommutator;
using lie::LaurentTensor;
using lie::Tensor;
using sym::LaurentPoly;
using sym::MultiPoly;
using sym::Rational;
using sym::Sym;

enum class ContractionFamily { I_plus_standard, I_plus_nonstandard, II_standard, II_nonstandard };

std::string_view family_name(ContractionFamily f);
/// Accepts "I+-standard", "I+-nonstandard", "II-standard", "II-nonstandard".
std::optional<ContractionFamily> parse_family(std::string_view text);
inline constexpr std::array<ContractionFamily, 4> kAllFamilies = {
    ContractionFamily::I_plus_standard, ContractionFamily::I_plus_nonstandard, ContractionFamily::II_standard,
    ContractionFamily::II_nonstandard};

/// gl(2) -> h4 Inonu-Wigner map and its inverse, with Laurent coefficients.
struct GeneratorMap {
  std::array<LaurentTensor, lie::kDim> gl2_in_h4;  // J3 = 2N - eps^-2 M, J+- = eps^-1 A+-, I = eps^-2 M
  std::array<LaurentTensor, lie::kDim> h4_in_gl2;  // N = (J3+I)/2, A+- = eps J+-, M = eps^2 I
};

const GeneratorMap& generator_map();

/// old parameter term: scale * eps^(exponent) * value, where the exponent is
/// either one of the scheme's unknowns or a fixed integer.
struct ParamTerm {
  Rational scale;
  MultiPoly value;
  int slot = -1;  // index into exponent_names, or -1 for fixed_degree
  int fixed_degree = 0;
};

struct ContractionScheme {
  ContractionFamily family;
  /// Each unknown exponent is named after the gl(2) parameter it rescales.
  std::vector<std::string> exponent_names;
  /// Independent parameters; unlisted parameters are zero in the family.
  std::map<Sym, std::vector<ParamTerm>> rules;
  /// Dependent parameters as Laurent polynomials in the independent ones,
  /// substituted before rescaling.
  std::map<Sym, MultiPoly> dependents;

  std::size_t exponent_count() const { return exponent_names.size(); }
};

/// The parameter rescalings of the four families. For I+ families the extra
/// option adds -2 eps^3 beta+ to b+.
ContractionScheme scheme_for(ContractionFamily family, bool include_beta_plus = false);

/// The family's gl(2) r-matrix with dependents substituted.
Tensor family_r(const ContractionScheme& scheme);
Cocommutator family_delta(const ContractionScheme& scheme);

/// Old parameter values as Laurent polynomials for fixed exponents.
std::map<Sym, LaurentPoly> parameter_images(const ContractionScheme& scheme, const std::vector<int>& exponents);

LaurentTensor transform_r(const Tensor& r, const ContractionScheme& scheme, const std::vector<int>& exponents);
LaurentCocommutator transform_delta(const Cocommutator& delta, const ContractionScheme& scheme,
                                    const std::vector<int>& exponents);

/// Smallest eps-degree among the coefficients (nullopt for zero).
std::optional<int> min_degree(const LaurentTensor& t);
std::optional<int> min_degree(const LaurentCocommutator& d);

/// eps -> 0 limit when every negative-degree coefficient vanishes.
std::optional<Tensor> tensor_limit(const LaurentTensor& t);
std::optional<Cocommutator> cocommutator_limit(const LaurentCocommutator& d);

enum class ContractedObject { r_matrix, cocommutator };

struct ExponentSearch {
  std::vector<int> minimal;
  int lower_bound = 0;
  int upper_bound = 0;
  std::size_t candidates_tried = 0;
};

/// Scans integer exponent vectors in [d, -d + 1]^k where d is the most
/// negative eps-degree at zero exponents, and returns the unique
/// componentwise-minimal convergent vector. Exponents of parameters absent
/// from the object are reported as 0. Throws std::runtime_error if nothing in
/// the box converges or no unique minimum exists.
ExponentSearch minimal_exponents(ContractedObject which, const ContractionScheme& scheme);

struct ConvergenceLedger {
  std::vector<std::string> exponent_names;
  std::vector<int> r_minimal;
  std::vector<int> delta_minimal;
  bool coboundary() const { return r_minimal == delta_minimal; }
};

struct ContractedBialgebra {
  ContractionFamily family;
  /// Absent when r diverges at the exponents where delta converges.
  std::optional<Tensor> r;
  Cocommutator delta;
  std::vector<int> exponents;
  ConvergenceLedger ledger;
};

/// Discovers the exponents, then takes the limit of r and delta over h4.
/// include_beta_plus only applies to the I+ families.
ContractedBialgebra contract(ContractionFamily family, bool include_beta_plus = false);

/// New h4 basis written in the old one: new_i = sum_j rows[i][j] old_j.
using BasisChange = std::array<std::array<MultiPoly, lie::kDim>, lie::kDim>;

/// Inverse of a unipotent basis change (identity plus nilpotent part).
BasisChange invert_unipotent(const BasisChange& change);
/// True when the new basis satisfies the h4 structure constants exactly.
bool preserves_h4(const BasisChange& change);
/// Re-expresses a tensor written in the old basis in the new one.
Tensor change_basis(const Tensor& t, const BasisChange& change);
Cocommutator change_basis(const Cocommutator& delta, const BasisChange& change);

enum class Normalization { remove_beta_plus, standard_II };

/// h4 standard II bialgebra with beta+- switched on:
/// theta N^M + xi A+^A- - beta+ A+^M - beta- A-^M.
ContractedBialgebra standard_II_with_betas();

/// Applies the oscillator basis change that removes beta+ (I+ families,
/// N' = N + (beta+/alpha+) M) or beta+- (standard II). `bindings` are
/// substituted first; for standard II both theta + xi and theta - xi must be
/// invertible afterwards. Throws std::domain_error naming a vanishing
/// combination and std::invalid_argument for a non-invertible one.
ContractedBialgebra oscillator_normalize(const ContractedBialgebra& b, Normalization which,
                                         const sym::Assignment& bindings = {});

}  // namespace gl2q::contract
