#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "genalg/algebra/multialgebra.hpp"
#include "genalg/search/search.hpp"

namespace genalg {

// ---------------------------------------------------------------------------
// Constructors. Every algebra carries a designated product; unit constants and
// involutions are attached where the family has them.
// ---------------------------------------------------------------------------

/// F^r with the identically zero product.
template <class F>
Multialgebra<F> zero_algebra(const F& field, std::size_t r);

/// Mat_n(F) on the matrix units, E_{i,j} at index i*n + j, with its unit.
template <class F>
Multialgebra<F> matrix_algebra(const F& field, std::size_t n);

/// E_{1,1} and the cyclic shift E_{1,2} + ... + E_{n-1,n} + E_{n,1}.
template <class F>
std::vector<Vec<F>> canonical_matrix_generators(const F& field, std::size_t n);

/// Mat_2(F) with the symplectic involution [[a,b],[c,d]] -> [[d,-b],[-c,a]].
template <class F>
Multialgebra<F> split_quaternion(const F& field);

/// The one-dimensional algebra F with the identity involution.
template <class F>
Multialgebra<F> ground_field(const F& field);

/// F^n with the componentwise product and its unit.
template <class F>
Multialgebra<F> split_etale(const F& field, std::size_t n);

/// (1, 2, ..., n) read in F. Throws InputError when F has fewer than n
/// elements.
template <class F>
Vec<F> distinct_entries_generator(const F& field, std::size_t n);

/// Number of generators the base-p digit construction uses.
std::size_t etale_generator_count(std::uint64_t p, std::size_t n, bool unital);

/// Elements of F_p^n whose coordinate columns are pairwise distinct (and
/// nonzero when `unital` is false): column j holds the base-p digits of j+1,
/// or of j in the unital case, most significant digit in the first element.
std::vector<Vec<PrimeField>> etale_logq_generators(std::uint64_t p, std::size_t n, bool unital);

/// F_p[x]/(poly) on the basis 1, x, ..., x^{k-1}; `poly` lists coefficients
/// from the constant term up and must be monic and irreducible of degree
/// between 1 and 6.
Multialgebra<PrimeField> field_extension_etale(std::uint64_t p,
                                               const std::vector<Integer>& poly);

/// Whether the monic polynomial has no factor of degree between 1 and
/// deg/2 over F_p.
bool is_irreducible_mod_p(std::uint64_t p, const std::vector<Integer>& poly);

/// Doubling of a unital algebra with involution: on pairs,
/// (a,b)(c,d) = (ac + mu*conj(d)*b, d*a + b*conj(c)), unit (e,0),
/// involution (a,b) -> (conj(a), -b). The first half of the basis is (e_i,0).
template <class F>
Multialgebra<F> cayley_dickson(const Multialgebra<F>& algebra, const typename F::Element& mu);

/// Two doublings of the ground field.
template <class F>
Multialgebra<F> quaternion_algebra(const F& field, const typename F::Element& mu1,
                                   const typename F::Element& mu2);

/// Doubling of split_quaternion with mu = 1.
template <class F>
Multialgebra<F> split_octonion(const F& field);

/// (E11, 0), (cyclic shift, 0) and (0, unit).
template <class F>
std::vector<Vec<F>> octonion_generators(const F& field);

/// The 27-dimensional Jordan algebra of 3x3 Hermitian matrices over the split
/// octonions under x o y = (xy + yx)/2, with the identity matrix as unit.
///
/// Coordinates 0..2 are the diagonal scalars; coordinates 3 + 8k .. 10 + 8k
/// hold the octonion c_{k+1}, placed at (1,2), (2,0) and (0,1) respectively,
/// with conjugates at the transposed positions. Throws InputError in
/// characteristic 2.
template <class F>
Multialgebra<F> albert(const F& field);

/// A generating triple found by seeded random probing. Throws Inconclusive if
/// the budget runs out.
template <class F>
std::vector<Vec<F>> albert_generators(const Multialgebra<F>& albert_algebra,
                                      const SearchBudget& budget);

/// A x B with componentwise operations, matched by role. Generic operations
/// are paired in declared order and must agree in arity.
template <class F>
Multialgebra<F> product_algebra(const Multialgebra<F>& a, const Multialgebra<F>& b);

// ---------------------------------------------------------------------------
// Structural checks on basis elements (all exhaustive).
// ---------------------------------------------------------------------------

template <class F>
bool is_commutative(const Multialgebra<F>& algebra);

/// The first basis triple (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k).
template <class F>
std::optional<std::array<std::size_t, 3>> associativity_violation(const Multialgebra<F>& algebra);

/// Left and right alternative laws, checked in linearized form together with
/// the diagonal cases so that the test is complete in every characteristic.
template <class F>
bool is_alternative(const Multialgebra<F>& algebra);

/// (x^2 o (x o y)) == x o (x^2 o y).
template <class F>
bool jordan_identity_holds(const Multialgebra<F>& algebra, const Vec<F>& x, const Vec<F>& y);

// ---------------------------------------------------------------------------
// Recipes, as used by the command line.
// ---------------------------------------------------------------------------

enum class Family {
  kZero,
  kMatrix,
  kSplitEtale,
  kFieldExtension,
  kQuaternion,
  kSplitOctonion,
  kAlbert,
  kMatrixProduct,
};

std::string family_name(Family family);
Family parse_family(const std::string& name);

struct ZooRecipe {
  Family family = Family::kMatrix;
  std::size_t n = 2;
  std::vector<Integer> poly;
  std::vector<Rational> mu = {-1, -1};
  std::vector<std::size_t> sizes;
};

template <class F>
Multialgebra<F> build(const F& field, const ZooRecipe& recipe);

/// The family's canonical generator tuple, when it has one without search.
template <class F>
std::optional<std::vector<Vec<F>>> recipe_generators(const F& field, const ZooRecipe& recipe);

}  // namespace genalg
