#include "genalg/zoo/zoo.hpp"

#include <map>

#include "genalg/exactmath/errors.hpp"

namespace genalg {

namespace {

template <class F>
using Tensor = OperationTensor<F>;

template <class F>
Tensor<F> make_tensor(std::size_t arity, OperationRole role) {
  return Tensor<F>{arity, role, {}};
}

template <class F>
void add_term(Tensor<F>& t, std::vector<std::uint32_t> inputs, std::size_t out,
              typename F::Element c) {
  t.terms.push_back({std::move(inputs), static_cast<std::uint32_t>(out), std::move(c)});
}

template <class F>
void add_vector_terms(const F& field, Tensor<F>& t, const std::vector<std::uint32_t>& inputs,
                      const Vec<F>& value, std::size_t offset) {
  for (std::size_t l = 0; l < value.size(); ++l) {
    if (!field.is_zero(value[l])) add_term(t, inputs, l + offset, value[l]);
  }
}

template <class F>
Tensor<F> unit_tensor(const F& field, const Vec<F>& e) {
  auto t = make_tensor<F>(0, OperationRole::kUnit);
  add_vector_terms(field, t, {}, e, 0);
  return t;
}

template <class F>
void require_char_not_two(const F& field) {
  if constexpr (F::kFinite) {
    if (field.modulus() == 2) throw InputError("the Albert algebra needs characteristic != 2");
  }
}

std::uint64_t reduce_coefficient(const Integer& c, std::uint64_t p) {
  return *to_u64(mod_floor(c, from_u64(p)));
}

using Poly = std::vector<std::uint64_t>;

// Remainder of a modulo the monic polynomial g, coefficients low to high.
Poly poly_mod(Poly a, const Poly& g, const PrimeField& f) {
  const std::size_t dg = g.size() - 1;
  while (a.size() > dg) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dg;
    for (std::size_t i = 0; i < dg; ++i) {
      a[shift + i] = f.sub(a[shift + i], f.mul(lead, g[i]));
    }
    a.pop_back();
  }
  return a;
}

Poly monic_reduced(const std::vector<Integer>& poly, std::uint64_t p) {
  if (poly.size() < 2) throw InputError("polynomial must have degree at least 1");
  Poly out;
  for (const auto& c : poly) out.push_back(reduce_coefficient(c, p));
  if (out.back() != 1 || poly.back() != 1) throw InputError("polynomial must be monic");
  return out;
}

}  // namespace

template <class F>
Multialgebra<F> zero_algebra(const F& field, std::size_t r) {
  return Multialgebra<F>(field, r, {make_tensor<F>(2, OperationRole::kProduct)});
}

template <class F>
Multialgebra<F> matrix_algebra(const F& field, std::size_t n) {
  if (n == 0) throw InputError("matrix size must be at least 1");
  auto product = make_tensor<F>(2, OperationRole::kProduct);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      for (std::uint32_t l = 0; l < n; ++l)
        add_term(product, {i * static_cast<std::uint32_t>(n) + j, j * static_cast<std::uint32_t>(n) + l},
                 i * n + l, field.one());
  Vec<F> e(n * n, field.zero());
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = field.one();
  return Multialgebra<F>(field, n * n, {std::move(product), unit_tensor(field, e)});
}

template <class F>
std::vector<Vec<F>> canonical_matrix_generators(const F& field, std::size_t n) {
  if (n == 0) throw InputError("matrix size must be at least 1");
  Vec<F> e11(n * n, field.zero());
  e11[0] = field.one();
  Vec<F> shift(n * n, field.zero());
  for (std::size_t i = 0; i < n; ++i) shift[i * n + (i + 1) % n] = field.one();
  return {e11, shift};
}

template <class F>
Multialgebra<F> split_quaternion(const F& field) {
  const Multialgebra<F> mat = matrix_algebra(field, 2);
  auto involution = make_tensor<F>(1, OperationRole::kInvolution);
  add_term(involution, {0}, 3, field.one());
  add_term(involution, {1}, 1, field.neg(field.one()));
  add_term(involution, {2}, 2, field.neg(field.one()));
  add_term(involution, {3}, 0, field.one());
  auto ops = mat.operations();
  ops.push_back(std::move(involution));
  return Multialgebra<F>(field, 4, std::move(ops));
}

template <class F>
Multialgebra<F> ground_field(const F& field) {
  auto product = make_tensor<F>(2, OperationRole::kProduct);
  add_term(product, {0, 0}, 0, field.one());
  auto involution = make_tensor<F>(1, OperationRole::kInvolution);
  add_term(involution, {0}, 0, field.one());
  return Multialgebra<F>(field, 1,
                         {std::move(product), unit_tensor(field, Vec<F>{field.one()}),
                          std::move(involution)});
}

template <class F>
Multialgebra<F> split_etale(const F& field, std::size_t n) {
  auto product = make_tensor<F>(2, OperationRole::kProduct);
  for (std::uint32_t i = 0; i < n; ++i) add_term(product, {i, i}, i, field.one());
  return Multialgebra<F>(field, n, {std::move(product), unit_tensor(field, Vec<F>(n, field.one()))});
}

template <class F>
Vec<F> distinct_entries_generator(const F& field, std::size_t n) {
  if constexpr (F::kFinite) {
    if (n > field.modulus()) {
      throw InputError(field.name() + " has fewer than " + std::to_string(n) +
                       " elements; no element of the split algebra has distinct entries");
    }
  }
  Vec<F> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(field.from_int(static_cast<std::int64_t>(i)));
  return v;
}

std::size_t etale_generator_count(std::uint64_t p, std::size_t n, bool unital) {
  const std::uint64_t target = unital ? n : n + 1;
  std::size_t k = 0;
  std::uint64_t power = 1;
  while (power < target) {
    power *= p;
    ++k;
  }
  return k;
}

std::vector<Vec<PrimeField>> etale_logq_generators(std::uint64_t p, std::size_t n, bool unital) {
  const PrimeField field(p);
  if (n == 0) throw InputError("split etale algebra needs n >= 1");
  const std::size_t k = etale_generator_count(p, n, unital);
  std::vector<Vec<PrimeField>> out(k, Vec<PrimeField>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t label = unital ? j : j + 1;
    for (std::size_t e = k; e-- > 0;) {
      out[e][j] = label % p;
      label /= p;
    }
  }
  return out;
}

bool is_irreducible_mod_p(std::uint64_t p, const std::vector<Integer>& poly) {
  const PrimeField f(p);
  const Poly g = monic_reduced(poly, p);
  const std::size_t deg = g.size() - 1;
  if (deg > 6) throw InputError("irreducibility is only decided up to degree 6");
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    const auto count = tuple_space_size(f, d, 1, 50'000'000);
    if (!count) throw InputError("factor search space too large for this prime");
    for (std::uint64_t idx = 0; idx < *count; ++idx) {
      Poly h(d + 1, 0);
      h[d] = 1;
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < d; ++i) {
        h[i] = rest % p;
        rest /= p;
      }
      const Poly rem = poly_mod(g, h, f);
      bool divides = true;
      for (auto c : rem) divides = divides && c == 0;
      if (divides) return false;
    }
  }
  return true;
}

Multialgebra<PrimeField> field_extension_etale(std::uint64_t p, const std::vector<Integer>& poly) {
  const PrimeField f(p);
  const Poly g = monic_reduced(poly, p);
  if (!is_irreducible_mod_p(p, poly)) throw InputError("polynomial is reducible mod " + std::to_string(p));
  const std::size_t k = g.size() - 1;
  std::vector<Poly> powers;
  for (std::size_t e = 0; e + 1 < 2 * k; ++e) {
    Poly m(e + 1, 0);
    m[e] = 1;
    Poly r = poly_mod(std::move(m), g, f);
    r.resize(k, 0);
    powers.push_back(std::move(r));
  }
  auto product = make_tensor<PrimeField>(2, OperationRole::kProduct);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j)
      add_vector_terms(f, product, {i, j}, powers[i + j], 0);
  Vec<PrimeField> one(k, 0);
  one[0] = 1;
  return Multialgebra<PrimeField>(f, k, {std::move(product), unit_tensor(f, one)});
}

template <class F>
Multialgebra<F> cayley_dickson(const Multialgebra<F>& algebra, const typename F::Element& mu) {
  const F& field = algebra.field();
  if (field.is_zero(mu)) throw InputError("the doubling scalar must be nonzero");
  if (!algebra.unit_index() || !algebra.involution_index()) {
    throw InputError("doubling needs an algebra with a unit and an involution");
  }
  const std::size_t m = algebra.dimension();
  std::vector<Vec<F>> basis, conj;
  for (std::size_t i = 0; i < m; ++i) {
    basis.push_back(algebra.basis_vector(i));
    conj.push_back(algebra.involute(basis.back()));
  }
  auto scale = [&](Vec<F> v, const typename F::Element& c) {
    for (auto& x : v) x = field.mul(x, c);
    return v;
  };

  auto product = make_tensor<F>(2, OperationRole::kProduct);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < m; ++j) {
      const std::uint32_t hi = static_cast<std::uint32_t>(m) + i;
      const std::uint32_t hj = static_cast<std::uint32_t>(m) + j;
      add_vector_terms(field, product, {i, j}, algebra.multiply(basis[i], basis[j]), 0);
      add_vector_terms(field, product, {i, hj}, algebra.multiply(basis[j], basis[i]), m);
      add_vector_terms(field, product, {hi, j}, algebra.multiply(basis[i], conj[j]), m);
      add_vector_terms(field, product, {hi, hj}, scale(algebra.multiply(conj[j], basis[i]), mu), 0);
    }
  }

  Vec<F> e = *algebra.unit();
  e.resize(2 * m, field.zero());

  auto involution = make_tensor<F>(1, OperationRole::kInvolution);
  for (std::uint32_t i = 0; i < m; ++i) {
    add_vector_terms(field, involution, {i}, conj[i], 0);
    add_term(involution, {static_cast<std::uint32_t>(m) + i}, m + i, field.neg(field.one()));
  }
  return Multialgebra<F>(field, 2 * m,
                         {std::move(product), unit_tensor(field, e), std::move(involution)});
}

template <class F>
Multialgebra<F> quaternion_algebra(const F& field, const typename F::Element& mu1,
                                   const typename F::Element& mu2) {
  return cayley_dickson(cayley_dickson(ground_field(field), mu1), mu2);
}

template <class F>
Multialgebra<F> split_octonion(const F& field) {
  return cayley_dickson(split_quaternion(field), field.one());
}

template <class F>
std::vector<Vec<F>> octonion_generators(const F& field) {
  std::vector<Vec<F>> out = canonical_matrix_generators(field, 2);
  for (auto& g : out) g.resize(8, field.zero());
  Vec<F> doubling(8, field.zero());
  doubling[4] = field.one();
  doubling[7] = field.one();
  out.push_back(std::move(doubling));
  return out;
}

template <class F>
Multialgebra<F> albert(const F& field) {
  require_char_not_two(field);
  const Multialgebra<F> oct = split_octonion(field);
  using Oct = Vec<F>;
  const Oct zero(8, field.zero());
  const Oct one = *oct.unit();
  std::vector<Oct> obasis, oconj;
  for (std::size_t t = 0; t < 8; ++t) {
    obasis.push_back(oct.basis_vector(t));
    oconj.push_back(oct.involute(obasis.back()));
  }
  std::vector<std::vector<Oct>> table(8, std::vector<Oct>(8));
  for (std::size_t s = 0; s < 8; ++s)
    for (std::size_t t = 0; t < 8; ++t) table[s][t] = oct.multiply(obasis[s], obasis[t]);

  auto omul = [&](const Oct& x, const Oct& y) {
    Oct out = zero;
    for (std::size_t s = 0; s < 8; ++s) {
      if (field.is_zero(x[s])) continue;
      for (std::size_t t = 0; t < 8; ++t) {
        if (field.is_zero(y[t])) continue;
        const auto c = field.mul(x[s], y[t]);
        for (std::size_t l = 0; l < 8; ++l) field.add_product(out[l], c, table[s][t][l]);
      }
    }
    return out;
  };
  auto oadd = [&](Oct& acc, const Oct& x) {
    for (std::size_t l = 0; l < 8; ++l) acc[l] = field.add(acc[l], x[l]);
  };

  using Matrix = std::array<std::array<Oct, 3>, 3>;
  constexpr std::size_t kRow[3] = {1, 2, 0};
  constexpr std::size_t kCol[3] = {2, 0, 1};

  auto to_matrix = [&](std::size_t coord) {
    Matrix x;
    for (auto& row : x) row.fill(zero);
    if (coord < 3) {
      x[coord][coord] = one;
    } else {
      const std::size_t k = (coord - 3) / 8, t = (coord - 3) % 8;
      x[kRow[k]][kCol[k]] = obasis[t];
      x[kCol[k]][kRow[k]] = oconj[t];
    }
    return x;
  };

  const auto half = field.inv(field.from_int(2));
  auto product = make_tensor<F>(2, OperationRole::kProduct);
  std::vector<Matrix> mats;
  for (std::size_t c = 0; c < 27; ++c) mats.push_back(to_matrix(c));
  for (std::uint32_t u = 0; u < 27; ++u) {
    for (std::uint32_t v = 0; v < 27; ++v) {
      Matrix z;
      for (auto& row : z) row.fill(zero);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k)
          for (std::size_t j = 0; j < 3; ++j) {
            oadd(z[i][k], omul(mats[u][i][j], mats[v][j][k]));
            oadd(z[i][k], omul(mats[v][i][j], mats[u][j][k]));
          }
      Vec<F> coords(27, field.zero());
      for (std::size_t i = 0; i < 3; ++i) {
        const auto lambda = z[i][i][0];
        Oct expected = one;
        for (auto& x : expected) x = field.mul(x, lambda);
        if (z[i][i] != expected) throw InvariantViolation("Albert product has a non-scalar diagonal");
        coords[i] = field.mul(half, lambda);
      }
      for (std::size_t k = 0; k < 3; ++k) {
        const Oct& c = z[kRow[k]][kCol[k]];
        Oct cbar = zero;
        for (std::size_t t = 0; t < 8; ++t) {
          if (field.is_zero(c[t])) continue;
          for (std::size_t l = 0; l < 8; ++l) field.add_product(cbar[l], c[t], oconj[t][l]);
        }
        if (z[kCol[k]][kRow[k]] != cbar) {
          throw InvariantViolation("Albert product is not Hermitian");
        }
        for (std::size_t t = 0; t < 8; ++t) coords[3 + 8 * k + t] = field.mul(half, c[t]);
      }
      add_vector_terms(field, product, {u, v}, coords, 0);
    }
  }
  Vec<F> e(27, field.zero());
  e[0] = e[1] = e[2] = field.one();
  return Multialgebra<F>(field, 27, {std::move(product), unit_tensor(field, e)});
}

template <class F>
std::vector<Vec<F>> albert_generators(const Multialgebra<F>& albert_algebra,
                                      const SearchBudget& budget) {
  auto cert = random_probe(albert_algebra, 3, budget);
  if (!cert) throw Inconclusive("no generating triple found within the random-trial budget");
  return cert->tuple;
}

template <class F>
Multialgebra<F> product_algebra(const Multialgebra<F>& a, const Multialgebra<F>& b) {
  if (!(a.field() == b.field())) throw InputError("product of algebras over different fields");
  const F& field = a.field();
  const std::size_t m = a.dimension();

  auto shifted = [&](const Tensor<F>& t, std::size_t offset) {
    Tensor<F> out = make_tensor<F>(t.arity, t.role);
    for (const auto& term : t.terms) {
      auto inputs = term.inputs;
      for (auto& i : inputs) i += static_cast<std::uint32_t>(offset);
      add_term(out, std::move(inputs), term.output + offset, term.coefficient);
    }
    return out;
  };
  auto combine = [&](const Tensor<F>& ta, const Tensor<F>& tb) {
    Tensor<F> out = shifted(ta, 0);
    for (auto& term : shifted(tb, m).terms) out.terms.push_back(std::move(term));
    return out;
  };

  std::vector<Tensor<F>> ops;
  ops.push_back(combine(a.operation(a.product_index()), b.operation(b.product_index())));
  if (a.unit_index() && b.unit_index()) {
    ops.push_back(combine(a.operation(*a.unit_index()), b.operation(*b.unit_index())));
  }
  if (a.involution_index() && b.involution_index()) {
    ops.push_back(
        combine(a.operation(*a.involution_index()), b.operation(*b.involution_index())));
  }
  std::vector<const Tensor<F>*> ga, gb;
  for (const auto& t : a.operations())
    if (t.role == OperationRole::kGeneric) ga.push_back(&t);
  for (const auto& t : b.operations())
    if (t.role == OperationRole::kGeneric) gb.push_back(&t);
  if (ga.size() != gb.size()) throw InputError("factors carry different numbers of operations");
  for (std::size_t k = 0; k < ga.size(); ++k) {
    if (ga[k]->arity != gb[k]->arity) throw InputError("paired operations differ in arity");
    ops.push_back(combine(*ga[k], *gb[k]));
  }
  return Multialgebra<F>(field, m + b.dimension(), std::move(ops));
}

template <class F>
bool is_commutative(const Multialgebra<F>& algebra) {
  const std::size_t r = algebra.dimension();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const auto bi = algebra.basis_vector(i), bj = algebra.basis_vector(j);
      if (algebra.multiply(bi, bj) != algebra.multiply(bj, bi)) return false;
    }
  return true;
}

namespace {

template <class F>
struct BasisProducts {
  std::vector<Vec<F>> basis;
  std::vector<std::vector<Vec<F>>> table;

  explicit BasisProducts(const Multialgebra<F>& algebra) {
    const std::size_t r = algebra.dimension();
    for (std::size_t i = 0; i < r; ++i) basis.push_back(algebra.basis_vector(i));
    table.assign(r, std::vector<Vec<F>>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) table[i][j] = algebra.multiply(basis[i], basis[j]);
  }
};

// (x, y, z) = (xy)z - x(yz) on basis vectors.
template <class F>
Vec<F> associator(const Multialgebra<F>& algebra, const BasisProducts<F>& bp, std::size_t i,
                  std::size_t j, std::size_t k) {
  Vec<F> left = algebra.multiply(bp.table[i][j], bp.basis[k]);
  const Vec<F> right = algebra.multiply(bp.basis[i], bp.table[j][k]);
  for (std::size_t l = 0; l < left.size(); ++l) left[l] = algebra.field().sub(left[l], right[l]);
  return left;
}

}  // namespace

template <class F>
std::optional<std::array<std::size_t, 3>> associativity_violation(const Multialgebra<F>& algebra) {
  const BasisProducts<F> bp(algebra);
  const std::size_t r = algebra.dimension();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (!is_zero_vector(algebra.field(), associator(algebra, bp, i, j, k))) {
          return std::array<std::size_t, 3>{i, j, k};
        }
  return std::nullopt;
}

template <class F>
bool is_alternative(const Multialgebra<F>& algebra) {
  const F& field = algebra.field();
  const BasisProducts<F> bp(algebra);
  const std::size_t r = algebra.dimension();
  std::vector<std::vector<std::vector<Vec<F>>>> assoc(
      r, std::vector<std::vector<Vec<F>>>(r, std::vector<Vec<F>>(r)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) assoc[i][j][k] = associator(algebra, bp, i, j, k);
  auto sum_zero = [&](const Vec<F>& a, const Vec<F>& b) {
    for (std::size_t l = 0; l < a.size(); ++l)
      if (!field.is_zero(field.add(a[l], b[l]))) return false;
    return true;
  };
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b)
      for (std::size_t y = 0; y < r; ++y) {
        if (a == b) {
          if (!is_zero_vector(field, assoc[a][a][y]) || !is_zero_vector(field, assoc[y][a][a])) {
            return false;
          }
        } else if (!sum_zero(assoc[a][b][y], assoc[b][a][y]) ||
                   !sum_zero(assoc[y][a][b], assoc[y][b][a])) {
          return false;
        }
      }
  return true;
}

template <class F>
bool jordan_identity_holds(const Multialgebra<F>& algebra, const Vec<F>& x, const Vec<F>& y) {
  const Vec<F> x2 = algebra.multiply(x, x);
  return algebra.multiply(x2, algebra.multiply(x, y)) ==
         algebra.multiply(x, algebra.multiply(x2, y));
}

std::string family_name(Family family) {
  switch (family) {
    case Family::kZero: return "zero";
    case Family::kMatrix: return "matrix";
    case Family::kSplitEtale: return "split-etale";
    case Family::kFieldExtension: return "field-extension";
    case Family::kQuaternion: return "quaternion";
    case Family::kSplitOctonion: return "split-octonion";
    case Family::kAlbert: return "albert";
    case Family::kMatrixProduct: return "matrix-product";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  static const std::map<std::string, Family> kNames = {
      {"zero", Family::kZero},
      {"matrix", Family::kMatrix},
      {"split-etale", Family::kSplitEtale},
      {"field-extension", Family::kFieldExtension},
      {"quaternion", Family::kQuaternion},
      {"split-octonion", Family::kSplitOctonion},
      {"albert", Family::kAlbert},
      {"matrix-product", Family::kMatrixProduct},
  };
  const auto it = kNames.find(name);
  if (it == kNames.end()) throw InputError("unknown algebra family '" + name + "'");
  return it->second;
}

template <class F>
Multialgebra<F> build(const F& field, const ZooRecipe& recipe) {
  switch (recipe.family) {
    case Family::kZero:
      return zero_algebra(field, recipe.n);
    case Family::kMatrix:
      return matrix_algebra(field, recipe.n);
    case Family::kSplitEtale:
      return split_etale(field, recipe.n);
    case Family::kFieldExtension:
      if constexpr (F::kFinite) {
        return field_extension_etale(field.modulus(), recipe.poly);
      } else {
        throw InputError("field-extension algebras are built over a prime field");
      }
    case Family::kQuaternion:
      if (recipe.mu.size() != 2) throw InputError("quaternion algebras take two scalars");
      return quaternion_algebra(field, field.from_rational(recipe.mu[0]),
                                field.from_rational(recipe.mu[1]));
    case Family::kSplitOctonion:
      return split_octonion(field);
    case Family::kAlbert:
      return albert(field);
    case Family::kMatrixProduct: {
      if (recipe.sizes.empty()) throw InputError("matrix-product needs at least one size");
      Multialgebra<F> out = matrix_algebra(field, recipe.sizes[0]);
      for (std::size_t k = 1; k < recipe.sizes.size(); ++k) {
        out = product_algebra(out, matrix_algebra(field, recipe.sizes[k]));
      }
      return out;
    }
  }
  throw InputError("unknown algebra family");
}

template <class F>
std::optional<std::vector<Vec<F>>> recipe_generators(const F& field, const ZooRecipe& recipe) {
  switch (recipe.family) {
    case Family::kZero: {
      const auto alg = zero_algebra(field, recipe.n);
      std::vector<Vec<F>> out;
      for (std::size_t i = 0; i < recipe.n; ++i) out.push_back(alg.basis_vector(i));
      return out;
    }
    case Family::kMatrix:
      return canonical_matrix_generators(field, recipe.n);
    case Family::kSplitEtale:
      if constexpr (F::kFinite) {
        return etale_logq_generators(field.modulus(), recipe.n, false);
      } else {
        return std::vector<Vec<F>>{distinct_entries_generator(field, recipe.n)};
      }
    case Family::kFieldExtension: {
      const std::size_t k = recipe.poly.empty() ? 0 : recipe.poly.size() - 1;
      Vec<F> x(k, field.zero());
      if (k > 0) x[k > 1 ? 1 : 0] = field.one();
      return std::vector<Vec<F>>{x};
    }
    case Family::kQuaternion: {
      Vec<F> i(4, field.zero()), j(4, field.zero());
      i[1] = field.one();
      j[2] = field.one();
      return std::vector<Vec<F>>{i, j};
    }
    case Family::kSplitOctonion:
      return octonion_generators(field);
    case Family::kAlbert:
    case Family::kMatrixProduct:
      return std::nullopt;
  }
  return std::nullopt;
}

#define GENALG_ZOO_INSTANTIATE(F)                                                              \
  template Multialgebra<F> zero_algebra(const F&, std::size_t);                                \
  template Multialgebra<F> matrix_algebra(const F&, std::size_t);                              \
  template std::vector<Vec<F>> canonical_matrix_generators(const F&, std::size_t);             \
  template Multialgebra<F> split_quaternion(const F&);                                         \
  template Multialgebra<F> ground_field(const F&);                                             \
  template Multialgebra<F> split_etale(const F&, std::size_t);                                 \
  template Vec<F> distinct_entries_generator(const F&, std::size_t);                           \
  template Multialgebra<F> cayley_dickson(const Multialgebra<F>&, const F::Element&);          \
  template Multialgebra<F> quaternion_algebra(const F&, const F::Element&, const F::Element&); \
  template Multialgebra<F> split_octonion(const F&);                                           \
  template std::vector<Vec<F>> octonion_generators(const F&);                                  \
  template Multialgebra<F> albert(const F&);                                                   \
  template std::vector<Vec<F>> albert_generators(const Multialgebra<F>&, const SearchBudget&); \
  template Multialgebra<F> product_algebra(const Multialgebra<F>&, const Multialgebra<F>&);    \
  template bool is_commutative(const Multialgebra<F>&);                                        \
  template std::optional<std::array<std::size_t, 3>> associativity_violation(                  \
      const Multialgebra<F>&);                                                                 \
  template bool is_alternative(const Multialgebra<F>&);                                        \
  template bool jordan_identity_holds(const Multialgebra<F>&, const Vec<F>&, const Vec<F>&);   \
  template Multialgebra<F> build(const F&, const ZooRecipe&);                                  \
  template std::optional<std::vector<Vec<F>>> recipe_generators(const F&, const ZooRecipe&);

GENALG_ZOO_INSTANTIATE(PrimeField)
GENALG_ZOO_INSTANTIATE(RationalField)

#undef GENALG_ZOO_INSTANTIATE

}  // namespace genalg
