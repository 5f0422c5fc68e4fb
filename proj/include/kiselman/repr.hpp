// kiselman/repr.hpp -- exact matrix representations of K_n: the integer
// representation psi, the generic polynomial representation kappa over
// Z[xi_ij], and its faithful integer specialization kappa' at xi_ij = m_j^i,
// together with faithfulness certification and nilpotency of matrices.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kiselman/semigroup.hpp"
#include "kiselman/words.hpp"

namespace kiselman {

/// Dense square matrix over arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int dim);
  static IntMatrix identity(int dim);

  int dim() const { return dim_; }
  const mpz_class& at(int r, int c) const { return a_[r * dim_ + c]; }
  mpz_class& at(int r, int c) { return a_[r * dim_ + c]; }
  bool is_zero() const;

  IntMatrix operator*(const IntMatrix& o) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// Compact serialization used as a hash/collision key.
  std::string key() const;

 private:
  int dim_ = 0;
  std::vector<mpz_class> a_;
};

/// Sparse multivariate polynomial over Z in the variables xi_ij for
/// 1 <= i < j <= n (rank-determined variable set).  Terms are kept in
/// graded lexicographic order of their dense exponent vectors; zero
/// coefficients are never stored.
class MPoly {
 public:
  using Mono = std::vector<unsigned>;
  struct GradedLex {
    bool operator()(const Mono& a, const Mono& b) const;
  };
  using Terms = std::map<Mono, mpz_class, GradedLex>;

  explicit MPoly(Rank n = 1);
  static MPoly constant(Rank n, const mpz_class& c);
  static MPoly xi(Rank n, int i, int j);

  Rank rank() const { return n_; }
  int var_count() const;
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  friend bool operator==(const MPoly&, const MPoly&) = default;

  /// Evaluate at values[v] for variable index v (see poly_var_index).
  mpz_class evaluate(const std::vector<mpz_class>& values) const;

 private:
  Rank n_ = 1;
  Terms terms_;
};

/// Variable bookkeeping: variables are the pairs (i, j), i < j <= n, in
/// lexicographic order.
int poly_var_count(Rank n);
int poly_var_index(Rank n, int i, int j);
std::pair<int, int> poly_var_pair(Rank n, int v);

/// Dense square matrix over MPoly (all entries share the rank).
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int dim, Rank n);
  static PolyMatrix identity(int dim, Rank n);

  int dim() const { return dim_; }
  Rank rank() const { return n_; }
  const MPoly& at(int r, int c) const { return a_[r * dim_ + c]; }
  MPoly& at(int r, int c) { return a_[r * dim_ + c]; }
  bool is_zero() const;

  PolyMatrix operator*(const PolyMatrix& o) const;
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  /// Entry-wise evaluation.
  IntMatrix evaluate(const std::vector<mpz_class>& values) const;

 private:
  int dim_ = 0;
  Rank n_ = 1;
  std::vector<MPoly> a_;
};

/// psi_n(a_i): the identity with row n-i+1 zeroed and column n-i+1 replaced
/// by (1,..,1,0,..,0)^t with n-i ones.
IntMatrix kiselman_generator(Rank n, Letter i);

/// Image of a word under psi (product of generator images in word order).
IntMatrix psi(const Word& w);

/// Images of every element, memoized along canonical-prefix structure.
std::vector<IntMatrix> psi_images(const SemigroupTable& t);

/// Height sum_r (#nonzeros in row r) * 2^r with rows numbered from 1.  Left
/// multiplication by a generator strictly decreases it unless it fixes the
/// matrix.
std::uint64_t height(const IntMatrix& m);

/// kappa_n(a_i): as psi but column n-i+1 carries the variables xi_{k,n-i+1}.
PolyMatrix kappa_generator(Rank n, Letter i);
PolyMatrix kappa(const Word& w);
std::vector<PolyMatrix> kappa_images(const SemigroupTable& t);

/// m_1 = l_1 = 1, m_i = l_(i-1) + 1, l_i = i^(2^i) * m_i^(i 2^i).  Entries
/// are indexed 1..upto ([0] unused).  l grows doubly exponentially (l_3
/// already has 91 digits); upto is capped at 5 here, which the integer
/// specializations below never exceed for supported ranks.
struct MLSequences {
  std::vector<mpz_class> m, l;
};
MLSequences ml_sequences(int upto);

/// kappa' = kappa at xi_ij = m_j^i: the generator matrices are evaluated
/// first and images are then products of integer matrices.  Faithful, with
/// every entry of every image strictly below l_n.
IntMatrix kappa_prime_generator(Rank n, Letter i);
IntMatrix kappa_prime(const Word& w);
std::vector<IntMatrix> kappa_prime_images(const SemigroupTable& t);

enum class RepKind { psi, kappa, kappa_prime };

struct FaithfulnessReport {
  bool faithful = false;
  // Valid iff !faithful: the first pair of element indices (in element
  // order) whose images collide.
  std::uint32_t witness_a = 0, witness_b = 0;
};

/// Compute all images over the table and look for collisions.
FaithfulnessReport faithfulness_check(const SemigroupTable& t, RepKind kind);

/// Check the defining relations on the generator images: M_i^2 = M_i and
/// M_i M_j M_i = M_j M_i M_j = M_j M_i for i < j (symbolically for kappa).
bool representation_relations_ok(Rank n, RepKind kind);

/// Least k >= 1 with m^k = 0; throws std::invalid_argument when m is not
/// nilpotent (i.e. m^dim != 0).
int nilpotency_class_of_matrix(const IntMatrix& m);

/// {"n": dim, "entries": [[decimal strings]]}.
std::string matrix_json(const IntMatrix& m);

/// [{"coeff": decimal string, "monomial": {"i,j": exponent, ...}}, ...] in
/// term order; the zero polynomial is the empty array.
std::string poly_json(const MPoly& p);

/// {"n": dim, "entries": [[poly, ...], ...]} with entries as in poly_json.
std::string poly_matrix_json(const PolyMatrix& m);

}  // namespace kiselman
