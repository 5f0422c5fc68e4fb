// kiselman/algebra.hpp -- the rational semigroup algebra QK_n: exact
// elements, the one-dimensional representations rho_X, the complete system
// of primitive orthogonal idempotents, diagonal projections, corner
// dimensions, and the faithful projective module on K_n e_{2..n}.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kiselman/repr.hpp"
#include "kiselman/semigroup.hpp"
#include "kiselman/words.hpp"

namespace kiselman {

/// Exact rational scalar (always reduced, positive denominator).
using Rational = mpq_class;

/// A finitely supported rational combination of elements of K_n, keyed by
/// canonical words in element order.  Zero coefficients are never stored.
/// The zero *element* of K_n (the word n,n-1,..,1) is an ordinary basis
/// word here; only the module below works modulo it.
class AlgebraElement {
 public:
  explicit AlgebraElement(Rank n = 1);
  static AlgebraElement unit(Rank n);
  static AlgebraElement from_word(const Word& w);  // normalizes
  static AlgebraElement from_element(const Element& x);

  Rank rank() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Rational, WordLess>& terms() const { return terms_; }
  Rational coeff(const Word& canonical) const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;  // algebra product
  AlgebraElement scaled(const Rational& c) const;
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  Rank n_ = 1;
  std::map<Word, Rational, WordLess> terms_;
};

/// rho_X(w) = 1 if content(w) is a subset of X, else 0; these are the 2^n
/// one-dimensional representations.  The second form extends linearly.
Rational rho(Content X, const Element& x);
Rational rho(Content X, const AlgebraElement& a);

/// e_X^(n) = a_{i_1} .. a_{i_s} (e - a_{j_1}) .. (e - a_{j_t}) with X =
/// {i_1 > .. > i_s} and complement {j_1 < .. < j_t}.  The 2^n of them form a
/// complete system of primitive, pairwise orthogonal idempotents with
/// rho_Y(e_X^(n)) = delta_XY.
AlgebraElement primitive_idempotent(Rank n, Content X);

struct SystemReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Verify idempotency, pairwise orthogonality, summing to the unit, and the
/// rho duality for the whole system at rank n.
SystemReport idempotent_system_check(Rank n);

/// pi_i = P_(i-1) - P_i for i < n and pi_n = P_(n-1), where P_i is the
/// descending chain prefix a_n a_(n-1) .. a_(n-i+1).  They sum to the unit
/// and psi maps pi_i to the diagonal unit E_ii.
AlgebraElement kiselman_projection(Rank n, int i);

/// dim over Q of span{ left * x * right : x in K_n } for idempotents left,
/// right of QK_n, by exact sparse Gaussian elimination on the coefficient
/// rows.  Throws std::invalid_argument when a factor is not idempotent.
int corner_dimension(const SemigroupTable& t, const AlgebraElement& left,
                     const AlgebraElement& right);

struct SizeRecursionReport {
  bool holds = false;
  long size_n = 0;
  long size_prev = 0;
  int corner_dim = 0;  // dim (e - a_n) QK_n a_n
};

/// |K_n| = 2 |K_(n-1)| + dim (e - a_n) QK_n a_n, verified exactly.
SizeRecursionReport size_recursion_check(Rank n);

/// The projective module QK_n-bar pi_n: basis indices are the nonzero
/// elements of the left ideal K_n e_{2..n} (the zero element of K_n spans
/// the quotiented line and is excluded).
struct IdealModule {
  Rank n = 1;
  std::vector<std::uint32_t> basis;  // ascending element indices
  std::uint32_t zero_index = 0;      // index of the zero element e_{1..n}
};

IdealModule projective_module(const SemigroupTable& t);

/// Action matrix of elements[x] on the module: column b maps basis[b] to
/// x * basis[b], a basis element or (for the zero element) 0.  Entries are
/// 0/1, and action(xy) = action(x) action(y).
IntMatrix module_action(const SemigroupTable& t, const IdealModule& m,
                        std::uint32_t x);

struct ModuleFaithfulnessReport {
  bool faithful = false;
  int dimension = 0;
  std::uint32_t witness_a = 0, witness_b = 0;  // valid iff !faithful
};

/// The module is faithful: all |K_n| action matrices are distinct.
ModuleFaithfulnessReport module_faithfulness_check(const SemigroupTable& t);

struct AnnihilationReport {
  bool annihilates = false;
  AlgebraElement witness;  // e_{2..n} - e_{1..n}
};

/// For X != {2..n} the module QK_n-bar e_X^(n) is not faithful: the nonzero
/// element e_{2..n} - e_{1..n} acts as zero, i.e. (e_{2..n} - e_{1..n}) x
/// e_X^(n) = 0 for every x.  Throws std::invalid_argument for X = {2..n}.
AnnihilationReport nonfaithful_projective_witness(const SemigroupTable& t,
                                                  Content X);

/// Linear extension of psi to QK_n; the supported uses are integral, and a
/// non-integer entry throws std::invalid_argument.
IntMatrix psi_linear(const AlgebraElement& a);

/// JSON array [{"word": [letters], "coeff": "p/q"}, ...] in element order.
std::string algebra_element_json(const AlgebraElement& a);

}  // namespace kiselman
