// kiselman/semigroup.hpp -- exact finite structure of K_n: enumeration,
// multiplication, idempotents, nilpotent blocks, Green's relations,
// (anti)automorphisms, isolated subsemigroups, and the deletion properties
// used to separate elements of the left ideal K_n * e_{2..n}.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kiselman/rewrite.hpp"
#include "kiselman/words.hpp"

namespace kiselman {

/// Thrown when an enumeration or table materialization exceeds its cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element of K_n, stored as its canonical word.  Constructing from any
/// representative normalizes; two elements are equal iff their canonical
/// words are.
class Element {
 public:
  explicit Element(const Word& representative);
  static Element from_canonical(Word w);  // validates, no rewriting

  Rank rank() const { return word_.rank(); }
  const Word& word() const { return word_; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.word_ == b.word_;
  }

 private:
  Element() = default;
  Word word_;
};

Element multiply(const Element& x, const Element& y);

inline constexpr long kDefaultElementCap = 1'000'000;

/// Fully enumerated K_n.  elements() is sorted length-then-lex with the
/// identity at index 0.  The |S| x n right-multiplication table is always
/// present; the full |S| x |S| product table is built eagerly when |S| is
/// small enough and can be materialized later with product_table().
class SemigroupTable {
 public:
  Rank rank() const { return n_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(elements_.size()); }
  const std::vector<Word>& elements() const { return elements_; }
  const Word& element(std::uint32_t i) const { return elements_[i]; }
  std::optional<std::uint32_t> index_of(const Word& canonical) const;

  /// Index of elements[i] * a_g.
  std::uint32_t right_multiply(std::uint32_t i, Letter g) const;

  /// Index of elements[i] * elements[j]; uses the full table when present,
  /// otherwise walks the right-multiplication table along elements[j].
  std::uint32_t product(std::uint32_t i, std::uint32_t j) const;

  bool has_product_table() const { return !product_.empty(); }

  /// Materialize the full product table (no-op when present).  Throws
  /// ResourceLimitError when |S|^2 entries would be unreasonable.
  void build_product_table();
  const std::vector<std::uint32_t>& product_table() const { return product_; }

  std::vector<std::uint32_t> idempotent_indices() const;

  friend SemigroupTable enumerate(Rank n, long element_cap);

 private:
  Rank n_ = 1;
  std::vector<Word> elements_;
  std::unordered_map<Word, std::uint32_t, WordHash> index_;
  std::vector<std::uint32_t> rmul_;  // size() * n_
  std::vector<std::uint32_t> product_;
};

/// Breadth-first closure of {e} under right multiplication by generators,
/// then sorted length-then-lex.  Deterministic.  Throws ResourceLimitError
/// when more than element_cap elements appear.
SemigroupTable enumerate(Rank n, long element_cap = kDefaultElementCap);

/// e_X: the product of the letters of X in decreasing order (e for empty X).
Element idempotent(Rank n, Content X);

/// All 2^n idempotents, ordered by content bit mask.
std::vector<Element> idempotents(Rank n);

/// Least k >= 1 with x^k idempotent, together with x^k.  The power equals
/// e_content(x) and k <= max(1, |content(x)|).
std::pair<long, Element> power_to_idempotent(const Element& x);

struct IdempotentProduct {
  bool idempotent = false;
  Element value;
};

/// Product e_X * e_Y and whether it is idempotent, which happens iff every
/// i in X\Y exceeds every j in Y\X (equivalently the product is e_{X u Y}).
IdempotentProduct idempotent_product(Rank n, Content X, Content Y);

/// Natural partial order on idempotents: f1 <= f2 iff f1 f2 = f2 f1 = f1,
/// equivalently content(f2) is a subset of content(f1).  Throws unless both
/// arguments are idempotent.
bool natural_leq(const Element& f1, const Element& f2);

struct NilpotentBlock {
  Content content;
  std::vector<std::uint32_t> members;  // ascending element indices
  std::uint32_t zero = 0;              // index of e_X
  int nilpotency_class = 1;            // least k with (block)^k = {zero}
};

/// The maximal nilpotent subsemigroup {w : content(w) = X}; the class is
/// verified by iterated set products, and equals max(1, |X|).
NilpotentBlock nilpotent_subsemigroup(const SemigroupTable& t, Content X);

/// All 2^n blocks, ordered by content bit mask; they partition the table.
std::vector<NilpotentBlock> nilpotent_partition(const SemigroupTable& t);

enum class GreenRelation { L, R, H, D, J };

struct GreenClasses {
  GreenRelation relation = GreenRelation::L;
  std::vector<std::uint32_t> class_of;          // element -> class id
  std::vector<std::vector<std::uint32_t>> classes;
  bool all_singletons() const;
};

/// Green's classes via principal ideal comparison (H as L meet R, D = J in
/// a finite semigroup).  All classes in K_n are singletons.
GreenClasses green_classes(const SemigroupTable& t, GreenRelation r);

/// True iff for every idempotent f the maximal subgroup at f is {f}.
bool maximal_subgroups_trivial(const SemigroupTable& t);

/// All permutations sigma of {1..n} whose extension a_i -> a_sigma(i)
/// preserves the product table; each result is the image vector
/// (sigma(1), .., sigma(n)).  Only the identity qualifies.  The n!
/// search is supported for rank <= 8.
std::vector<std::vector<Letter>> automorphisms(const SemigroupTable& t);

/// The involutive antiautomorphism: reverse the word and replace each
/// letter i by n+1-i, then normalize.
Element antiautomorphism_tau(const Element& x);

/// All nonempty families of contents closed under union, each family sorted
/// by content bit mask.  Exponential in 2^n; supported for n <= 4.
std::vector<std::vector<Content>> union_closed_families(Rank n);

/// Element indices whose content lies in the family; the preimage of a
/// union-closed family is an isolated subsemigroup.  Throws
/// std::invalid_argument when the family is not union-closed.
std::vector<std::uint32_t> isolated_preimage(const SemigroupTable& t,
                                             const std::vector<Content>& family);

/// Whether the preimage is completely isolated: for all contents A, B with
/// A u B in the family, A or B is in the family.  Throws when the family is
/// not union-closed.
bool completely_isolated_check(Rank n, const std::vector<Content>& family);

enum class DeletionProperty { prop15, prop16 };

struct DeletionCheckReport {
  bool ok = false;
  bool exhaustive = false;
  long checked = 0;
  std::string counterexample;  // empty when ok
};

/// Separation properties of right multiplication by a_1 and f = e_{2..n}
/// over canonical words with letters in {2..n}:
///  - prop15: v != w  implies  v a_1 f != w a_1 f;
///  - prop16: for u != v with w a_1 u and w a_1 v canonical,
///            wu != wv, w u a_1 != w v a_1 and w u a_1 f != w v a_1 f.
/// Exhaustive when the instance space fits in budget (and force_sampling is
/// off), otherwise exactly budget seeded samples.
DeletionCheckReport deletion_property_check(Rank n, DeletionProperty which,
                                            long budget, std::uint64_t seed,
                                            bool force_sampling = false);

struct TraceLocalityReport {
  bool ok = false;
  bool exhaustive = false;
  long checked = 0;
  std::string counterexample;
};

/// For canonical alpha, beta over {2..n} with alpha a_1 beta canonical,
/// normalizing alpha beta only ever erases letters of the alpha part via
/// drop_left steps (any strategy), and under the rightmost strategy the
/// erased positions move weakly leftwards.
TraceLocalityReport trace_locality_check(Rank n, long budget,
                                         std::uint64_t seed);

/// Cayley table as CSV: a header row with the element indices, then one row
/// per element of product indices.  Materializes the product table.
std::string cayley_csv(SemigroupTable& t);

/// JSON array of {"index", "word", "content", "idempotent"} in element order.
std::string elements_json(const SemigroupTable& t);

/// Right Cayley graph in DOT: nodes are canonical words (identity shown as
/// "e"), one edge per generator labeled with its letter.
std::string cayley_dot(const SemigroupTable& t);

}  // namespace kiselman
