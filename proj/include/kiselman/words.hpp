// kiselman/words.hpp -- words over the generators a_1..a_n of the Kiselman
// semigroup K_n: contents, canonicity, length and multiplicity bounds.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace kiselman {

using Letter = int;
using Rank = int;

/// Largest supported rank.  Contents are stored in 32-bit masks and every
/// algorithm here is exact, so the cap is a representation limit only.
inline constexpr Rank kMaxRank = 32;

bool valid_rank(Rank n);
void require_rank(Rank n);

/// A subset of the letter set {1..n}, stored as a bit mask (bit i-1 is
/// letter i).  Contents are rank agnostic; operations that need a rank take
/// one explicitly and validate with fits().
class Content {
 public:
  Content() = default;
  static Content of(std::initializer_list<Letter> letters);
  static Content from_letters(const std::vector<Letter>& letters);
  static Content full(Rank n);

  std::uint32_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const;
  bool contains(Letter i) const;
  Content with(Letter i) const;
  bool subset_of(Content other) const;
  Content united(Content other) const;
  Content minus(Content other) const;
  bool fits(Rank n) const;
  std::vector<Letter> to_letters() const;  // ascending

  friend bool operator==(Content a, Content b) { return a.bits_ == b.bits_; }
  friend bool operator<(Content a, Content b) { return a.bits_ < b.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

/// A word over a_1..a_n, kept together with its rank n.  Letters are the
/// integers 1..n.  Words of different ranks are never equal and may not be
/// concatenated; mixing ranks is a programming error and throws.
class Word {
 public:
  Word() = default;  // the empty word at rank 1
  explicit Word(Rank n);
  Word(Rank n, std::vector<Letter> letters);

  Rank rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter at(std::size_t pos) const { return letters_[pos]; }
  Word appended(Letter g) const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }

 private:
  Rank rank_ = 1;
  std::vector<Letter> letters_;
};

/// Strict order on words: rank, then length, then lexicographic.  Within one
/// semigroup this is the element order used everywhere (enumeration, JSON
/// exports, algebra supports).
struct WordLess {
  bool operator()(const Word& a, const Word& b) const;
};

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

Word concat(const Word& a, const Word& b);

/// Copy of w with every letter shifted by delta, at the given rank.
Word relettered(const Word& w, int delta, Rank new_rank);

/// The set of letters occurring in w.
Content content(const Word& w);

/// True iff w is the canonical form of its element: between any two
/// consecutive occurrences of a letter i there is some strictly larger and
/// some strictly smaller letter.  Checking consecutive occurrences only is
/// equivalent to checking every pair of equal letters: the segment between a
/// non-consecutive pair contains a segment between some consecutive pair,
/// so it inherits both witnesses, while any violation is already a violation
/// for a consecutive pair.
bool is_canonical(const Word& w);

/// Sharp upper bound L(n) for the length of a canonical word:
/// L(2k) = 2^(k+1) - 2 and L(2k+1) = 3 * 2^k - 2.
long length_bound(Rank n);

/// Per-letter occurrence caps for canonical words, indexed 1..n in the
/// returned vector (entry 0 unused): 2^(i-1) for i <= ceil(n/2) and 2^(n-i)
/// for i >= ceil((n+1)/2); for odd n the middle letter satisfies both.
std::vector<long> letter_multiplicity_bounds(Rank n);

/// Copy of w with every occurrence of the letter i removed.
Word delete_letter(const Word& w, Letter i);

/// A canonical word of the maximal length L(n), witnessing that the bound is
/// sharp.  Recursively, with T the word for rank n-2 shifted up by one
/// letter, the word is T a_1 a_n T; the base cases are the empty word and
/// a_1.  Every letter meets its multiplicity cap exactly.
Word sharpness_word(Rank n);

/// Parse a word from text: comma-separated letters ("3,4,2,1,3,2"), or a
/// digit string ("1213", only when n <= 9 so letters are single digits).
/// The empty string is the empty word.
Word parse_word(const std::string& text, Rank n);

/// Comma-separated rendering; the empty word renders as "".
std::string to_text(const Word& w);

}  // namespace kiselman
