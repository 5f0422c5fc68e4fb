#include "kiselman/words.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace kiselman {

bool valid_rank(Rank n) { return n >= 1 && n <= kMaxRank; }

void require_rank(Rank n) {
  if (!valid_rank(n))
    throw std::invalid_argument("rank must be between 1 and " +
                                std::to_string(kMaxRank) + ", got " +
                                std::to_string(n));
}

namespace {
void require_letter(Letter i, Rank n) {
  if (i < 1 || i > n)
    throw std::invalid_argument("letter " + std::to_string(i) +
                                " out of range 1.." + std::to_string(n));
}
}  // namespace

Content Content::of(std::initializer_list<Letter> letters) {
  Content c;
  for (Letter i : letters) c = c.with(i);
  return c;
}

Content Content::from_letters(const std::vector<Letter>& letters) {
  Content c;
  for (Letter i : letters) c = c.with(i);
  return c;
}

Content Content::full(Rank n) {
  require_rank(n);
  Content c;
  c.bits_ = n == kMaxRank ? ~0u : (1u << n) - 1u;
  return c;
}

int Content::size() const { return std::popcount(bits_); }

bool Content::contains(Letter i) const {
  return i >= 1 && i <= kMaxRank && (bits_ >> (i - 1)) & 1u;
}

Content Content::with(Letter i) const {
  require_letter(i, kMaxRank);
  Content c = *this;
  c.bits_ |= 1u << (i - 1);
  return c;
}

bool Content::subset_of(Content other) const {
  return (bits_ & ~other.bits_) == 0;
}

Content Content::united(Content other) const {
  Content c = *this;
  c.bits_ |= other.bits_;
  return c;
}

Content Content::minus(Content other) const {
  Content c = *this;
  c.bits_ &= ~other.bits_;
  return c;
}

bool Content::fits(Rank n) const { return subset_of(full(n)); }

std::vector<Letter> Content::to_letters() const {
  std::vector<Letter> out;
  for (Letter i = 1; i <= kMaxRank; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

Word::Word(Rank n) : rank_(n) { require_rank(n); }

Word::Word(Rank n, std::vector<Letter> letters)
    : rank_(n), letters_(std::move(letters)) {
  require_rank(n);
  for (Letter i : letters_) require_letter(i, rank_);
}

Word Word::appended(Letter g) const {
  require_letter(g, rank_);
  Word w = *this;
  w.letters_.push_back(g);
  return w;
}

bool WordLess::operator()(const Word& a, const Word& b) const {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters() < b.letters();
}

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = static_cast<std::size_t>(w.rank()) * 0x9e3779b97f4a7c15ull;
  for (Letter g : w.letters())
    h = (h ^ static_cast<std::size_t>(g)) * 0x100000001b3ull;
  return h;
}

Word concat(const Word& a, const Word& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("cannot concatenate words of ranks " +
                                std::to_string(a.rank()) + " and " +
                                std::to_string(b.rank()));
  std::vector<Letter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return Word(a.rank(), std::move(letters));
}

Word relettered(const Word& w, int delta, Rank new_rank) {
  require_rank(new_rank);
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (Letter g : w.letters()) {
    Letter h = g + delta;
    require_letter(h, new_rank);
    letters.push_back(h);
  }
  return Word(new_rank, std::move(letters));
}

Content content(const Word& w) {
  return Content::from_letters(w.letters());
}

bool is_canonical(const Word& w) {
  const auto& v = w.letters();
  std::vector<std::size_t> last(static_cast<std::size_t>(w.rank()) + 1,
                                v.size());
  for (std::size_t q = 0; q < v.size(); ++q) {
    Letter g = v[q];
    std::size_t p = last[static_cast<std::size_t>(g)];
    if (p != v.size()) {
      bool larger = false, smaller = false;
      for (std::size_t r = p + 1; r < q; ++r) {
        larger = larger || v[r] > g;
        smaller = smaller || v[r] < g;
      }
      if (!larger || !smaller) return false;
    }
    last[static_cast<std::size_t>(g)] = q;
  }
  return true;
}

long length_bound(Rank n) {
  require_rank(n);
  long k = n / 2;
  return n % 2 == 0 ? (2L << k) - 2 : 3 * (1L << k) - 2;
}

std::vector<long> letter_multiplicity_bounds(Rank n) {
  require_rank(n);
  std::vector<long> caps(static_cast<std::size_t>(n) + 1, 0);
  for (Rank i = 1; i <= n; ++i)
    caps[static_cast<std::size_t>(i)] = 1L << std::min(i - 1, n - i);
  return caps;
}

Word delete_letter(const Word& w, Letter i) {
  require_letter(i, w.rank());
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (Letter g : w.letters())
    if (g != i) letters.push_back(g);
  return Word(w.rank(), std::move(letters));
}

namespace {
// letters lo..hi of the maximal word, appended to out
void sharpness_letters(Letter lo, Letter hi, std::vector<Letter>& out) {
  if (lo > hi) return;
  if (lo == hi) {
    out.push_back(lo);
    return;
  }
  std::size_t from = out.size();
  sharpness_letters(lo + 1, hi - 1, out);
  std::size_t upto = out.size();
  out.push_back(lo);
  out.push_back(hi);
  for (std::size_t r = from; r < upto; ++r) out.push_back(out[r]);
}
}  // namespace

Word sharpness_word(Rank n) {
  require_rank(n);
  std::vector<Letter> letters;
  sharpness_letters(1, n, letters);
  return Word(n, std::move(letters));
}

Word parse_word(const std::string& text, Rank n) {
  require_rank(n);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) return Word(n);
  std::vector<Letter> letters;
  auto parse_number = [&](const std::string& tok) {
    if (tok.empty())
      throw std::invalid_argument("empty letter in word \"" + text + "\"");
    for (char c : tok)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad letter \"" + tok + "\" in word \"" +
                                    text + "\"");
    if (tok.size() > 2)
      throw std::invalid_argument("letter \"" + tok + "\" out of range");
    letters.push_back(std::stoi(tok));
  };
  if (s.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = s.find(',', pos);
      parse_number(s.substr(pos, comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else if (n <= 9) {
    for (char c : s) parse_number(std::string(1, c));
  } else {
    parse_number(s);
  }
  return Word(n, std::move(letters));
}

std::string to_text(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(w.at(i));
  }
  return out;
}

}  // namespace kiselman
