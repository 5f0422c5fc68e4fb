#include "kiselman/semigroup.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace kiselman {

Element::Element(const Word& representative) { word_ = normalize(representative); }

Element Element::from_canonical(Word w) {
  if (!is_canonical(w))
    throw std::invalid_argument("word " + to_text(w) + " is not canonical");
  Element x;
  x.word_ = std::move(w);
  return x;
}

Element multiply(const Element& x, const Element& y) {
  return Element(concat(x.word(), y.word()));
}

std::optional<std::uint32_t> SemigroupTable::index_of(const Word& canonical) const {
  auto it = index_.find(canonical);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t SemigroupTable::right_multiply(std::uint32_t i, Letter g) const {
  return rmul_[i * static_cast<std::uint32_t>(n_) +
               static_cast<std::uint32_t>(g - 1)];
}

std::uint32_t SemigroupTable::product(std::uint32_t i, std::uint32_t j) const {
  if (!product_.empty()) return product_[i * size() + j];
  std::uint32_t cur = i;
  for (Letter g : elements_[j].letters()) cur = right_multiply(cur, g);
  return cur;
}

namespace {
// eager full tables below this size, explicit materialization below the
// second cap (8192^2 entries is 256 MiB of indices)
constexpr std::uint32_t kEagerTableSize = 5000;
constexpr std::uint32_t kMaterializeTableSize = 8192;
}  // namespace

void SemigroupTable::build_product_table() {
  if (!product_.empty()) return;
  if (size() > kMaterializeTableSize)
    throw ResourceLimitError("product table for " + std::to_string(size()) +
                             " elements exceeds the " +
                             std::to_string(kMaterializeTableSize) +
                             " element cap");
  product_.resize(static_cast<std::size_t>(size()) * size());
  for (std::uint32_t i = 0; i < size(); ++i)
    for (std::uint32_t j = 0; j < size(); ++j) {
      std::uint32_t cur = i;
      for (Letter g : elements_[j].letters()) cur = right_multiply(cur, g);
      product_[static_cast<std::size_t>(i) * size() + j] = cur;
    }
}

std::vector<std::uint32_t> SemigroupTable::idempotent_indices() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < size(); ++i)
    if (product(i, i) == i) out.push_back(i);
  return out;
}

SemigroupTable enumerate(Rank n, long element_cap) {
  require_rank(n);
  SemigroupTable t;
  t.n_ = n;
  std::vector<Word> found{Word(n)};
  std::unordered_set<Word, WordHash> seen{Word(n)};
  for (std::size_t head = 0; head < found.size(); ++head) {
    Word cur = found[head];  // copy: found may reallocate
    for (Letter g = 1; g <= n; ++g) {
      Word next = normalize(cur.appended(g));
      if (seen.insert(next).second) {
        found.push_back(std::move(next));
        if (static_cast<long>(found.size()) > element_cap)
          throw ResourceLimitError(
              "enumeration of K_" + std::to_string(n) + " exceeded cap " +
              std::to_string(element_cap));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Word& a, const Word& b) {
    return WordLess{}(a, b);
  });
  t.elements_ = std::move(found);
  t.index_.reserve(t.elements_.size());
  for (std::uint32_t i = 0; i < t.size(); ++i) t.index_[t.elements_[i]] = i;
  t.rmul_.resize(static_cast<std::size_t>(t.size()) * static_cast<std::size_t>(n));
  for (std::uint32_t i = 0; i < t.size(); ++i)
    for (Letter g = 1; g <= n; ++g)
      t.rmul_[i * static_cast<std::uint32_t>(n) +
              static_cast<std::uint32_t>(g - 1)] =
          t.index_.at(normalize(t.elements_[i].appended(g)));
  if (t.size() <= kEagerTableSize) t.build_product_table();
  return t;
}

Element idempotent(Rank n, Content X) {
  require_rank(n);
  if (!X.fits(n))
    throw std::invalid_argument("content does not fit rank " +
                                std::to_string(n));
  std::vector<Letter> letters = X.to_letters();
  std::reverse(letters.begin(), letters.end());
  return Element::from_canonical(Word(n, std::move(letters)));
}

std::vector<Element> idempotents(Rank n) {
  require_rank(n);
  std::vector<Element> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Content X;
    for (Letter i = 1; i <= n; ++i)
      if ((m >> (i - 1)) & 1u) X = X.with(i);
    out.push_back(idempotent(n, X));
  }
  return out;
}

std::pair<long, Element> power_to_idempotent(const Element& x) {
  Element pow = x;
  long k = 1;
  while (!(multiply(pow, pow) == pow)) {
    pow = multiply(pow, x);
    ++k;
  }
  return {k, pow};
}

IdempotentProduct idempotent_product(Rank n, Content X, Content Y) {
  Element value = multiply(idempotent(n, X), idempotent(n, Y));
  return {multiply(value, value) == value, value};
}

bool natural_leq(const Element& f1, const Element& f2) {
  if (!(multiply(f1, f1) == f1) || !(multiply(f2, f2) == f2))
    throw std::invalid_argument("natural_leq needs idempotent arguments");
  return multiply(f1, f2) == f1 && multiply(f2, f1) == f1;
}

NilpotentBlock nilpotent_subsemigroup(const SemigroupTable& t, Content X) {
  NilpotentBlock b;
  b.content = X;
  Word zero_word = idempotent(t.rank(), X).word();
  b.zero = *t.index_of(zero_word);
  for (std::uint32_t i = 0; i < t.size(); ++i)
    if (content(t.element(i)) == X) b.members.push_back(i);
  std::set<std::uint32_t> cur(b.members.begin(), b.members.end());
  const std::set<std::uint32_t> target{b.zero};
  b.nilpotency_class = 1;
  while (cur != target) {
    std::set<std::uint32_t> next;
    for (std::uint32_t x : cur)
      for (std::uint32_t y : b.members) next.insert(t.product(x, y));
    cur = std::move(next);
    ++b.nilpotency_class;
  }
  return b;
}

std::vector<NilpotentBlock> nilpotent_partition(const SemigroupTable& t) {
  std::vector<NilpotentBlock> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << t.rank()); ++m) {
    Content X;
    for (Letter i = 1; i <= t.rank(); ++i)
      if ((m >> (i - 1)) & 1u) X = X.with(i);
    out.push_back(nilpotent_subsemigroup(t, X));
  }
  return out;
}

namespace {
// per-element principal ideal as a bit set: {x*s} when right, {s*x} when not
std::vector<std::uint64_t> ideal_bits(const SemigroupTable& t, bool right) {
  std::size_t n = t.size();
  std::size_t stride = (n + 63) / 64;
  std::vector<std::uint64_t> bits(n * stride, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      std::uint32_t k = right ? t.product(i, j) : t.product(j, i);
      bits[i * stride + k / 64] |= std::uint64_t{1} << (k % 64);
    }
  return bits;
}

// class ids in first-appearance order from per-element ideal keys
std::vector<std::uint32_t> classes_from_bits(
    const std::vector<std::uint64_t>& bits, std::size_t n) {
  std::size_t stride = n == 0 ? 0 : bits.size() / n;
  std::map<std::vector<std::uint64_t>, std::uint32_t> ids;
  std::vector<std::uint32_t> class_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> key(bits.begin() + static_cast<long>(i * stride),
                                   bits.begin() + static_cast<long>((i + 1) * stride));
    auto [it, fresh] = ids.try_emplace(std::move(key),
                                       static_cast<std::uint32_t>(ids.size()));
    (void)fresh;
    class_of[i] = it->second;
  }
  return class_of;
}

std::vector<std::uint32_t> combine_classes(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> ids;
  std::vector<std::uint32_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [it, fresh] = ids.try_emplace({a[i], b[i]},
                                       static_cast<std::uint32_t>(ids.size()));
    (void)fresh;
    out[i] = it->second;
  }
  return out;
}

// join of the two partitions (connected components), first-appearance ids
std::vector<std::uint32_t> join_classes(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) {
  std::size_t n = a.size();
  std::vector<std::uint32_t> parent(n);
  for (std::uint32_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  std::map<std::uint32_t, std::uint32_t> first_a, first_b;
  for (std::uint32_t i = 0; i < n; ++i) {
    auto [ia, fa] = first_a.try_emplace(a[i], i);
    if (!fa) unite(ia->second, i);
    auto [ib, fb] = first_b.try_emplace(b[i], i);
    if (!fb) unite(ib->second, i);
  }
  std::map<std::uint32_t, std::uint32_t> ids;
  std::vector<std::uint32_t> out(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    auto [it, fresh] = ids.try_emplace(find(i),
                                       static_cast<std::uint32_t>(ids.size()));
    (void)fresh;
    out[i] = it->second;
  }
  return out;
}
}  // namespace

bool GreenClasses::all_singletons() const {
  return classes.size() == class_of.size();
}

GreenClasses green_classes(const SemigroupTable& t, GreenRelation r) {
  std::size_t n = t.size();
  GreenClasses g;
  g.relation = r;
  std::vector<std::uint32_t> class_of;
  switch (r) {
    case GreenRelation::L:
      class_of = classes_from_bits(ideal_bits(t, false), n);
      break;
    case GreenRelation::R:
      class_of = classes_from_bits(ideal_bits(t, true), n);
      break;
    case GreenRelation::H:
      class_of = combine_classes(classes_from_bits(ideal_bits(t, false), n),
                                 classes_from_bits(ideal_bits(t, true), n));
      break;
    case GreenRelation::D:
    case GreenRelation::J:
      // D is the join of L and R, and D = J in a finite semigroup
      class_of = join_classes(classes_from_bits(ideal_bits(t, false), n),
                              classes_from_bits(ideal_bits(t, true), n));
      break;
  }
  g.class_of = std::move(class_of);
  std::uint32_t count = 0;
  for (std::uint32_t c : g.class_of) count = std::max(count, c + 1);
  g.classes.resize(count);
  for (std::uint32_t i = 0; i < n; ++i)
    g.classes[g.class_of[i]].push_back(i);
  return g;
}

bool maximal_subgroups_trivial(const SemigroupTable& t) {
  GreenClasses h = green_classes(t, GreenRelation::H);
  for (std::uint32_t f : t.idempotent_indices())
    if (h.classes[h.class_of[f]].size() != 1) return false;
  return true;
}

std::vector<std::vector<Letter>> automorphisms(const SemigroupTable& t) {
  Rank n = t.rank();
  if (n > 8)
    throw std::invalid_argument("automorphism search supported for rank <= 8");
  std::vector<Letter> sigma(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::vector<Letter>> out;
  do {
    std::vector<std::uint32_t> img(t.size());
    for (std::uint32_t i = 0; i < t.size(); ++i) {
      std::vector<Letter> mapped;
      mapped.reserve(t.element(i).size());
      for (Letter g : t.element(i).letters())
        mapped.push_back(sigma[static_cast<std::size_t>(g - 1)]);
      img[i] = *t.index_of(normalize(Word(n, std::move(mapped))));
    }
    std::vector<bool> hit(t.size(), false);
    bool ok = true;
    for (std::uint32_t i = 0; i < t.size() && ok; ++i) {
      if (hit[img[i]]) ok = false;
      hit[img[i]] = true;
      for (Letter g = 1; g <= n && ok; ++g)
        ok = img[t.right_multiply(i, g)] ==
             t.right_multiply(img[i], sigma[static_cast<std::size_t>(g - 1)]);
    }
    if (ok) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

Element antiautomorphism_tau(const Element& x) {
  Rank n = x.rank();
  std::vector<Letter> letters;
  letters.reserve(x.word().size());
  for (auto it = x.word().letters().rbegin(); it != x.word().letters().rend();
       ++it)
    letters.push_back(n + 1 - *it);
  return Element(Word(n, std::move(letters)));
}

namespace {
Content content_from_mask(Rank n, std::uint32_t m) {
  Content c;
  for (Letter i = 1; i <= n; ++i)
    if ((m >> (i - 1)) & 1u) c = c.with(i);
  return c;
}

// family as a bit mask over content masks; throws unless union-closed
std::uint64_t family_mask(Rank n, const std::vector<Content>& family) {
  if (family.empty())
    throw std::invalid_argument("family of contents must be nonempty");
  std::uint64_t fam = 0;
  for (Content c : family) {
    if (!c.fits(n))
      throw std::invalid_argument("family content does not fit rank " +
                                  std::to_string(n));
    fam |= std::uint64_t{1} << c.bits();
  }
  std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t b = 0; b < count; ++b)
      if (((fam >> a) & 1u) && ((fam >> b) & 1u) && !((fam >> (a | b)) & 1u))
        throw std::invalid_argument("family of contents is not union-closed");
  return fam;
}
}  // namespace

std::vector<std::vector<Content>> union_closed_families(Rank n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument(
        "union-closed family enumeration supported for rank <= 4");
  std::uint32_t count = std::uint32_t{1} << n;  // number of contents
  std::vector<std::vector<Content>> out;
  for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << count); ++fam) {
    bool closed = true;
    for (std::uint32_t a = 0; a < count && closed; ++a)
      if ((fam >> a) & 1u)
        for (std::uint32_t b = 0; b < count && closed; ++b)
          if ((fam >> b) & 1u) closed = (fam >> (a | b)) & 1u;
    if (!closed) continue;
    std::vector<Content> f;
    for (std::uint32_t a = 0; a < count; ++a)
      if ((fam >> a) & 1u) f.push_back(content_from_mask(n, a));
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::uint32_t> isolated_preimage(
    const SemigroupTable& t, const std::vector<Content>& family) {
  std::uint64_t fam = family_mask(t.rank(), family);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < t.size(); ++i)
    if ((fam >> content(t.element(i)).bits()) & 1u) out.push_back(i);
  return out;
}

bool completely_isolated_check(Rank n, const std::vector<Content>& family) {
  if (n > 12)
    throw std::invalid_argument(
        "completely isolated check supported for rank <= 12");
  std::uint64_t fam = family_mask(n, family);
  std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t b = 0; b < count; ++b)
      if (((fam >> (a | b)) & 1u) && !((fam >> a) & 1u) && !((fam >> b) & 1u))
        return false;
  return true;
}

namespace {
struct SplitMix64 {
  std::uint64_t s;
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// canonical words with letters in {2..n}, as rank n words
std::vector<Word> shifted_canonical_words(Rank n) {
  if (n == 1) return {Word(1)};
  std::vector<Word> out;
  SemigroupTable t = enumerate(n - 1);
  out.reserve(t.size());
  for (const Word& w : t.elements()) out.push_back(relettered(w, 1, n));
  return out;
}
}  // namespace

DeletionCheckReport deletion_property_check(Rank n, DeletionProperty which,
                                            long budget, std::uint64_t seed,
                                            bool force_sampling) {
  require_rank(n);
  if (budget < 1) throw std::invalid_argument("budget must be positive");
  std::vector<Word> words = shifted_canonical_words(n);
  long m = static_cast<long>(words.size());
  Word a1(n, {1});
  Word f = idempotent(n, Content::full(n).minus(Content::of({1}))).word();

  DeletionCheckReport rep;
  rep.ok = true;

  auto check15 = [&](const Word& v, const Word& w) {
    ++rep.checked;
    if (normalize(concat(concat(v, a1), f)) ==
        normalize(concat(concat(w, a1), f))) {
      rep.ok = false;
      rep.counterexample = "v=" + to_text(v) + " w=" + to_text(w);
    }
    return rep.ok;
  };
  // returns false on a counterexample; skips (without counting) triples where
  // w a_1 u or w a_1 v is not canonical
  auto check16 = [&](const Word& w, const Word& u, const Word& v) {
    if (!is_canonical(concat(concat(w, a1), u)) ||
        !is_canonical(concat(concat(w, a1), v)))
      return true;
    ++rep.checked;
    bool sep = !(normalize(concat(w, u)) == normalize(concat(w, v))) &&
               !(normalize(concat(concat(w, u), a1)) ==
                 normalize(concat(concat(w, v), a1))) &&
               !(normalize(concat(concat(concat(w, u), a1), f)) ==
                 normalize(concat(concat(concat(w, v), a1), f)));
    if (!sep) {
      rep.ok = false;
      rep.counterexample =
          "w=" + to_text(w) + " u=" + to_text(u) + " v=" + to_text(v);
    }
    return rep.ok;
  };

  long space = which == DeletionProperty::prop15 ? m * (m - 1) / 2
                                                 : m * (m * (m - 1) / 2);
  if (!force_sampling && space <= budget) {
    rep.exhaustive = true;
    if (which == DeletionProperty::prop15) {
      for (long i = 0; i < m && rep.ok; ++i)
        for (long j = i + 1; j < m && rep.ok; ++j)
          check15(words[static_cast<std::size_t>(i)],
                  words[static_cast<std::size_t>(j)]);
    } else {
      for (long k = 0; k < m && rep.ok; ++k)
        for (long i = 0; i < m && rep.ok; ++i)
          for (long j = i + 1; j < m && rep.ok; ++j)
            check16(words[static_cast<std::size_t>(k)],
                    words[static_cast<std::size_t>(i)],
                    words[static_cast<std::size_t>(j)]);
    }
    return rep;
  }

  SplitMix64 rng{seed};
  long attempts_left = 200 * budget;
  while (rep.checked < budget && rep.ok && attempts_left-- > 0) {
    if (which == DeletionProperty::prop15) {
      std::size_t i = rng.below(static_cast<std::uint64_t>(m));
      std::size_t j = rng.below(static_cast<std::uint64_t>(m));
      if (i == j) continue;
      check15(words[i], words[j]);
    } else {
      std::size_t k = rng.below(static_cast<std::uint64_t>(m));
      std::size_t i = rng.below(static_cast<std::uint64_t>(m));
      std::size_t j = rng.below(static_cast<std::uint64_t>(m));
      if (i == j) continue;
      check16(words[k], words[i], words[j]);
    }
  }
  return rep;
}

namespace {
// every reduction of alpha ++ beta, under every strategy, must erase a
// position inside the alpha part with a drop_left step; returns a
// description of the offending step, empty when fine
std::string locality_violation(const Word& alpha, const Word& beta) {
  Word start = concat(alpha, beta);
  std::size_t total = start.size();
  std::set<std::vector<Letter>> seen;
  std::vector<Word> stack{start};
  while (!stack.empty()) {
    Word cur = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(cur.letters()).second) continue;
    std::size_t boundary = alpha.size() - (total - cur.size());
    for (const ReductionStep& s : applicable_steps(cur)) {
      std::size_t erased =
          s.kind == StepKind::drop_right ? s.end : s.begin;
      if (s.kind != StepKind::drop_left || erased >= boundary)
        return "word=" + to_text(cur) + " step erases position " +
               std::to_string(erased) + " outside the first " +
               std::to_string(boundary) + " positions";
      stack.push_back(apply_step(cur, s));
    }
  }
  return "";
}

// erased positions of the rightmost-strategy trace must be weakly
// decreasing and the beta part must survive verbatim
std::string rightmost_violation(const Word& alpha, const Word& beta) {
  Word start = concat(alpha, beta);
  ReductionTrace tr = normalize_traced(start, StepChoice::rightmost);
  std::size_t prev = start.size();
  for (const ReductionStep& s : tr.steps) {
    std::size_t erased = s.kind == StepKind::drop_right ? s.end : s.begin;
    if (erased > prev)
      return "rightmost trace moves right, position " + std::to_string(erased);
    prev = erased;
  }
  if (tr.result.size() < beta.size())
    return "result shorter than beta";
  std::size_t head = tr.result.size() - beta.size();
  for (std::size_t k = 0; k < beta.size(); ++k)
    if (tr.result.at(head + k) != beta.at(k)) return "beta part was changed";
  // surviving head letters form a subsequence of alpha
  std::size_t pos = 0;
  for (std::size_t k = 0; k < head; ++k) {
    while (pos < alpha.size() && alpha.at(pos) != tr.result.at(k)) ++pos;
    if (pos == alpha.size()) return "head is not a subsequence of alpha";
    ++pos;
  }
  return "";
}
}  // namespace

TraceLocalityReport trace_locality_check(Rank n, long budget,
                                         std::uint64_t seed) {
  require_rank(n);
  if (budget < 1) throw std::invalid_argument("budget must be positive");
  std::vector<Word> words = shifted_canonical_words(n);
  long m = static_cast<long>(words.size());
  Word a1(n, {1});

  TraceLocalityReport rep;
  rep.ok = true;
  auto check = [&](const Word& alpha, const Word& beta) {
    if (!is_canonical(concat(concat(alpha, a1), beta))) return true;
    ++rep.checked;
    std::string bad = locality_violation(alpha, beta);
    if (bad.empty()) bad = rightmost_violation(alpha, beta);
    if (!bad.empty()) {
      rep.ok = false;
      rep.counterexample =
          "alpha=" + to_text(alpha) + " beta=" + to_text(beta) + ": " + bad;
    }
    return rep.ok;
  };

  if (m * m <= budget) {
    rep.exhaustive = true;
    for (long i = 0; i < m && rep.ok; ++i)
      for (long j = 0; j < m && rep.ok; ++j)
        check(words[static_cast<std::size_t>(i)],
              words[static_cast<std::size_t>(j)]);
    return rep;
  }

  SplitMix64 rng{seed};
  long attempts_left = 200 * budget;
  while (rep.checked < budget && rep.ok && attempts_left-- > 0)
    check(words[rng.below(static_cast<std::uint64_t>(m))],
          words[rng.below(static_cast<std::uint64_t>(m))]);
  return rep;
}

std::string cayley_csv(SemigroupTable& t) {
  t.build_product_table();
  std::string out;
  for (std::uint32_t j = 0; j < t.size(); ++j)
    out += "," + std::to_string(j);
  out += "\n";
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    out += std::to_string(i);
    for (std::uint32_t j = 0; j < t.size(); ++j)
      out += "," + std::to_string(t.product(i, j));
    out += "\n";
  }
  return out;
}

std::string elements_json(const SemigroupTable& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    nlohmann::ordered_json item;
    item["index"] = i;
    item["word"] = to_text(t.element(i));
    item["content"] = content(t.element(i)).to_letters();
    item["idempotent"] = t.product(i, i) == i;
    arr.push_back(std::move(item));
  }
  return arr.dump(2);
}

namespace {
std::string node_name(const Word& w) {
  return w.empty() ? "e" : to_text(w);
}
}  // namespace

std::string cayley_dot(const SemigroupTable& t) {
  std::string out = "digraph kiselman {\n  rankdir=LR;\n";
  for (std::uint32_t i = 0; i < t.size(); ++i)
    for (Letter g = 1; g <= t.rank(); ++g)
      out += "  \"" + node_name(t.element(i)) + "\" -> \"" +
             node_name(t.element(t.right_multiply(i, g))) + "\" [label=\"" +
             std::to_string(g) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace kiselman
