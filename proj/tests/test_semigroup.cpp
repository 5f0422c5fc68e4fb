#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "kiselman/semigroup.hpp"
#include "oracles.hpp"

using namespace kiselman;

namespace {
Word w(Rank n, std::vector<Letter> l) { return Word(n, std::move(l)); }

Element el(Rank n, std::vector<Letter> l) {
  return Element(Word(n, std::move(l)));
}

Content mask_content(Rank n, unsigned m) {
  Content c;
  for (Letter i = 1; i <= n; ++i)
    if ((m >> (i - 1)) & 1u) c = c.with(i);
  return c;
}
}  // namespace

TEST_CASE("element construction") {
  CHECK(el(2, {1, 2, 1, 2}).word() == w(2, {2, 1}));
  CHECK(el(3, {}).word() == Word(3));
  CHECK(Element::from_canonical(w(3, {2, 1, 3, 2})).word() ==
        w(3, {2, 1, 3, 2}));
  CHECK_THROWS_AS(Element::from_canonical(w(2, {1, 1})),
                  std::invalid_argument);
  CHECK(el(2, {1, 2, 1}) == el(2, {2, 1, 2}));
}

TEST_CASE("multiply") {
  CHECK(multiply(el(2, {1}), el(2, {1})) == el(2, {1}));
  CHECK(multiply(el(2, {1, 2}), el(2, {1, 2})) == el(2, {2, 1}));
  CHECK(multiply(el(3, {}), el(3, {2})) == el(3, {2}));
  CHECK_THROWS_AS(multiply(el(2, {1}), el(3, {1})), std::invalid_argument);
  // associativity on random triples
  oracles::SplitMix64 rng(101);
  for (int it = 0; it < 300; ++it) {
    int n = 1 + static_cast<int>(rng.below(4));
    auto mk = [&] {
      auto v = oracles::random_word(rng, n, 8);
      return Element(Word(n, std::vector<Letter>(v.begin(), v.end())));
    };
    Element x = mk(), y = mk(), z = mk();
    CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
  }
}

TEST_CASE("enumerate sizes match the independent count") {
  CHECK(enumerate(1).size() == 2);
  CHECK(enumerate(2).size() == 5);
  CHECK(enumerate(3).size() == 18);
  CHECK(enumerate(4).size() == 115);
  CHECK(enumerate(5).size() == 1710);
  for (int n = 1; n <= 5; ++n)
    CHECK(enumerate(n).size() ==
          static_cast<std::uint32_t>(oracles::frozen_size(n)));
}

TEST_CASE("enumerate element sets equal the canonicity-predicate DFS") {
  for (int n = 1; n <= 4; ++n) {
    SemigroupTable t = enumerate(n);
    auto expect = oracles::canonical_words_dfs(n);
    REQUIRE(t.size() == expect.size());
    for (std::uint32_t i = 0; i < t.size(); ++i) {
      const Word& word = t.element(i);
      oracles::Vec v(word.letters().begin(), word.letters().end());
      CHECK(v == expect[i]);  // same sort order: length then lex
    }
  }
}

TEST_CASE("enumerate is sorted with the identity first") {
  SemigroupTable t = enumerate(3);
  CHECK(t.element(0) == Word(3));
  WordLess less;
  for (std::uint32_t i = 1; i < t.size(); ++i)
    CHECK(less(t.element(i - 1), t.element(i)));
  CHECK(t.element(6) == w(3, {2, 1}));
  CHECK(t.index_of(w(3, {2, 1})) == 6u);
  CHECK_FALSE(t.index_of(w(3, {1, 1})).has_value());
  CHECK_FALSE(t.index_of(w(2, {1})).has_value());
}

TEST_CASE("enumerate respects the element cap") {
  CHECK_THROWS_AS(enumerate(4, 100), ResourceLimitError);
  CHECK(enumerate(4, 115).size() == 115);
}

TEST_CASE("right_multiply and product agree with multiply") {
  SemigroupTable t = enumerate(3);
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    Element x = Element::from_canonical(t.element(i));
    for (Letter g = 1; g <= 3; ++g) {
      Element xg = multiply(x, el(3, {g}));
      CHECK(t.element(t.right_multiply(i, g)) == xg.word());
    }
    for (std::uint32_t j = 0; j < t.size(); ++j) {
      Element y = Element::from_canonical(t.element(j));
      CHECK(t.element(t.product(i, j)) == multiply(x, y).word());
    }
  }
}

TEST_CASE("product table presence") {
  SemigroupTable small = enumerate(4);
  CHECK(small.has_product_table());
  CHECK(small.product_table().size() == 115u * 115u);
  SemigroupTable big = enumerate(6);
  CHECK(big.size() == 83973);
  CHECK_FALSE(big.has_product_table());
  // products still work by walking the right-multiplication table
  std::uint32_t i = *big.index_of(w(6, {3, 4, 2, 5, 3, 4, 1, 6, 3, 4, 2, 5, 3, 4}));
  CHECK(big.product(0, i) == i);
  CHECK_THROWS_AS(big.build_product_table(), ResourceLimitError);
}

TEST_CASE("idempotent words") {
  CHECK(idempotent(3, Content::of({})).word() == Word(3));
  CHECK(idempotent(3, Content::of({2})).word() == w(3, {2}));
  CHECK(idempotent(3, Content::of({1, 3})).word() == w(3, {3, 1}));
  CHECK(idempotent(4, Content::full(4)).word() == w(4, {4, 3, 2, 1}));
  CHECK_THROWS_AS(idempotent(2, Content::of({3})), std::invalid_argument);
  for (int n = 1; n <= 4; ++n)
    for (unsigned m = 0; m < (1u << n); ++m) {
      Element f = idempotent(n, mask_content(n, m));
      CHECK(multiply(f, f) == f);
      CHECK(content(f.word()) == mask_content(n, m));
    }
}

TEST_CASE("idempotents enumeration matches the table") {
  for (int n = 1; n <= 4; ++n) {
    SemigroupTable t = enumerate(n);
    std::vector<Element> es = idempotents(n);
    CHECK(es.size() == (1u << n));
    for (unsigned m = 0; m < (1u << n); ++m)
      CHECK(es[m] == idempotent(n, mask_content(n, m)));
    std::set<std::uint32_t> from_list;
    for (const Element& f : es) from_list.insert(*t.index_of(f.word()));
    auto idx = t.idempotent_indices();
    std::set<std::uint32_t> from_table(idx.begin(), idx.end());
    CHECK(from_list == from_table);
    CHECK(std::is_sorted(idx.begin(), idx.end()));
  }
}

TEST_CASE("power_to_idempotent") {
  auto [k1, f1] = power_to_idempotent(el(2, {1, 2}));
  CHECK(k1 == 2);
  CHECK(f1 == el(2, {2, 1}));
  auto [k2, f2] = power_to_idempotent(el(3, {}));
  CHECK(k2 == 1);
  CHECK(f2 == el(3, {}));
  // every element stabilizes to e_{content} within |content| steps
  SemigroupTable t = enumerate(4);
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    Element x = Element::from_canonical(t.element(i));
    auto [k, f] = power_to_idempotent(x);
    CHECK(multiply(f, f) == f);
    CHECK(f == idempotent(4, content(x.word())));
    long csize = content(x.word()).size();
    CHECK(k >= 1);
    CHECK(k <= std::max(1L, csize));
  }
}

TEST_CASE("idempotent_product criterion") {
  // e_{2} e_{1} stays idempotent, e_{1} e_{2} does not
  IdempotentProduct p = idempotent_product(2, Content::of({2}), Content::of({1}));
  CHECK(p.idempotent);
  CHECK(p.value == el(2, {2, 1}));
  p = idempotent_product(2, Content::of({1}), Content::of({2}));
  CHECK_FALSE(p.idempotent);
  CHECK(p.value == el(2, {1, 2}));
  // the product is idempotent exactly when every i in X\Y beats every j in Y\X,
  // and in that case it equals e_{X u Y}
  for (int n = 1; n <= 4; ++n)
    for (unsigned a = 0; a < (1u << n); ++a)
      for (unsigned b = 0; b < (1u << n); ++b) {
        Content X = mask_content(n, a), Y = mask_content(n, b);
        IdempotentProduct q = idempotent_product(n, X, Y);
        bool expect = true;
        for (Letter i : X.minus(Y).to_letters())
          for (Letter j : Y.minus(X).to_letters()) expect = expect && i > j;
        CHECK(q.idempotent == expect);
        CHECK(q.idempotent ==
              (multiply(q.value, q.value) == q.value));
        if (expect) CHECK(q.value == idempotent(n, X.united(Y)));
      }
}

TEST_CASE("natural order on idempotents is reverse content containment") {
  CHECK_THROWS_AS(natural_leq(el(2, {1, 2}), el(2, {1})), std::invalid_argument);
  for (unsigned a = 0; a < 8; ++a)
    for (unsigned b = 0; b < 8; ++b) {
      Content X = mask_content(3, a), Y = mask_content(3, b);
      bool leq = natural_leq(idempotent(3, X), idempotent(3, Y));
      CHECK(leq == Y.subset_of(X));
    }
  // the full-content idempotent is the zero, the identity is the top
  SemigroupTable t = enumerate(3);
  Element zero = idempotent(3, Content::full(3));
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    Element x = Element::from_canonical(t.element(i));
    CHECK(multiply(zero, x) == zero);
    CHECK(multiply(x, zero) == zero);
  }
}

TEST_CASE("nilpotent blocks partition the semigroup") {
  for (int n = 1; n <= 4; ++n) {
    SemigroupTable t = enumerate(n);
    auto blocks = nilpotent_partition(t);
    CHECK(blocks.size() == (1u << n));
    std::vector<int> covered(t.size(), 0);
    for (unsigned m = 0; m < (1u << n); ++m) {
      const NilpotentBlock& b = blocks[m];
      CHECK(b.content == mask_content(n, m));
      CHECK(b.zero == *t.index_of(idempotent(n, b.content).word()));
      CHECK(std::is_sorted(b.members.begin(), b.members.end()));
      for (std::uint32_t i : b.members) {
        CHECK(content(t.element(i)) == b.content);
        ++covered[i];
      }
      CHECK(b.nilpotency_class ==
            std::max(1, mask_content(n, m).size()));
      // independent verification by direct set products
      std::set<std::uint32_t> cur(b.members.begin(), b.members.end());
      int k = 1;
      while (cur != std::set<std::uint32_t>{b.zero}) {
        std::set<std::uint32_t> next;
        for (std::uint32_t x : cur)
          for (std::uint32_t y : b.members) next.insert(t.product(x, y));
        cur = std::move(next);
        ++k;
        REQUIRE(k <= n + 1);
      }
      CHECK(k == b.nilpotency_class);
    }
    for (std::uint32_t i = 0; i < t.size(); ++i) CHECK(covered[i] == 1);
  }
}

TEST_CASE("nilpotent_subsemigroup for one content") {
  SemigroupTable t = enumerate(2);
  NilpotentBlock b = nilpotent_subsemigroup(t, Content::of({1, 2}));
  CHECK(b.members == std::vector<std::uint32_t>{3, 4});
  CHECK(b.zero == *t.index_of(w(2, {2, 1})));
  CHECK(b.nilpotency_class == 2);
}

TEST_CASE("green classes are singletons") {
  for (int n = 1; n <= 4; ++n) {
    SemigroupTable t = enumerate(n);
    for (GreenRelation r : {GreenRelation::L, GreenRelation::R,
                            GreenRelation::H, GreenRelation::D,
                            GreenRelation::J}) {
      GreenClasses g = green_classes(t, r);
      CHECK(g.relation == r);
      CHECK(g.all_singletons());
      CHECK(g.classes.size() == t.size());
      CHECK(g.class_of.size() == t.size());
      for (std::uint32_t i = 0; i < t.size(); ++i) {
        CHECK(g.classes[g.class_of[i]].size() == 1);
        CHECK(g.classes[g.class_of[i]][0] == i);
      }
    }
    CHECK(maximal_subgroups_trivial(t));
  }
}

TEST_CASE("green classes distinguish a non-free pair explicitly") {
  // sanity that the ideal computation is not trivially lumping everything:
  // in K_2 the ideals of a_1 and a_2 differ
  SemigroupTable t = enumerate(2);
  GreenClasses g = green_classes(t, GreenRelation::J);
  CHECK(g.class_of[*t.index_of(w(2, {1}))] !=
        g.class_of[*t.index_of(w(2, {2}))]);
}

TEST_CASE("only the identity permutation is an automorphism") {
  for (int n = 1; n <= 4; ++n) {
    SemigroupTable t = enumerate(n);
    auto autos = automorphisms(t);
    REQUIRE(autos.size() == 1);
    std::vector<Letter> id(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i + 1;
    CHECK(autos[0] == id);
  }
}

TEST_CASE("antiautomorphism tau") {
  CHECK(antiautomorphism_tau(el(3, {1})) == el(3, {3}));
  CHECK(antiautomorphism_tau(el(3, {1, 2})) == el(3, {2, 3}));
  CHECK(antiautomorphism_tau(el(3, {})) == el(3, {}));
  // involutive antihomomorphism
  oracles::SplitMix64 rng(55);
  for (int it = 0; it < 300; ++it) {
    int n = 1 + static_cast<int>(rng.below(4));
    auto mk = [&] {
      auto v = oracles::random_word(rng, n, 8);
      return Element(Word(n, std::vector<Letter>(v.begin(), v.end())));
    };
    Element x = mk(), y = mk();
    CHECK(antiautomorphism_tau(antiautomorphism_tau(x)) == x);
    CHECK(antiautomorphism_tau(multiply(x, y)) ==
          multiply(antiautomorphism_tau(y), antiautomorphism_tau(x)));
  }
}

TEST_CASE("union closed families") {
  CHECK(union_closed_families(1).size() == 3);
  CHECK(union_closed_families(2).size() == 13);
  // independent recount by direct closure testing over content bit masks
  for (int n = 1; n <= 3; ++n) {
    std::set<std::set<unsigned>> expect;
    unsigned count = 1u << n;
    for (unsigned fam = 1; fam < (1u << count); ++fam) {
      bool closed = true;
      for (unsigned a = 0; a < count && closed; ++a)
        for (unsigned b = 0; b < count && closed; ++b)
          if (((fam >> a) & 1u) && ((fam >> b) & 1u))
            closed = (fam >> (a | b)) & 1u;
      if (!closed) continue;
      std::set<unsigned> f;
      for (unsigned a = 0; a < count; ++a)
        if ((fam >> a) & 1u) f.insert(a);
      expect.insert(f);
    }
    std::set<std::set<unsigned>> got;
    for (const auto& fam : union_closed_families(n)) {
      std::set<unsigned> f;
      for (Content c : fam) f.insert(c.bits());
      CHECK(std::is_sorted(fam.begin(), fam.end(),
                           [](Content a, Content b) { return a < b; }));
      got.insert(f);
    }
    CHECK(got == expect);
  }
  CHECK_THROWS_AS(union_closed_families(5), std::invalid_argument);
}

TEST_CASE("isolated preimages are subsemigroups") {
  SemigroupTable t = enumerate(3);
  // not union-closed: misses {1,2}
  CHECK_THROWS_AS(
      isolated_preimage(t, {Content::of({1}), Content::of({2})}),
      std::invalid_argument);
  // {e} is the preimage of the empty-content family
  CHECK(isolated_preimage(t, {Content::of({})}) ==
        std::vector<std::uint32_t>{0});
  for (const auto& fam : union_closed_families(3)) {
    auto pre = isolated_preimage(t, fam);
    CHECK(std::is_sorted(pre.begin(), pre.end()));
    std::set<std::uint32_t> inside(pre.begin(), pre.end());
    CHECK(!inside.empty());
    for (std::uint32_t x : pre)
      for (std::uint32_t y : pre) CHECK(inside.count(t.product(x, y)) == 1);
  }
}

TEST_CASE("completely isolated detection") {
  // {e} is completely isolated: a product is the identity only when both
  // factors are (contents unite)
  CHECK(completely_isolated_check(2, {Content::of({})}));
  // the family of all contents containing letter 1 is completely isolated
  CHECK(completely_isolated_check(
      3, {Content::of({1}), Content::of({1, 2}), Content::of({1, 3}),
          Content::of({1, 2, 3})}));
  CHECK_THROWS_AS(
      completely_isolated_check(2, {Content::of({1}), Content::of({2})}),
      std::invalid_argument);

  // cross-check against the semigroup-theoretic definition: the preimage P
  // is completely isolated iff the complement of P is closed under products
  for (int n = 2; n <= 3; ++n) {
    SemigroupTable t = enumerate(n);
    for (const auto& fam : union_closed_families(n)) {
      auto pre = isolated_preimage(t, fam);
      std::set<std::uint32_t> inside(pre.begin(), pre.end());
      bool complement_closed = true;
      for (std::uint32_t x = 0; x < t.size() && complement_closed; ++x)
        for (std::uint32_t y = 0; y < t.size() && complement_closed; ++y)
          if (!inside.count(x) && !inside.count(y))
            complement_closed = !inside.count(t.product(x, y));
      CHECK(completely_isolated_check(n, fam) == complement_closed);
    }
  }
}

TEST_CASE("deletion properties hold exhaustively for small ranks") {
  for (int n = 2; n <= 4; ++n) {
    DeletionCheckReport r15 =
        deletion_property_check(n, DeletionProperty::prop15, 1000000, 1);
    CHECK(r15.ok);
    CHECK(r15.exhaustive);
    CHECK(r15.counterexample.empty());
    DeletionCheckReport r16 =
        deletion_property_check(n, DeletionProperty::prop16, 1000000, 1);
    CHECK(r16.ok);
    CHECK(r16.exhaustive);
    CHECK(r16.checked > 0);
  }
  // pair count for prop15 at rank 3: canonical words over {2,3} number 5,
  // giving 10 unordered pairs
  DeletionCheckReport r = deletion_property_check(3, DeletionProperty::prop15,
                                                  1000000, 1);
  CHECK(r.checked == 10);
}

TEST_CASE("deletion properties hold on seeded samples for larger ranks") {
  // 115 words over {2..5} give 6555 pairs, within a 10000 budget
  DeletionCheckReport r15 =
      deletion_property_check(5, DeletionProperty::prop15, 10000, 7);
  CHECK(r15.ok);
  CHECK(r15.exhaustive);
  CHECK(r15.checked == 6555);
  DeletionCheckReport s15 = deletion_property_check(
      5, DeletionProperty::prop15, 2000, 7, true);
  CHECK(s15.ok);
  CHECK_FALSE(s15.exhaustive);
  CHECK(s15.checked == 2000);
  DeletionCheckReport s16 = deletion_property_check(
      6, DeletionProperty::prop16, 3000, 11);
  CHECK(s16.ok);
  CHECK_FALSE(s16.exhaustive);
  CHECK(s16.checked == 3000);
  // deterministic in the seed
  DeletionCheckReport again = deletion_property_check(
      6, DeletionProperty::prop16, 3000, 11);
  CHECK(again.checked == s16.checked);
  CHECK(again.ok == s16.ok);
}

TEST_CASE("trace locality") {
  for (int n = 2; n <= 4; ++n) {
    TraceLocalityReport r = trace_locality_check(n, 1000000, 3);
    CHECK(r.ok);
    CHECK(r.exhaustive);
    CHECK(r.counterexample.empty());
    CHECK(r.checked > 0);
  }
  TraceLocalityReport s = trace_locality_check(6, 1500, 13);
  CHECK(s.ok);
  CHECK_FALSE(s.exhaustive);
  CHECK(s.checked == 1500);
}

TEST_CASE("cayley csv") {
  SemigroupTable t = enumerate(1);
  CHECK(cayley_csv(t) == ",0,1\n0,0,1\n1,1,1\n");
  SemigroupTable t2 = enumerate(2);
  std::string csv = cayley_csv(t2);
  // 1 header + 5 rows
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
  CHECK(csv.substr(0, 11) == ",0,1,2,3,4\n");
}

TEST_CASE("elements json") {
  SemigroupTable t = enumerate(2);
  std::string js = elements_json(t);
  CHECK(js.find("\"index\"") != std::string::npos);
  CHECK(js.find("\"word\"") != std::string::npos);
  CHECK(js.find("\"2,1\"") != std::string::npos);
  CHECK(js.find("\"idempotent\"") != std::string::npos);
}

TEST_CASE("cayley dot") {
  SemigroupTable t = enumerate(2);
  std::string dot = cayley_dot(t);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"e\"") != std::string::npos);
  CHECK(dot.find("\"2,1\"") != std::string::npos);
  // one edge per element and generator
  std::size_t edges = 0, pos = 0;
  while ((pos = dot.find("->", pos)) != std::string::npos) {
    ++edges;
    pos += 2;
  }
  CHECK(edges == t.size() * 2);
}
