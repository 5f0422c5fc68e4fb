#include "kiselman/checks.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kiselman/algebra.hpp"
#include "kiselman/repr.hpp"
#include "kiselman/rewrite.hpp"
#include "kiselman/semigroup.hpp"

namespace kiselman {

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

Word random_word(SplitMix64& rng, Rank n, std::size_t max_len) {
  std::vector<Letter> letters(rng.below(max_len + 1));
  for (auto& g : letters)
    g = static_cast<Letter>(rng.below(static_cast<std::uint64_t>(n))) + 1;
  return Word(n, std::move(letters));
}

std::vector<Content> all_contents(Rank n) {
  std::vector<Content> out;
  for (std::uint32_t b = 0; b < (1u << n); ++b) {
    Content X;
    for (Letter i = 1; i <= n; ++i)
      if (b & (1u << (i - 1))) X = X.with(i);
    out.push_back(X);
  }
  return out;
}

// Shared state for one run_checks invocation.
struct Runner {
  Rank n;
  std::uint64_t seed;
  long element_cap;
  std::vector<CheckResult> out;

  std::optional<SemigroupTable> table_;
  bool table_failed = false;

  void add(std::string name, bool pass, std::string detail) {
    out.push_back({std::move(name), pass, std::move(detail)});
  }
  void skip(std::string name, std::string why) {
    out.push_back({std::move(name), true, "skipped: " + std::move(why)});
  }
  void skip_rank(std::string name, Rank max_rank) {
    skip(std::move(name), "supported for rank <= " + std::to_string(max_rank));
  }

  // nullptr when the cap was exceeded; checks then report themselves skipped
  const SemigroupTable* table() {
    if (!table_ && !table_failed) {
      try {
        table_.emplace(enumerate(n, element_cap));
      } catch (const ResourceLimitError&) {
        table_failed = true;
      }
    }
    return table_ ? &*table_ : nullptr;
  }

  void run_rewrite();
  void run_structure();
  void run_repr();
  void run_algebra();
};

void Runner::run_rewrite() {
  {
    SplitMix64 rng{seed};
    std::size_t max_len = std::min<std::size_t>(2 * static_cast<std::size_t>(length_bound(n)), 24);
    bool ok = true;
    std::string detail;
    for (int k = 0; k < 400 && ok; ++k) {
      Word w = random_word(rng, n, max_len);
      Word c = normalize(w);
      ok = is_canonical(c) && normalize(c) == c;
      if (ok) {
        Word v = random_word(rng, n, max_len);
        ok = normalize(concat(w, v)) == normalize(concat(c, normalize(v)));
      }
      if (ok) ok = confluence_check(w, 6, seed + static_cast<std::uint64_t>(k)).ok;
      if (!ok) detail = "failed on word " + to_text(w);
    }
    add("rewrite/normal-forms", ok,
        ok ? "400 random words: canonical, stable, confluent" : detail);
  }

  if (n <= 20) {
    Word s = sharpness_word(n);
    bool ok = is_canonical(s) && static_cast<long>(s.size()) == length_bound(n);
    std::vector<long> seen(static_cast<std::size_t>(n) + 1, 0);
    for (Letter l : s.letters()) ++seen[static_cast<std::size_t>(l)];
    std::vector<long> caps = letter_multiplicity_bounds(n);
    for (Letter l = 1; l <= n; ++l)
      ok = ok && seen[static_cast<std::size_t>(l)] == caps[static_cast<std::size_t>(l)];
    add("rewrite/sharpness-word", ok,
        "length " + std::to_string(s.size()) + " of bound " + std::to_string(length_bound(n)));
  } else {
    skip_rank("rewrite/sharpness-word", 20);
  }

  if (n <= 3) {
    bool ok = true;
    std::string detail;
    // all words of length <= 6, generated iteratively
    std::vector<std::vector<Letter>> words{{}};
    for (int len = 0; len < 6; ++len) {
      std::vector<std::vector<Letter>> next;
      for (const auto& w : words)
        if (static_cast<int>(w.size()) == len)
          for (Letter g = 1; g <= n; ++g) {
            auto e = w;
            e.push_back(g);
            next.push_back(e);
          }
      words.insert(words.end(), next.begin(), next.end());
    }
    for (const auto& letters : words) {
      Word w(n, letters);
      // closure of {w} under single steps; exactly one irreducible survivor
      std::set<std::string> seen;
      std::vector<Word> todo{w};
      std::set<std::string> normal;
      auto text = [](const Word& x) { return to_text(x); };
      seen.insert(text(w));
      while (!todo.empty()) {
        Word cur = todo.back();
        todo.pop_back();
        auto steps = applicable_steps(cur);
        if (steps.empty()) {
          normal.insert(text(cur));
          continue;
        }
        for (const auto& s : steps) {
          Word nxt = apply_step(cur, s);
          if (seen.insert(text(nxt)).second) todo.push_back(nxt);
        }
      }
      if (normal.size() != 1 || *normal.begin() != text(normalize(w))) {
        ok = false;
        detail = "divergent reductions for " + text(w);
        break;
      }
    }
    add("rewrite/exhaustive-confluence", ok,
        ok ? "all words of length <= 6 reduce uniquely" : detail);
  } else {
    skip_rank("rewrite/exhaustive-confluence", 3);
  }
}

void Runner::run_structure() {
  const SemigroupTable* t = table();
  if (!t) {
    for (const char* name :
         {"structure/size", "structure/power-to-idempotent", "structure/green-trivial",
          "structure/automorphisms", "structure/nilpotent-blocks", "structure/antiautomorphism"})
      skip(name, "element cap " + std::to_string(element_cap) + " exceeded");
  } else {
    {
      static const long frozen[] = {0, 2, 5, 18, 115, 1710, 83973};
      bool ok = n > 6 || static_cast<long>(t->size()) == frozen[n];
      add("structure/size", ok, "|K_" + std::to_string(n) + "| = " + std::to_string(t->size()));
    }

    {
      SplitMix64 rng{seed ^ 0x5157u};
      bool ok = true;
      std::string detail;
      bool exhaustive = t->size() <= 2000;
      long count = exhaustive ? t->size() : 2000;
      for (long k = 0; k < count && ok; ++k) {
        std::uint32_t i = exhaustive ? static_cast<std::uint32_t>(k)
                                     : static_cast<std::uint32_t>(rng.below(t->size()));
        Element x = Element::from_canonical(t->element(i));
        auto [steps, e] = power_to_idempotent(x);
        Content c = content(x.word());
        ok = steps <= std::max(1, c.size()) && e == idempotent(n, c);
        if (!ok) detail = "failed at " + to_text(x.word());
      }
      add("structure/power-to-idempotent", ok,
          ok ? std::to_string(count) + (exhaustive ? " elements (all)" : " sampled elements")
             : detail);
    }

    if (t->size() <= 2000) {
      bool ok = maximal_subgroups_trivial(*t);
      for (GreenRelation r : {GreenRelation::L, GreenRelation::R, GreenRelation::H,
                              GreenRelation::D, GreenRelation::J})
        ok = ok && green_classes(*t, r).all_singletons();
      add("structure/green-trivial", ok, "all five relations have singleton classes");
    } else {
      skip("structure/green-trivial", "supported for at most 2000 elements");
    }

    if (n <= 5) {
      auto autos = automorphisms(*t);
      std::vector<Letter> id;
      for (Letter i = 1; i <= n; ++i) id.push_back(i);
      add("structure/automorphisms", autos.size() == 1 && autos[0] == id,
          std::to_string(autos.size()) + " automorphism(s)");
    } else {
      skip_rank("structure/automorphisms", 5);
    }

    if (t->size() <= 2000) {
      auto blocks = nilpotent_partition(*t);
      bool ok = blocks.size() == (1u << n);
      std::size_t covered = 0;
      for (const auto& b : blocks) {
        covered += b.members.size();
        ok = ok && b.nilpotency_class == std::max(1, b.content.size());
        ok = ok && t->element(b.zero) == idempotent(n, b.content).word();
      }
      ok = ok && covered == t->size();
      add("structure/nilpotent-blocks", ok,
          std::to_string(blocks.size()) + " blocks partition the semigroup");
    } else {
      skip("structure/nilpotent-blocks", "supported for at most 2000 elements");
    }

    {
      SplitMix64 rng{seed ^ 0x7a0u};
      bool ok = true;
      for (int k = 0; k < 300 && ok; ++k) {
        Element x = Element::from_canonical(t->element(
            static_cast<std::uint32_t>(rng.below(t->size()))));
        Element y = Element::from_canonical(t->element(
            static_cast<std::uint32_t>(rng.below(t->size()))));
        ok = antiautomorphism_tau(multiply(x, y)) ==
                 multiply(antiautomorphism_tau(y), antiautomorphism_tau(x)) &&
             antiautomorphism_tau(antiautomorphism_tau(x)) == x;
      }
      add("structure/antiautomorphism", ok, "300 sampled pairs under tau");
    }
  }

  {
    if (n <= 6) {
      auto contents = all_contents(n);
      std::vector<Element> es = idempotents(n);
      bool ok = es.size() == contents.size();
      for (std::size_t i = 0; i < contents.size() && ok; ++i) {
        ok = es[i] == idempotent(n, contents[i]);
        for (std::size_t j = 0; j < contents.size() && ok; ++j) {
          IdempotentProduct p = idempotent_product(n, contents[i], contents[j]);
          Element prod = multiply(es[i], es[j]);
          ok = p.value == prod && p.idempotent == (multiply(prod, prod) == prod);
          if (p.idempotent)
            ok = ok && prod == idempotent(n, contents[i].united(contents[j]));
          ok = ok && natural_leq(es[i], es[j]) == contents[j].subset_of(contents[i]);
        }
      }
      add("structure/idempotents", ok,
          ok ? std::to_string(es.size()) + " idempotents, product and order laws hold"
             : "census or product law failed");
    } else {
      skip_rank("structure/idempotents", 6);
    }
  }

  if (n >= 2) {
    auto r15 = deletion_property_check(n, DeletionProperty::prop15, 3000, seed);
    auto r16 = deletion_property_check(n, DeletionProperty::prop16, 3000, seed + 1);
    add("structure/deletion-properties", r15.ok && r16.ok,
        "separation checks: " + std::to_string(r15.checked) + " + " +
            std::to_string(r16.checked) +
            (r15.exhaustive && r16.exhaustive ? " (exhaustive)" : " (sampled)"));
  } else {
    skip("structure/deletion-properties", "vacuous at rank 1");
  }

  {
    auto rep = trace_locality_check(n, 2000, seed + 2);
    add("structure/trace-locality", rep.ok,
        std::to_string(rep.checked) + (rep.exhaustive ? " pairs (exhaustive)" : " sampled pairs"));
  }
}

void Runner::run_repr() {
  add("repr/relations-psi", representation_relations_ok(n, RepKind::psi),
      "generator relations for the integer representation");
  if (n <= 8)
    add("repr/relations-kappa", representation_relations_ok(n, RepKind::kappa),
        "generator relations over the polynomial ring");
  else
    skip_rank("repr/relations-kappa", 8);
  if (n <= 5)
    add("repr/relations-kappa-prime", representation_relations_ok(n, RepKind::kappa_prime),
        "generator relations for the integer specialization");
  else
    skip_rank("repr/relations-kappa-prime", 5);

  const SemigroupTable* t = n <= 5 ? table() : nullptr;
  if (n > 5) {
    skip_rank("repr/psi-faithfulness", 5);
  } else if (!t) {
    skip("repr/psi-faithfulness", "element cap exceeded");
  } else {
    FaithfulnessReport r = faithfulness_check(*t, RepKind::psi);
    bool expect = n <= 3;
    std::string detail = r.faithful
                             ? "faithful on " + std::to_string(t->size()) + " elements"
                             : "collision " + to_text(t->element(r.witness_a)) + " ~ " +
                                   to_text(t->element(r.witness_b));
    add("repr/psi-faithfulness", r.faithful == expect, detail);
  }

  if (n > 4) {
    skip_rank("repr/kappa-faithful", 4);
    skip_rank("repr/kappa-prime-range", 4);
  } else if (!table()) {
    skip("repr/kappa-faithful", "element cap exceeded");
    skip("repr/kappa-prime-range", "element cap exceeded");
  } else {
    const SemigroupTable& tab = *table();
    add("repr/kappa-faithful", faithfulness_check(tab, RepKind::kappa).faithful,
        "symbolically distinct images");

    bool ok = faithfulness_check(tab, RepKind::kappa_prime).faithful;
    if (n >= 2) {
      mpz_class l_n = ml_sequences(n).l[static_cast<std::size_t>(n)];
      for (const IntMatrix& m : kappa_prime_images(tab))
        for (int r = 0; r < m.dim() && ok; ++r)
          for (int c = 0; c < m.dim(); ++c)
            if (m.at(r, c) < 0 || m.at(r, c) >= l_n) {
              ok = false;
              break;
            }
    }
    add("repr/kappa-prime-range", ok,
        n >= 2 ? "faithful with entries below the rank bound"
               : "faithful; the entry bound starts at rank 2");
  }

  if (n <= 5) {
    std::vector<mpz_class> ones(static_cast<std::size_t>(poly_var_count(n)), 1);
    bool ok = true;
    for (Letter i = 1; i <= n && ok; ++i)
      ok = kappa_generator(n, i).evaluate(ones) == kiselman_generator(n, i);
    SplitMix64 rng{seed ^ 0x10eau};
    for (int k = 0; k < 20 && ok; ++k) {
      Word w = random_word(rng, n, 8);
      ok = kappa(w).evaluate(ones) == psi(w);
    }
    add("repr/kappa-unit-specialization", ok, "kappa at xi = 1 equals psi");
  } else {
    skip_rank("repr/kappa-unit-specialization", 5);
  }

  {
    SplitMix64 rng{seed ^ 0xdecu};
    bool ok = true;
    for (int k = 0; k < 500 && ok; ++k) {
      IntMatrix a = psi(normalize(random_word(rng, n, 12)));
      Letter g = static_cast<Letter>(rng.below(static_cast<std::uint64_t>(n))) + 1;
      IntMatrix b = kiselman_generator(n, g) * a;
      ok = b == a || height(b) < height(a);
    }
    add("repr/height-decrease", ok, "500 sampled left multiplications");
  }

  {
    std::vector<Letter> run;
    for (Letter i = 1; i <= n; ++i) run.push_back(i);
    add("repr/nilpotency-class", nilpotency_class_of_matrix(psi(Word(n, run))) == n,
        "psi(a_1..a_n) has class " + std::to_string(n));
  }
}

void Runner::run_algebra() {
  if (n <= 4) {
    SystemReport r = idempotent_system_check(n);
    add("algebra/idempotent-system", r.ok,
        r.ok ? std::to_string(1 << n) + " primitive orthogonal idempotents"
             : r.failures.front());
  } else {
    skip_rank("algebra/idempotent-system", 4);
  }

  if (n <= 6) {
    bool ok = true;
    AlgebraElement sum(n);
    std::vector<AlgebraElement> pis;
    for (int i = 1; i <= n; ++i) pis.push_back(kiselman_projection(n, i));
    for (int i = 0; i < n; ++i) {
      sum += pis[static_cast<std::size_t>(i)];
      const AlgebraElement& p = pis[static_cast<std::size_t>(i)];
      ok = ok && p * p == p;
      for (int j = 0; j < n; ++j)
        if (i != j) ok = ok && (p * pis[static_cast<std::size_t>(j)]).is_zero();
      IntMatrix unit(n);
      unit.at(i, i) = 1;
      ok = ok && psi_linear(p) == unit;
    }
    ok = ok && sum == AlgebraElement::unit(n);
    add("algebra/projections", ok, "orthogonal decomposition of the unit, psi-diagonal");
  } else {
    skip_rank("algebra/projections", 6);
  }

  if (n < 2 || n > 5) {
    skip("algebra/corner-dimensions", n < 2 ? "needs rank at least 2" : "supported for rank <= 5");
  } else if (!table()) {
    skip("algebra/corner-dimensions", "element cap exceeded");
  } else {
    const SemigroupTable& tab = *table();
    SemigroupTable prev = enumerate(n - 1, element_cap);
    AlgebraElement an = AlgebraElement::from_word(Word(n, {static_cast<Letter>(n)}));
    AlgebraElement co = AlgebraElement::unit(n) - an;
    int bb = corner_dimension(tab, an, an);
    int bc = corner_dimension(tab, an, co);
    int cb = corner_dimension(tab, co, an);
    int cc = corner_dimension(tab, co, co);
    bool ok = bb == static_cast<int>(prev.size()) && bc == 0 &&
              cc == static_cast<int>(prev.size()) &&
              static_cast<long>(tab.size()) == 2l * prev.size() + cb;
    add("algebra/corner-dimensions", ok,
        "dims " + std::to_string(bb) + "/" + std::to_string(bc) + "/" + std::to_string(cb) +
            "/" + std::to_string(cc) + " against |K_" + std::to_string(n - 1) +
            "| = " + std::to_string(prev.size()));
  }

  if (n > 4) {
    skip_rank("algebra/projective-module", 4);
    skip_rank("algebra/annihilation", 4);
  } else if (!table()) {
    skip("algebra/projective-module", "element cap exceeded");
    skip("algebra/annihilation", "element cap exceeded");
  } else {
    const SemigroupTable& tab = *table();
    IdealModule m = projective_module(tab);
    ModuleFaithfulnessReport r = module_faithfulness_check(tab);
    bool ok = r.faithful && r.dimension == static_cast<int>(m.basis.size());
    SplitMix64 rng{seed ^ 0x30du};
    for (int k = 0; k < 200 && ok; ++k) {
      std::uint32_t x = static_cast<std::uint32_t>(rng.below(tab.size()));
      std::uint32_t y = static_cast<std::uint32_t>(rng.below(tab.size()));
      ok = module_action(tab, m, tab.product(x, y)) ==
           module_action(tab, m, x) * module_action(tab, m, y);
    }
    add("algebra/projective-module", ok,
        "faithful of dimension " + std::to_string(r.dimension));

    Content rest = Content::full(n).minus(Content::of({1}));
    bool all_annihilated = true;
    for (Content X : all_contents(n)) {
      if (X == rest) continue;
      all_annihilated = all_annihilated && nonfaithful_projective_witness(tab, X).annihilates;
    }
    add("algebra/annihilation", all_annihilated,
        "the witness kills every other projective");
  }
}

}  // namespace

std::vector<CheckResult> run_checks(const std::string& suite, Rank n, std::uint64_t seed,
                                    long element_cap) {
  require_rank(n);
  Runner r{n, seed, element_cap, {}, std::nullopt, false};
  if (suite == "rewrite")
    r.run_rewrite();
  else if (suite == "structure")
    r.run_structure();
  else if (suite == "repr")
    r.run_repr();
  else if (suite == "algebra")
    r.run_algebra();
  else if (suite == "all") {
    r.run_rewrite();
    r.run_structure();
    r.run_repr();
    r.run_algebra();
  } else {
    throw std::invalid_argument("unknown check suite: " + suite);
  }
  return r.out;
}

}  // namespace kiselman
