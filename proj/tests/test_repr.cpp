#include <doctest.h>

#include <json.hpp>

#include <map>
#include <set>
#include <stdexcept>

#include "kiselman/repr.hpp"
#include "oracles.hpp"

using namespace kiselman;

namespace {
Word w(Rank n, std::vector<Letter> l) { return Word(n, std::move(l)); }

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()));
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c)
      m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return m;
}

// the 91-digit bound for entries of the rank-3 integer specialization
const char* kL3 =
    "3282110304418133467951889771467198408190660942319607706257832802151559"
    "714250311574330907041";
}  // namespace

TEST_CASE("IntMatrix basics") {
  IntMatrix z(2);
  CHECK(z.is_zero());
  CHECK(z.dim() == 2);
  IntMatrix id = IntMatrix::identity(2);
  CHECK_FALSE(id.is_zero());
  CHECK(id * id == id);
  CHECK(id * z == z);
  IntMatrix a = from_rows({{1, 2}, {3, 4}});
  IntMatrix b = from_rows({{0, 1}, {1, 0}});
  CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
  CHECK(a.key() != b.key());
  CHECK(a.key() == from_rows({{1, 2}, {3, 4}}).key());
}

TEST_CASE("polynomial variable bookkeeping") {
  CHECK(poly_var_count(1) == 0);
  CHECK(poly_var_count(2) == 1);
  CHECK(poly_var_count(4) == 6);
  CHECK(poly_var_index(3, 1, 2) == 0);
  CHECK(poly_var_index(3, 1, 3) == 1);
  CHECK(poly_var_index(3, 2, 3) == 2);
  for (int n = 2; n <= 5; ++n) {
    int v = 0;
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        CHECK(poly_var_index(n, i, j) == v);
        CHECK(poly_var_pair(n, v) == std::pair<int, int>{i, j});
        ++v;
      }
    CHECK(poly_var_count(n) == v);
  }
  CHECK_THROWS_AS(poly_var_index(3, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(poly_var_index(3, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(poly_var_index(3, 2, 4), std::invalid_argument);
}

TEST_CASE("MPoly arithmetic") {
  MPoly zero(3);
  CHECK(zero.is_zero());
  MPoly one = MPoly::constant(3, 1);
  MPoly x = MPoly::xi(3, 1, 2);
  MPoly y = MPoly::xi(3, 2, 3);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK(x - x == zero);
  CHECK(one * x == x);
  CHECK((x + one) * (x + one) == x * x + x + x + one);
  CHECK(MPoly::constant(3, 0).is_zero());
  CHECK_THROWS_AS(MPoly::xi(3, 2, 2), std::invalid_argument);

  // evaluation
  std::vector<mpz_class> vals{5, 7, 11};  // xi_12, xi_13, xi_23
  CHECK(((x * y + one).evaluate(vals)) == 5 * 11 + 1);
  CHECK(zero.evaluate(vals) == 0);

  // term order is graded lexicographic: constants, then degree 1, ...
  MPoly p = x * x + x + one + y;
  std::vector<mpz_class> coeffs;
  std::vector<unsigned> degrees;
  for (const auto& [mono, c] : p.terms()) {
    unsigned d = 0;
    for (unsigned e : mono) d += e;
    degrees.push_back(d);
    coeffs.push_back(c);
  }
  CHECK(degrees == std::vector<unsigned>{0, 1, 1, 2});
  CHECK(std::is_sorted(degrees.begin(), degrees.end()));
}

TEST_CASE("psi generator matrices") {
  // rank 2: a_1 -> row 2 zeroed, column 2 = (1,0)^t on top of the identity
  CHECK(kiselman_generator(2, 1) == from_rows({{1, 1}, {0, 0}}));
  CHECK(kiselman_generator(2, 2) == from_rows({{0, 0}, {0, 1}}));
  CHECK(kiselman_generator(3, 1) == from_rows({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
  CHECK(kiselman_generator(3, 3) == from_rows({{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK_THROWS_AS(kiselman_generator(3, 4), std::invalid_argument);
}

TEST_CASE("psi is a homomorphism with the zero element mapped to zero") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(psi(Word(n)) == IntMatrix::identity(n));
    std::vector<Letter> all;
    for (Letter i = n; i >= 1; --i) all.push_back(i);
    CHECK(psi(w(n, all)).is_zero());
    CHECK(representation_relations_ok(n, RepKind::psi));
  }
  // product law on random pairs
  oracles::SplitMix64 rng(77);
  for (int it = 0; it < 200; ++it) {
    int n = 2 + static_cast<int>(rng.below(3));
    auto a = oracles::random_word(rng, n, 8);
    auto b = oracles::random_word(rng, n, 8);
    Word wa(n, std::vector<Letter>(a.begin(), a.end()));
    Word wb(n, std::vector<Letter>(b.begin(), b.end()));
    CHECK(psi(concat(wa, wb)) == psi(wa) * psi(wb));
    // the image only depends on the element
    CHECK(psi(wa) == psi(normalize(wa)));
  }
}

TEST_CASE("psi images over the table match direct computation") {
  SemigroupTable t = enumerate(4);
  std::vector<IntMatrix> images = psi_images(t);
  REQUIRE(images.size() == t.size());
  for (std::uint32_t i = 0; i < t.size(); ++i)
    CHECK(images[i] == psi(t.element(i)));
}

TEST_CASE("psi is faithful up to rank 3 and collides at rank 4") {
  for (int n = 1; n <= 3; ++n) {
    SemigroupTable t = enumerate(n);
    FaithfulnessReport rep = faithfulness_check(t, RepKind::psi);
    CHECK(rep.faithful);
    // independent pairwise recheck
    std::vector<IntMatrix> images = psi_images(t);
    for (std::uint32_t i = 0; i < t.size(); ++i)
      for (std::uint32_t j = i + 1; j < t.size(); ++j)
        CHECK_FALSE(images[i] == images[j]);
  }
  SemigroupTable t4 = enumerate(4);
  FaithfulnessReport rep = faithfulness_check(t4, RepKind::psi);
  CHECK_FALSE(rep.faithful);
  CHECK(rep.witness_a != rep.witness_b);
  CHECK(psi(t4.element(rep.witness_a)) == psi(t4.element(rep.witness_b)));
  CHECK_FALSE(t4.element(rep.witness_a) == t4.element(rep.witness_b));
  // the classical collision pair
  Word u = w(4, {3, 4, 2, 1, 3, 2});
  Word v = w(4, {3, 2, 4, 3, 1, 2});
  CHECK(is_canonical(u));
  CHECK(is_canonical(v));
  CHECK(psi(u) == psi(v));
}

TEST_CASE("height") {
  CHECK(height(IntMatrix(3)) == 0);
  CHECK(height(IntMatrix::identity(3)) == 2 + 4 + 8);
  CHECK(height(from_rows({{1, 1}, {0, 1}})) == 2 * 2 + 1 * 4);
  // left multiplication by a generator strictly decreases the height of the
  // image unless it fixes it
  SemigroupTable t = enumerate(4);
  std::vector<IntMatrix> images = psi_images(t);
  for (std::uint32_t i = 0; i < t.size(); ++i)
    for (Letter g = 1; g <= 4; ++g) {
      IntMatrix moved = kiselman_generator(4, g) * images[i];
      if (moved == images[i]) continue;
      CHECK(height(moved) < height(images[i]));
    }
}

TEST_CASE("kappa generator matrices") {
  PolyMatrix k1 = kappa_generator(2, 1);
  CHECK(k1.at(0, 0) == MPoly::constant(2, 1));
  CHECK(k1.at(0, 1) == MPoly::xi(2, 1, 2));
  CHECK(k1.at(1, 0).is_zero());
  CHECK(k1.at(1, 1).is_zero());
  PolyMatrix k2 = kappa_generator(2, 2);
  CHECK(k2.at(0, 0).is_zero());
  CHECK(k2.at(0, 1).is_zero());
  CHECK(k2.at(1, 0).is_zero());
  CHECK(k2.at(1, 1) == MPoly::constant(2, 1));
  // psi is kappa evaluated at all-ones
  for (int n = 1; n <= 3; ++n) {
    std::vector<mpz_class> ones(static_cast<std::size_t>(poly_var_count(n)), 1);
    for (Letter g = 1; g <= n; ++g)
      CHECK(kappa_generator(n, g).evaluate(ones) == kiselman_generator(n, g));
  }
}

TEST_CASE("kappa relations and faithfulness") {
  for (int n = 1; n <= 4; ++n)
    CHECK(representation_relations_ok(n, RepKind::kappa));
  for (int n = 1; n <= 4; ++n) {
    SemigroupTable t = enumerate(n);
    CHECK(faithfulness_check(t, RepKind::kappa).faithful);
    std::vector<PolyMatrix> images = kappa_images(t);
    REQUIRE(images.size() == t.size());
    for (std::uint32_t i = 0; i < t.size(); ++i)
      CHECK(images[i] == kappa(t.element(i)));
  }
}

TEST_CASE("ml sequences") {
  MLSequences ml = ml_sequences(3);
  REQUIRE(ml.m.size() == 4);
  REQUIRE(ml.l.size() == 4);
  CHECK(ml.m[1] == 1);
  CHECK(ml.l[1] == 1);
  CHECK(ml.m[2] == 2);
  CHECK(ml.l[2] == 4096);
  CHECK(ml.m[3] == 4097);
  CHECK(ml.l[3] == mpz_class(kL3));
  CHECK(mpz_class(kL3).get_str().size() == 91);
  MLSequences ml4 = ml_sequences(4);
  CHECK(ml4.m[4] == mpz_class(kL3) + 1);
  CHECK(ml4.l[4].get_str().size() == 5803);
  CHECK(ml4.l[4].get_str().substr(0, 30) == "464261756020398877515484066494");
  CHECK_THROWS_AS(ml_sequences(6), std::invalid_argument);
}

TEST_CASE("kappa_prime is the integer specialization of kappa") {
  for (int n = 2; n <= 4; ++n) {
    MLSequences ml = ml_sequences(n);
    std::vector<mpz_class> vals(static_cast<std::size_t>(poly_var_count(n)));
    for (int v = 0; v < poly_var_count(n); ++v) {
      auto [i, j] = poly_var_pair(n, v);
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), ml.m[static_cast<std::size_t>(j)].get_mpz_t(),
                 static_cast<unsigned long>(i));
      vals[static_cast<std::size_t>(v)] = p;
    }
    for (Letter g = 1; g <= n; ++g)
      CHECK(kappa_prime_generator(n, g) == kappa_generator(n, g).evaluate(vals));
    CHECK(representation_relations_ok(n, RepKind::kappa_prime));
  }
}

TEST_CASE("kappa_prime is faithful with entries below l_n") {
  for (int n = 2; n <= 4; ++n) {
    SemigroupTable t = enumerate(n);
    FaithfulnessReport rep = faithfulness_check(t, RepKind::kappa_prime);
    CHECK(rep.faithful);
    MLSequences ml = ml_sequences(n);
    std::vector<IntMatrix> images = kappa_prime_images(t);
    REQUIRE(images.size() == t.size());
    for (std::uint32_t i = 0; i < t.size(); ++i) {
      CHECK(images[i] == kappa_prime(t.element(i)));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          CHECK(images[i].at(r, c) >= 0);
          CHECK(images[i].at(r, c) < ml.l[static_cast<std::size_t>(n)]);
        }
    }
  }
}

TEST_CASE("nilpotency class of matrices") {
  // psi(a_1 a_2 .. a_n) is strictly upper triangular with ones above the
  // diagonal, nilpotent of class exactly n
  CHECK(psi(w(3, {1, 2, 3})) ==
        from_rows({{0, 1, 1}, {0, 0, 1}, {0, 0, 0}}));
  for (int n = 2; n <= 5; ++n) {
    std::vector<Letter> up;
    for (Letter i = 1; i <= n; ++i) up.push_back(i);
    CHECK(nilpotency_class_of_matrix(psi(w(n, up))) == n);
  }
  CHECK(nilpotency_class_of_matrix(IntMatrix(3)) == 1);
  CHECK_THROWS_AS(nilpotency_class_of_matrix(IntMatrix::identity(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(nilpotency_class_of_matrix(psi(w(3, {1}))),
                  std::invalid_argument);
}

TEST_CASE("matrix json") {
  auto parsed = nlohmann::json::parse(matrix_json(psi(w(2, {1}))));
  CHECK(parsed["n"] == 2);
  CHECK(parsed["entries"][0][0] == "1");
  CHECK(parsed["entries"][0][1] == "1");
  CHECK(parsed["entries"][1][0] == "0");
  CHECK(parsed["entries"][1][1] == "0");
}

TEST_CASE("poly json") {
  MPoly p = MPoly::xi(2, 1, 2) * MPoly::xi(2, 1, 2) +
            MPoly::constant(2, -3);
  auto parsed = nlohmann::json::parse(poly_json(p));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0]["coeff"] == "-3");
  CHECK(parsed[0]["monomial"].empty());
  CHECK(parsed[1]["coeff"] == "1");
  CHECK(parsed[1]["monomial"]["1,2"] == 2);
  CHECK(nlohmann::json::parse(poly_json(MPoly(2))).empty());

  auto pm = nlohmann::json::parse(poly_matrix_json(kappa_generator(2, 1)));
  CHECK(pm["n"] == 2);
  CHECK(pm["entries"][0][1][0]["monomial"]["1,2"] == 1);
  CHECK(pm["entries"][1][1].empty());
}
