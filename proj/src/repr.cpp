#include "kiselman/repr.hpp"

#include <map>
#include <stdexcept>

namespace kiselman {

namespace {
void require_letter_in_rank(Rank n, Letter i) {
  if (i < 1 || i > n)
    throw std::invalid_argument("letter " + std::to_string(i) +
                                " out of range 1.." + std::to_string(n));
}
}  // namespace

IntMatrix kiselman_generator(Rank n, Letter i) {
  require_rank(n);
  require_letter_in_rank(n, i);
  int j = n - i + 1;  // 1-based row/column
  IntMatrix m = IntMatrix::identity(n);
  m.at(j - 1, j - 1) = 0;
  for (int r = 0; r < j - 1; ++r) m.at(r, j - 1) = 1;
  return m;
}

IntMatrix psi(const Word& w) {
  IntMatrix acc = IntMatrix::identity(w.rank());
  for (Letter g : w.letters()) acc = acc * kiselman_generator(w.rank(), g);
  return acc;
}

namespace {
// images over the table, computed once per element by extending the image
// of the canonical prefix (prefixes of canonical words are canonical, and
// the length-then-lex order lists them earlier)
template <class Matrix, class Gen>
std::vector<Matrix> prefix_images(const SemigroupTable& t, Matrix identity,
                                  Gen&& generator) {
  std::vector<Matrix> gens;
  for (Letter g = 1; g <= t.rank(); ++g) gens.push_back(generator(g));
  std::vector<Matrix> out(t.size(), identity);
  for (std::uint32_t i = 1; i < t.size(); ++i) {
    const Word& w = t.element(i);
    std::vector<Letter> head(w.letters().begin(), w.letters().end() - 1);
    std::uint32_t p = *t.index_of(Word(t.rank(), std::move(head)));
    out[i] = out[p] * gens[static_cast<std::size_t>(w.at(w.size() - 1) - 1)];
  }
  return out;
}
}  // namespace

std::vector<IntMatrix> psi_images(const SemigroupTable& t) {
  return prefix_images(t, IntMatrix::identity(t.rank()),
                       [&](Letter g) { return kiselman_generator(t.rank(), g); });
}

std::uint64_t height(const IntMatrix& m) {
  std::uint64_t h = 0;
  for (int r = 0; r < m.dim(); ++r) {
    std::uint64_t nonzeros = 0;
    for (int c = 0; c < m.dim(); ++c)
      if (m.at(r, c) != 0) ++nonzeros;
    h += nonzeros << (r + 1);
  }
  return h;
}

PolyMatrix kappa_generator(Rank n, Letter i) {
  require_rank(n);
  require_letter_in_rank(n, i);
  int j = n - i + 1;
  PolyMatrix m = PolyMatrix::identity(n, n);
  m.at(j - 1, j - 1) = MPoly(n);
  for (int r = 0; r < j - 1; ++r) m.at(r, j - 1) = MPoly::xi(n, r + 1, j);
  return m;
}

PolyMatrix kappa(const Word& w) {
  PolyMatrix acc = PolyMatrix::identity(w.rank(), w.rank());
  for (Letter g : w.letters()) acc = acc * kappa_generator(w.rank(), g);
  return acc;
}

std::vector<PolyMatrix> kappa_images(const SemigroupTable& t) {
  return prefix_images(t, PolyMatrix::identity(t.rank(), t.rank()),
                       [&](Letter g) { return kappa_generator(t.rank(), g); });
}

MLSequences ml_sequences(int upto) {
  if (upto < 1 || upto > 5)
    throw std::invalid_argument(
        "m/l sequences grow doubly exponentially; supported up to index 5");
  MLSequences seq;
  seq.m.assign(static_cast<std::size_t>(upto) + 1, 0);
  seq.l.assign(static_cast<std::size_t>(upto) + 1, 0);
  seq.m[1] = 1;
  seq.l[1] = 1;
  for (int i = 2; i <= upto; ++i) {
    seq.m[static_cast<std::size_t>(i)] = seq.l[static_cast<std::size_t>(i - 1)] + 1;
    unsigned long e = 1ul << i;
    mpz_class base_pow, m_pow;
    mpz_ui_pow_ui(base_pow.get_mpz_t(), static_cast<unsigned long>(i), e);
    mpz_pow_ui(m_pow.get_mpz_t(),
               seq.m[static_cast<std::size_t>(i)].get_mpz_t(),
               static_cast<unsigned long>(i) * e);
    seq.l[static_cast<std::size_t>(i)] = base_pow * m_pow;
  }
  return seq;
}

namespace {
// specialization values xi_ij -> m_j^i in variable order
std::vector<mpz_class> kappa_prime_values(Rank n) {
  if (n > 5)
    throw std::invalid_argument(
        "integer specialization supported for rank <= 5");
  MLSequences seq = ml_sequences(n);
  std::vector<mpz_class> values(static_cast<std::size_t>(poly_var_count(n)));
  for (int v = 0; v < poly_var_count(n); ++v) {
    auto [i, j] = poly_var_pair(n, v);
    mpz_pow_ui(values[static_cast<std::size_t>(v)].get_mpz_t(),
               seq.m[static_cast<std::size_t>(j)].get_mpz_t(),
               static_cast<unsigned long>(i));
  }
  return values;
}
}  // namespace

IntMatrix kappa_prime_generator(Rank n, Letter i) {
  return kappa_generator(n, i).evaluate(kappa_prime_values(n));
}

IntMatrix kappa_prime(const Word& w) {
  Rank n = w.rank();
  std::vector<mpz_class> values = kappa_prime_values(n);
  IntMatrix acc = IntMatrix::identity(n);
  for (Letter g : w.letters())
    acc = acc * kappa_generator(n, g).evaluate(values);
  return acc;
}

std::vector<IntMatrix> kappa_prime_images(const SemigroupTable& t) {
  std::vector<mpz_class> values = kappa_prime_values(t.rank());
  return prefix_images(t, IntMatrix::identity(t.rank()), [&](Letter g) {
    return kappa_generator(t.rank(), g).evaluate(values);
  });
}

FaithfulnessReport faithfulness_check(const SemigroupTable& t, RepKind kind) {
  std::vector<std::string> keys(t.size());
  switch (kind) {
    case RepKind::psi: {
      std::vector<IntMatrix> images = psi_images(t);
      for (std::uint32_t i = 0; i < t.size(); ++i) keys[i] = images[i].key();
      break;
    }
    case RepKind::kappa: {
      std::vector<PolyMatrix> images = kappa_images(t);
      for (std::uint32_t i = 0; i < t.size(); ++i)
        keys[i] = poly_matrix_json(images[i]);
      break;
    }
    case RepKind::kappa_prime: {
      std::vector<IntMatrix> images = kappa_prime_images(t);
      for (std::uint32_t i = 0; i < t.size(); ++i) keys[i] = images[i].key();
      break;
    }
  }
  std::map<std::string, std::uint32_t> first;
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    auto [it, fresh] = first.try_emplace(keys[i], i);
    if (!fresh) return {false, it->second, i};
  }
  return {true, 0, 0};
}

namespace {
template <class Matrix>
bool generator_relations_ok(const std::vector<Matrix>& g) {
  std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!(g[i] * g[i] == g[i])) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix ji = g[j] * g[i];
      if (!(g[i] * ji == ji) || !(ji * g[j] == ji)) return false;
    }
  return true;
}
}  // namespace

bool representation_relations_ok(Rank n, RepKind kind) {
  require_rank(n);
  if (kind == RepKind::kappa) {
    std::vector<PolyMatrix> g;
    for (Letter i = 1; i <= n; ++i) g.push_back(kappa_generator(n, i));
    return generator_relations_ok(g);
  }
  std::vector<IntMatrix> g;
  for (Letter i = 1; i <= n; ++i)
    g.push_back(kind == RepKind::psi ? kiselman_generator(n, i)
                                     : kappa_prime_generator(n, i));
  return generator_relations_ok(g);
}

int nilpotency_class_of_matrix(const IntMatrix& m) {
  IntMatrix cur = m;
  int k = 1;
  while (!cur.is_zero()) {
    if (k >= m.dim())
      throw std::invalid_argument("matrix is not nilpotent");
    cur = cur * m;
    ++k;
  }
  return k;
}

}  // namespace kiselman
