#include "kiselman/algebra.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kiselman/rewrite.hpp"

namespace kiselman {

namespace {
void require_same_rank(Rank a, Rank b) {
  if (a != b) throw std::invalid_argument("algebra elements of different ranks");
}

std::string content_text(Content X) {
  std::string s = "{";
  bool first = true;
  for (Letter l : X.to_letters()) {
    if (!first) s += ",";
    s += std::to_string(l);
    first = false;
  }
  return s + "}";
}

bool is_idempotent(const AlgebraElement& a) { return a * a == a; }
}  // namespace

AlgebraElement::AlgebraElement(Rank n) : n_(n) { require_rank(n); }

AlgebraElement AlgebraElement::unit(Rank n) {
  AlgebraElement a(n);
  a.terms_[Word(n)] = 1;
  return a;
}

AlgebraElement AlgebraElement::from_word(const Word& w) {
  AlgebraElement a(w.rank());
  a.terms_[normalize(w)] = 1;
  return a;
}

AlgebraElement AlgebraElement::from_element(const Element& x) {
  AlgebraElement a(x.rank());
  a.terms_[x.word()] = 1;
  return a;
}

Rational AlgebraElement::coeff(const Word& canonical) const {
  auto it = terms_.find(canonical);
  return it == terms_.end() ? Rational(0) : it->second;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_same_rank(n_, o.n_);
  for (const auto& [w, c] : o.terms_) {
    Rational& slot = terms_[w];
    slot += c;
    if (slot == 0) terms_.erase(w);
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_same_rank(n_, o.n_);
  for (const auto& [w, c] : o.terms_) {
    Rational& slot = terms_[w];
    slot -= c;
    if (slot == 0) terms_.erase(w);
  }
  return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  r += o;
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  r -= o;
  return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  require_same_rank(n_, o.n_);
  AlgebraElement r(n_);
  for (const auto& [u, cu] : terms_)
    for (const auto& [v, cv] : o.terms_) {
      Word w = normalize(concat(u, v));
      Rational& slot = r.terms_[w];
      slot += cu * cv;
      if (slot == 0) r.terms_.erase(w);
    }
  return r;
}

AlgebraElement AlgebraElement::scaled(const Rational& c) const {
  AlgebraElement r(n_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [w, coeff] : r.terms_) coeff *= c;
  return r;
}

Rational rho(Content X, const Element& x) {
  if (!X.fits(x.rank())) throw std::invalid_argument("content does not fit the rank");
  return content(x.word()).subset_of(X) ? 1 : 0;
}

Rational rho(Content X, const AlgebraElement& a) {
  if (!X.fits(a.rank())) throw std::invalid_argument("content does not fit the rank");
  Rational sum = 0;
  for (const auto& [w, c] : a.terms())
    if (content(w).subset_of(X)) sum += c;
  return sum;
}

AlgebraElement primitive_idempotent(Rank n, Content X) {
  require_rank(n);
  if (!X.fits(n)) throw std::invalid_argument("content does not fit the rank");
  std::vector<Letter> descending = X.to_letters();
  std::reverse(descending.begin(), descending.end());
  AlgebraElement acc = AlgebraElement::from_word(Word(n, descending));
  for (Letter j : Content::full(n).minus(X).to_letters())
    acc = acc * (AlgebraElement::unit(n) - AlgebraElement::from_word(Word(n, {j})));
  return acc;
}

SystemReport idempotent_system_check(Rank n) {
  require_rank(n);
  SystemReport report;
  std::vector<Content> contents;
  std::vector<AlgebraElement> es;
  for (std::uint32_t b = 0; b < (1u << n); ++b) {
    Content X;
    for (Letter i = 1; i <= n; ++i)
      if (b & (1u << (i - 1))) X = X.with(i);
    contents.push_back(X);
    es.push_back(primitive_idempotent(n, X));
  }

  AlgebraElement sum(n);
  for (std::size_t i = 0; i < es.size(); ++i) {
    sum += es[i];
    if (!is_idempotent(es[i]))
      report.failures.push_back("e_" + content_text(contents[i]) + " is not idempotent");
    for (std::size_t j = 0; j < es.size(); ++j) {
      if (i != j && !(es[i] * es[j]).is_zero())
        report.failures.push_back("e_" + content_text(contents[i]) + " e_" +
                                  content_text(contents[j]) + " is not zero");
      Rational expect = (i == j) ? 1 : 0;
      if (rho(contents[j], es[i]) != expect)
        report.failures.push_back("rho_" + content_text(contents[j]) + "(e_" +
                                  content_text(contents[i]) + ") is not " +
                                  (i == j ? "1" : "0"));
    }
  }
  if (sum != AlgebraElement::unit(n))
    report.failures.push_back("the idempotents do not sum to the unit");
  report.ok = report.failures.empty();
  return report;
}

AlgebraElement kiselman_projection(Rank n, int i) {
  require_rank(n);
  if (i < 1 || i > n) throw std::invalid_argument("projection index out of range");
  auto chain = [n](int k) {
    if (k == 0) return AlgebraElement::unit(n);
    std::vector<Letter> letters;
    for (int l = n; l > n - k; --l) letters.push_back(l);
    return AlgebraElement::from_word(Word(n, letters));
  };
  if (i == n) return chain(n - 1);
  return chain(i - 1) - chain(i);
}

int corner_dimension(const SemigroupTable& t, const AlgebraElement& left,
                     const AlgebraElement& right) {
  if (left.rank() != t.rank() || right.rank() != t.rank())
    throw std::invalid_argument("corner factors must have the table's rank");
  if (!is_idempotent(left)) throw std::invalid_argument("left factor is not idempotent");
  if (!is_idempotent(right)) throw std::invalid_argument("right factor is not idempotent");

  using Row = std::map<std::uint32_t, Rational>;
  std::map<std::uint32_t, Row> pivots;  // leading coordinate -> reduced row
  int rank = 0;
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    AlgebraElement v = left * AlgebraElement::from_word(t.element(x)) * right;
    Row row;
    for (const auto& [w, c] : v.terms()) row[*t.index_of(w)] = c;
    while (!row.empty()) {
      std::uint32_t lead = row.begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        Rational inv = row.begin()->second;
        for (auto& [k, c] : row) c /= inv;
        pivots.emplace(lead, std::move(row));
        ++rank;
        break;
      }
      Rational factor = row.begin()->second;
      for (const auto& [k, c] : it->second) {
        Rational& slot = row[k];
        slot -= factor * c;
        if (slot == 0) row.erase(k);
      }
    }
  }
  return rank;
}

SizeRecursionReport size_recursion_check(Rank n) {
  require_rank(n);
  if (n < 2) throw std::invalid_argument("the recursion needs rank at least 2");
  SemigroupTable t = enumerate(n);
  SemigroupTable prev = enumerate(n - 1);
  AlgebraElement an = AlgebraElement::from_word(Word(n, {static_cast<Letter>(n)}));
  SizeRecursionReport r;
  r.size_n = t.size();
  r.size_prev = prev.size();
  r.corner_dim = corner_dimension(t, AlgebraElement::unit(n) - an, an);
  r.holds = r.size_n == 2 * r.size_prev + r.corner_dim;
  return r;
}

IdealModule projective_module(const SemigroupTable& t) {
  Rank n = t.rank();
  std::uint32_t f = *t.index_of(idempotent(n, Content::full(n).minus(Content::of({1}))).word());
  std::uint32_t zero = *t.index_of(idempotent(n, Content::full(n)).word());
  std::vector<bool> in_ideal(t.size(), false);
  for (std::uint32_t x = 0; x < t.size(); ++x) in_ideal[t.product(x, f)] = true;
  IdealModule m;
  m.n = n;
  m.zero_index = zero;
  for (std::uint32_t i = 0; i < t.size(); ++i)
    if (in_ideal[i] && i != zero) m.basis.push_back(i);
  return m;
}

IntMatrix module_action(const SemigroupTable& t, const IdealModule& m, std::uint32_t x) {
  if (x >= t.size()) throw std::invalid_argument("element index out of range");
  std::map<std::uint32_t, int> position;
  for (std::size_t b = 0; b < m.basis.size(); ++b)
    position[m.basis[b]] = static_cast<int>(b);
  IntMatrix act(static_cast<int>(m.basis.size()));
  for (std::size_t b = 0; b < m.basis.size(); ++b) {
    std::uint32_t y = t.product(x, m.basis[b]);
    if (y == m.zero_index) continue;
    act.at(position.at(y), static_cast<int>(b)) = 1;
  }
  return act;
}

ModuleFaithfulnessReport module_faithfulness_check(const SemigroupTable& t) {
  IdealModule m = projective_module(t);
  ModuleFaithfulnessReport r;
  r.dimension = static_cast<int>(m.basis.size());
  std::map<std::string, std::uint32_t> seen;
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    auto [it, inserted] = seen.emplace(module_action(t, m, x).key(), x);
    if (!inserted) {
      r.faithful = false;
      r.witness_a = it->second;
      r.witness_b = x;
      return r;
    }
  }
  r.faithful = true;
  return r;
}

AnnihilationReport nonfaithful_projective_witness(const SemigroupTable& t, Content X) {
  Rank n = t.rank();
  if (!X.fits(n)) throw std::invalid_argument("content does not fit the rank");
  Content rest = Content::full(n).minus(Content::of({1}));
  if (X == rest)
    throw std::invalid_argument("the module at {2..n} is faithful and has no annihilator");
  AnnihilationReport r;
  r.witness = AlgebraElement::from_element(idempotent(n, rest)) -
              AlgebraElement::from_element(idempotent(n, Content::full(n)));
  AlgebraElement e_x = primitive_idempotent(n, X);
  r.annihilates = true;
  for (std::uint32_t x = 0; x < t.size(); ++x)
    if (!(r.witness * AlgebraElement::from_word(t.element(x)) * e_x).is_zero()) {
      r.annihilates = false;
      break;
    }
  return r;
}

IntMatrix psi_linear(const AlgebraElement& a) {
  int n = a.rank();
  std::vector<Rational> acc(static_cast<std::size_t>(n) * n);
  for (const auto& [w, c] : a.terms()) {
    IntMatrix img = psi(w);
    for (int r = 0; r < n; ++r)
      for (int col = 0; col < n; ++col)
        acc[static_cast<std::size_t>(r) * n + col] += c * img.at(r, col);
  }
  IntMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int col = 0; col < n; ++col) {
      const Rational& v = acc[static_cast<std::size_t>(r) * n + col];
      if (v.get_den() != 1)
        throw std::invalid_argument("psi of this element is not integral");
      out.at(r, col) = v.get_num();
    }
  return out;
}

std::string algebra_element_json(const AlgebraElement& a) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [w, c] : a.terms()) {
    nlohmann::ordered_json term;
    term["word"] = w.letters();
    term["coeff"] = c.get_str();
    arr.push_back(std::move(term));
  }
  return arr.dump(2);
}

}  // namespace kiselman
