#include <json.hpp>

#include <stdexcept>

#include "kiselman/repr.hpp"

namespace kiselman {

IntMatrix::IntMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
  a_.resize(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
}

IntMatrix IntMatrix::identity(int dim) {
  IntMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  for (const mpz_class& x : a_)
    if (x != 0) return false;
  return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (dim_ != o.dim_)
    throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int k = 0; k < dim_; ++k) {
      const mpz_class& x = at(r, k);
      if (x == 0) continue;
      for (int c = 0; c < dim_; ++c) out.at(r, c) += x * o.at(k, c);
    }
  return out;
}

std::string IntMatrix::key() const {
  std::string out = std::to_string(dim_);
  for (const mpz_class& x : a_) {
    out.push_back('|');
    out += x.get_str();
  }
  return out;
}

bool MPoly::GradedLex::operator()(const Mono& a, const Mono& b) const {
  unsigned da = 0, db = 0;
  for (unsigned e : a) da += e;
  for (unsigned e : b) db += e;
  if (da != db) return da < db;
  return a < b;
}

MPoly::MPoly(Rank n) : n_(n) { require_rank(n); }

MPoly MPoly::constant(Rank n, const mpz_class& c) {
  MPoly p(n);
  if (c != 0)
    p.terms_[Mono(static_cast<std::size_t>(poly_var_count(n)), 0)] = c;
  return p;
}

MPoly MPoly::xi(Rank n, int i, int j) {
  MPoly p(n);
  Mono m(static_cast<std::size_t>(poly_var_count(n)), 0);
  m[static_cast<std::size_t>(poly_var_index(n, i, j))] = 1;
  p.terms_[std::move(m)] = 1;
  return p;
}

int MPoly::var_count() const { return poly_var_count(n_); }

namespace {
void require_same_rank(Rank a, Rank b) {
  if (a != b)
    throw std::invalid_argument("polynomial rank mismatch: " +
                                std::to_string(a) + " vs " + std::to_string(b));
}
}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  require_same_rank(n_, o.n_);
  for (const auto& [mono, c] : o.terms_) {
    auto it = terms_.try_emplace(mono, 0).first;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  require_same_rank(n_, o.n_);
  for (const auto& [mono, c] : o.terms_) {
    auto it = terms_.try_emplace(mono, 0).first;
    it->second -= c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly out = *this;
  out += o;
  return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly out = *this;
  out -= o;
  return out;
}

MPoly MPoly::operator*(const MPoly& o) const {
  require_same_rank(n_, o.n_);
  MPoly out(n_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Mono m = ma;
      for (std::size_t v = 0; v < m.size(); ++v) m[v] += mb[v];
      auto it = out.terms_.try_emplace(std::move(m), 0).first;
      it->second += ca * cb;
      if (it->second == 0) out.terms_.erase(it);
    }
  return out;
}

mpz_class MPoly::evaluate(const std::vector<mpz_class>& values) const {
  if (values.size() != static_cast<std::size_t>(var_count()))
    throw std::invalid_argument("expected " + std::to_string(var_count()) +
                                " values, got " +
                                std::to_string(values.size()));
  mpz_class out = 0;
  for (const auto& [mono, c] : terms_) {
    mpz_class term = c;
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), values[v].get_mpz_t(), mono[v]);
      term *= p;
    }
    out += term;
  }
  return out;
}

int poly_var_count(Rank n) {
  require_rank(n);
  return n * (n - 1) / 2;
}

int poly_var_index(Rank n, int i, int j) {
  if (i < 1 || i >= j || j > n)
    throw std::invalid_argument("variable pair (" + std::to_string(i) + "," +
                                std::to_string(j) + ") needs 1 <= i < j <= " +
                                std::to_string(n));
  return (i - 1) * n - i * (i - 1) / 2 + (j - i - 1);
}

std::pair<int, int> poly_var_pair(Rank n, int v) {
  if (v < 0 || v >= poly_var_count(n))
    throw std::invalid_argument("variable index out of range");
  int i = 1;
  while (v >= n - i) {
    v -= n - i;
    ++i;
  }
  return {i, i + 1 + v};
}

PolyMatrix::PolyMatrix(int dim, Rank n) : dim_(dim), n_(n) {
  if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
  require_rank(n);
  a_.resize(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
            MPoly(n));
}

PolyMatrix PolyMatrix::identity(int dim, Rank n) {
  PolyMatrix m(dim, n);
  for (int i = 0; i < dim; ++i) m.at(i, i) = MPoly::constant(n, 1);
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const MPoly& p : a_)
    if (!p.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (dim_ != o.dim_ || n_ != o.n_)
    throw std::invalid_argument("matrix dimension or rank mismatch");
  PolyMatrix out(dim_, n_);
  for (int r = 0; r < dim_; ++r)
    for (int k = 0; k < dim_; ++k) {
      const MPoly& x = at(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < dim_; ++c) out.at(r, c) += x * o.at(k, c);
    }
  return out;
}

IntMatrix PolyMatrix::evaluate(const std::vector<mpz_class>& values) const {
  IntMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out.at(r, c) = at(r, c).evaluate(values);
  return out;
}

std::string matrix_json(const IntMatrix& m) {
  nlohmann::ordered_json obj;
  obj["n"] = m.dim();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int r = 0; r < m.dim(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(m.at(r, c).get_str());
    rows.push_back(std::move(row));
  }
  obj["entries"] = std::move(rows);
  return obj.dump(2);
}

namespace {
nlohmann::ordered_json poly_to_json(const MPoly& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [mono, c] : p.terms()) {
    nlohmann::ordered_json term;
    term["coeff"] = c.get_str();
    nlohmann::ordered_json vars = nlohmann::ordered_json::object();
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      auto [i, j] = poly_var_pair(p.rank(), static_cast<int>(v));
      vars[std::to_string(i) + "," + std::to_string(j)] = mono[v];
    }
    term["monomial"] = std::move(vars);
    arr.push_back(std::move(term));
  }
  return arr;
}
}  // namespace

std::string poly_json(const MPoly& p) { return poly_to_json(p).dump(2); }

std::string poly_matrix_json(const PolyMatrix& m) {
  nlohmann::ordered_json obj;
  obj["n"] = m.dim();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int r = 0; r < m.dim(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(poly_to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  obj["entries"] = std::move(rows);
  return obj.dump(2);
}

}  // namespace kiselman
