// pybind11 extension _kiselman: words and contents travel as plain lists of
// ints, big integers as python ints, rational coefficients as strings
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "kiselman/algebra.hpp"
#include "kiselman/checks.hpp"
#include "kiselman/repr.hpp"
#include "kiselman/rewrite.hpp"
#include "kiselman/semigroup.hpp"
#include "kiselman/words.hpp"

namespace py = pybind11;
using namespace kiselman;

namespace {

Word make_word(Rank n, const std::vector<Letter>& letters) {
  return Word(n, letters);
}

Content make_content(Rank n, const std::vector<Letter>& letters) {
  Content c = Content::from_letters(letters);
  if (!c.fits(n)) throw std::invalid_argument("content does not fit the rank");
  return c;
}

py::int_ big(const mpz_class& z) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::list matrix_rows(const IntMatrix& m) {
  py::list rows;
  for (int r = 0; r < m.dim(); ++r) {
    py::list row;
    for (int c = 0; c < m.dim(); ++c) row.append(big(m.at(r, c)));
    rows.append(row);
  }
  return rows;
}

py::list word_list(const Word& w) {
  py::list out;
  for (int i = 0; i < w.size(); ++i) out.append(w.at(i));
  return out;
}

py::list element_terms(const AlgebraElement& a) {
  py::list out;
  for (const auto& [w, c] : a.terms())
    out.append(py::make_tuple(word_list(w), c.get_str()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_kiselman, m) {
  m.doc() = "exact computation in Kiselman semigroups K_n";

  m.def(
      "normalize",
      [](Rank n, const std::vector<Letter>& w) {
        return word_list(normalize(make_word(n, w)));
      },
      py::arg("n"), py::arg("word"),
      "canonical form of a word, as a list of letters");

  m.def(
      "is_canonical",
      [](Rank n, const std::vector<Letter>& w) {
        return is_canonical(make_word(n, w));
      },
      py::arg("n"), py::arg("word"));

  m.def(
      "multiply",
      [](Rank n, const std::vector<Letter>& u, const std::vector<Letter>& v) {
        return word_list(normalize(concat(make_word(n, u), make_word(n, v))));
      },
      py::arg("n"), py::arg("u"), py::arg("v"),
      "product of two words in canonical form");

  m.def("length_bound", &length_bound, py::arg("n"),
        "maximal length of a canonical word");

  m.def(
      "sharpness_word",
      [](Rank n) { return word_list(sharpness_word(n)); }, py::arg("n"),
      "a canonical word attaining the length bound");

  m.def(
      "enumerate_semigroup",
      [](Rank n, long element_cap) {
        SemigroupTable t = enumerate(n, element_cap);
        py::list out;
        for (std::uint32_t i = 0; i < t.size(); ++i)
          out.append(word_list(t.element(i)));
        return out;
      },
      py::arg("n"), py::arg("element_cap") = kDefaultElementCap,
      "all elements of K_n as canonical words, in discovery order");

  m.def(
      "size",
      [](Rank n, long element_cap) {
        return enumerate(n, element_cap).size();
      },
      py::arg("n"), py::arg("element_cap") = kDefaultElementCap);

  m.def(
      "idempotent",
      [](Rank n, const std::vector<Letter>& content) {
        return word_list(idempotent(n, make_content(n, content)).word());
      },
      py::arg("n"), py::arg("content"),
      "the idempotent e_X with the given content");

  m.def(
      "idempotents",
      [](Rank n) {
        py::list out;
        for (const Element& e : idempotents(n)) out.append(word_list(e.word()));
        return out;
      },
      py::arg("n"));

  m.def(
      "power_to_idempotent",
      [](Rank n, const std::vector<Letter>& w) {
        auto [steps, e] =
            power_to_idempotent(Element::from_canonical(normalize(make_word(n, w))));
        return py::make_tuple(steps, word_list(e.word()));
      },
      py::arg("n"), py::arg("word"),
      "least k with w^k idempotent, and that idempotent");

  m.def(
      "green_singletons",
      [](Rank n, long element_cap) {
        SemigroupTable t = enumerate(n, element_cap);
        for (GreenRelation rel : {GreenRelation::L, GreenRelation::R, GreenRelation::H,
                                  GreenRelation::D, GreenRelation::J})
          if (!green_classes(t, rel).all_singletons()) return false;
        return true;
      },
      py::arg("n"), py::arg("element_cap") = kDefaultElementCap,
      "whether every Green's class is a singleton");

  m.def(
      "automorphism_count",
      [](Rank n) {
        SemigroupTable t = enumerate(n);
        return automorphisms(t).size();
      },
      py::arg("n"));

  m.def(
      "nilpotent_block",
      [](Rank n, const std::vector<Letter>& content) {
        SemigroupTable t = enumerate(n);
        NilpotentBlock b = nilpotent_subsemigroup(t, make_content(n, content));
        py::dict d;
        d["size"] = b.members.size();
        d["nilpotency_class"] = b.nilpotency_class;
        d["zero"] = word_list(t.element(b.zero));
        return d;
      },
      py::arg("n"), py::arg("content"),
      "the maximal nilpotent subsemigroup with the given content");

  m.def(
      "run_checks",
      [](const std::string& suite, Rank n, std::uint64_t seed, long element_cap) {
        py::list out;
        for (const CheckResult& r : run_checks(suite, n, seed, element_cap)) {
          py::dict d;
          d["name"] = r.name;
          d["pass"] = r.pass;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("suite"), py::arg("n"), py::arg("seed") = 0,
      py::arg("element_cap") = kDefaultElementCap,
      "run a self-verification suite: rewrite, structure, repr, algebra, or all");

  m.def(
      "psi",
      [](Rank n, const std::vector<Letter>& w) {
        return matrix_rows(psi(normalize(make_word(n, w))));
      },
      py::arg("n"), py::arg("word"), "integer matrix image of a word");

  m.def(
      "kappa_prime",
      [](Rank n, const std::vector<Letter>& w) {
        return matrix_rows(kappa_prime(normalize(make_word(n, w))));
      },
      py::arg("n"), py::arg("word"),
      "image under the faithful integer specialization");

  m.def(
      "kappa_json",
      [](Rank n, const std::vector<Letter>& w) {
        return poly_matrix_json(kappa(normalize(make_word(n, w))));
      },
      py::arg("n"), py::arg("word"),
      "image under the polynomial representation, as JSON");

  m.def(
      "faithfulness",
      [](Rank n, const std::string& kind) -> py::object {
        RepKind k;
        if (kind == "psi")
          k = RepKind::psi;
        else if (kind == "kappa")
          k = RepKind::kappa;
        else if (kind == "kappa-prime")
          k = RepKind::kappa_prime;
        else
          throw std::invalid_argument("unknown representation kind: " + kind);
        SemigroupTable t = enumerate(n);
        FaithfulnessReport r = faithfulness_check(t, k);
        if (r.faithful) return py::none();
        return py::make_tuple(word_list(t.element(r.witness_a)),
                              word_list(t.element(r.witness_b)));
      },
      py::arg("n"), py::arg("kind"),
      "None if the representation is faithful, else a colliding word pair");

  m.def(
      "primitive_idempotent",
      [](Rank n, const std::vector<Letter>& content) {
        return element_terms(primitive_idempotent(n, make_content(n, content)));
      },
      py::arg("n"), py::arg("content"),
      "terms of e_X in the semigroup algebra, as (word, coefficient) pairs");

  m.def(
      "kiselman_projection",
      [](Rank n, int i) { return element_terms(kiselman_projection(n, i)); },
      py::arg("n"), py::arg("i"),
      "terms of the i-th diagonal projection pi_i");

  m.def(
      "idempotent_system_ok",
      [](Rank n) { return idempotent_system_check(n).ok; }, py::arg("n"));

  m.def(
      "projective_module",
      [](Rank n) {
        SemigroupTable t = enumerate(n);
        IdealModule mod = projective_module(t);
        ModuleFaithfulnessReport rep = module_faithfulness_check(t);
        py::dict d;
        d["dimension"] = mod.basis.size();
        d["faithful"] = rep.faithful;
        py::list basis;
        for (std::uint32_t i : mod.basis) basis.append(word_list(t.element(i)));
        d["basis"] = basis;
        return d;
      },
      py::arg("n"),
      "basis and faithfulness of the projective module attached to pi_n");

  m.def(
      "corner_dimensions",
      [](Rank n) {
        if (n < 2) throw std::invalid_argument("corner dimensions need rank at least 2");
        SemigroupTable t = enumerate(n);
        SemigroupTable prev = enumerate(n - 1);
        AlgebraElement an =
            AlgebraElement::from_word(Word(n, {static_cast<Letter>(n)}));
        AlgebraElement co = AlgebraElement::unit(n) - an;
        py::dict d;
        d["a_a"] = corner_dimension(t, an, an);
        d["a_e"] = corner_dimension(t, an, co);
        d["e_a"] = corner_dimension(t, co, an);
        d["e_e"] = corner_dimension(t, co, co);
        d["size"] = t.size();
        d["size_prev"] = prev.size();
        d["recursion_holds"] =
            static_cast<long>(t.size()) ==
            2l * prev.size() + py::cast<int>(d["e_a"]);
        return d;
      },
      py::arg("n"), "dimensions of the four corners cut out by a_n");

  m.def(
      "elements_json",
      [](Rank n, long element_cap) {
        SemigroupTable t = enumerate(n, element_cap);
        return elements_json(t);
      },
      py::arg("n"), py::arg("element_cap") = kDefaultElementCap);

  m.def(
      "cayley_csv",
      [](Rank n, long element_cap) {
        SemigroupTable t = enumerate(n, element_cap);
        return cayley_csv(t);
      },
      py::arg("n"), py::arg("element_cap") = kDefaultElementCap,
      "full multiplication table as CSV");

  m.def(
      "cayley_dot",
      [](Rank n, long element_cap) {
        SemigroupTable t = enumerate(n, element_cap);
        return cayley_dot(t);
      },
      py::arg("n"), py::arg("element_cap") = kDefaultElementCap,
      "right Cayley graph in DOT format");

  py::register_exception<ResourceLimitError>(m, "ResourceLimitError",
                                             PyExc_RuntimeError);
}
