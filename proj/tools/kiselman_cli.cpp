// kiselman -- command line front end over the library: canonical forms,
// enumeration, structural reports, representations, algebra exports, and the
// self-verification suites.  Exit codes: 0 success, 1 verification failure,
// 2 usage or parse error, 3 resource limit.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "kiselman/algebra.hpp"
#include "kiselman/checks.hpp"
#include "kiselman/repr.hpp"
#include "kiselman/rewrite.hpp"
#include "kiselman/semigroup.hpp"
#include "kiselman/words.hpp"

namespace {

using nlohmann::ordered_json;
using namespace kiselman;

struct Options {
  int n = 3;
  std::string format;
  std::uint64_t seed = 0;
  long element_cap = kDefaultElementCap;
  std::string out;
  std::string suite = "all";
  std::string word_text;
  std::string content_text;
  std::string kind = "psi";
  bool has_word = false;
  bool has_content = false;
};

void emit(const Options& o, const std::string& text) {
  std::string payload = text;
  if (payload.empty() || payload.back() != '\n') payload += '\n';
  if (o.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + o.out);
  f << payload;
}

ordered_json word_json(const Word& w) { return ordered_json(w.letters()); }

std::string word_or_e(const Word& w) { return w.empty() ? "e" : to_text(w); }

ordered_json content_json(Content c) { return ordered_json(c.to_letters()); }

Content parse_content(const std::string& text, Rank n) {
  return content(parse_word(text, n));
}

mpz_class size_bound(Rank n) {
  mpz_class b;
  mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(length_bound(n)));
  return b + 1;
}

int cmd_normalize(const Options& o) {
  Word input = parse_word(o.word_text, o.n);
  Word canonical = normalize(input);
  if (o.format == "json") {
    ordered_json j;
    j["n"] = o.n;
    j["input"] = word_json(input);
    j["input_canonical"] = is_canonical(input);
    j["canonical"] = word_json(canonical);
    j["length"] = canonical.size();
    emit(o, j.dump(2));
  } else {
    emit(o, to_text(canonical));
  }
  return 0;
}

int cmd_size(const Options& o) {
  SemigroupTable t = enumerate(o.n, o.element_cap);
  mpz_class bound = size_bound(o.n);
  if (o.format == "json") {
    ordered_json j;
    j["n"] = o.n;
    j["size"] = t.size();
    j["bound"] = bound.get_str();
    emit(o, j.dump(2));
  } else {
    emit(o, std::to_string(t.size()) + "\nbound " + bound.get_str());
  }
  return 0;
}

int cmd_check(const Options& o) {
  std::vector<CheckResult> results = run_checks(o.suite, o.n, o.seed, o.element_cap);
  bool pass = true;
  for (const CheckResult& r : results) pass = pass && r.pass;
  if (o.format == "plain") {
    std::string text;
    for (const CheckResult& r : results)
      text += std::string(r.pass ? "PASS " : "FAIL ") + r.name + ": " + r.detail + "\n";
    text += pass ? "all checks passed" : "some checks FAILED";
    emit(o, text);
  } else {
    ordered_json j;
    j["suite"] = o.suite;
    j["n"] = o.n;
    j["seed"] = o.seed;
    j["pass"] = pass;
    j["checks"] = ordered_json::array();
    for (const CheckResult& r : results)
      j["checks"].push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    emit(o, j.dump(2));
  }
  return pass ? 0 : 1;
}

int cmd_elements(const Options& o) {
  SemigroupTable t = enumerate(o.n, o.element_cap);
  if (o.format == "plain") {
    std::string text;
    for (std::uint32_t i = 0; i < t.size(); ++i) text += word_or_e(t.element(i)) + "\n";
    emit(o, text);
  } else {
    emit(o, elements_json(t));
  }
  return 0;
}

int cmd_table(const Options& o) {
  SemigroupTable t = enumerate(o.n, o.element_cap);
  emit(o, cayley_csv(t));
  return 0;
}

int cmd_idempotents(const Options& o) {
  if (o.has_content) {
    Content X = parse_content(o.content_text, o.n);
    Element e = idempotent(o.n, X);
    if (o.format == "plain") {
      emit(o, word_or_e(e.word()));
    } else {
      ordered_json j;
      j["content"] = content_json(X);
      j["word"] = word_json(e.word());
      emit(o, j.dump(2));
    }
    return 0;
  }
  std::vector<Element> es = idempotents(o.n);
  if (o.format == "plain") {
    std::string text;
    for (const Element& e : es) text += word_or_e(e.word()) + "\n";
    emit(o, text);
  } else {
    ordered_json arr = ordered_json::array();
    for (const Element& e : es)
      arr.push_back({{"content", content_json(content(e.word()))}, {"word", word_json(e.word())}});
    emit(o, arr.dump(2));
  }
  return 0;
}

int cmd_green(const Options& o) {
  SemigroupTable t = enumerate(o.n, o.element_cap);
  static const std::pair<GreenRelation, const char*> kRelations[] = {
      {GreenRelation::L, "L"}, {GreenRelation::R, "R"}, {GreenRelation::H, "H"},
      {GreenRelation::D, "D"}, {GreenRelation::J, "J"}};
  if (o.format == "plain") {
    std::string text;
    for (auto [rel, name] : kRelations) {
      GreenClasses g = green_classes(t, rel);
      text += std::string(name) + ": " + std::to_string(g.classes.size()) + " classes" +
              (g.all_singletons() ? ", all singletons" : "") + "\n";
    }
    emit(o, text);
  } else {
    ordered_json arr = ordered_json::array();
    for (auto [rel, name] : kRelations) {
      GreenClasses g = green_classes(t, rel);
      arr.push_back({{"relation", name},
                     {"classes", g.classes.size()},
                     {"all_singletons", g.all_singletons()}});
    }
    emit(o, arr.dump(2));
  }
  return 0;
}

int cmd_nilpotent(const Options& o) {
  SemigroupTable t = enumerate(o.n, o.element_cap);
  auto block_json = [&](const NilpotentBlock& b, bool with_members) {
    ordered_json j;
    j["content"] = content_json(b.content);
    j["size"] = b.members.size();
    j["nilpotency_class"] = b.nilpotency_class;
    j["zero"] = word_json(t.element(b.zero));
    if (with_members) {
      j["members"] = ordered_json::array();
      for (std::uint32_t i : b.members) j["members"].push_back(word_json(t.element(i)));
    }
    return j;
  };
  if (o.has_content) {
    NilpotentBlock b = nilpotent_subsemigroup(t, parse_content(o.content_text, o.n));
    emit(o, block_json(b, true).dump(2));
    return 0;
  }
  ordered_json arr = ordered_json::array();
  for (const NilpotentBlock& b : nilpotent_partition(t)) arr.push_back(block_json(b, false));
  emit(o, arr.dump(2));
  return 0;
}

int cmd_repr(const Options& o) {
  if (o.has_word) {
    Word w = normalize(parse_word(o.word_text, o.n));
    if (o.kind == "psi") {
      emit(o, matrix_json(psi(w)));
    } else if (o.kind == "kappa") {
      emit(o, poly_matrix_json(kappa(w)));
    } else {
      emit(o, matrix_json(kappa_prime(w)));
    }
    return 0;
  }
  ordered_json j;
  j["kind"] = o.kind;
  j["n"] = o.n;
  j["generators"] = ordered_json::array();
  for (Letter i = 1; i <= o.n; ++i) {
    if (o.kind == "psi")
      j["generators"].push_back(ordered_json::parse(matrix_json(kiselman_generator(o.n, i))));
    else if (o.kind == "kappa")
      j["generators"].push_back(ordered_json::parse(poly_matrix_json(kappa_generator(o.n, i))));
    else
      j["generators"].push_back(ordered_json::parse(matrix_json(kappa_prime_generator(o.n, i))));
  }
  emit(o, j.dump(2));
  return 0;
}

int cmd_algebra_idempotents(const Options& o) {
  if (o.has_content) {
    Content X = parse_content(o.content_text, o.n);
    ordered_json j;
    j["content"] = content_json(X);
    j["element"] = ordered_json::parse(algebra_element_json(primitive_idempotent(o.n, X)));
    emit(o, j.dump(2));
    return 0;
  }
  ordered_json arr = ordered_json::array();
  for (std::uint32_t b = 0; b < (1u << o.n); ++b) {
    Content X;
    for (Letter i = 1; i <= o.n; ++i)
      if (b & (1u << (i - 1))) X = X.with(i);
    arr.push_back(
        {{"content", content_json(X)},
         {"element", ordered_json::parse(algebra_element_json(primitive_idempotent(o.n, X)))}});
  }
  emit(o, arr.dump(2));
  return 0;
}

int cmd_corner_dims(const Options& o) {
  if (o.n < 2) throw std::invalid_argument("corner dimensions need rank at least 2");
  SemigroupTable t = enumerate(o.n, o.element_cap);
  SemigroupTable prev = enumerate(o.n - 1, o.element_cap);
  AlgebraElement an = AlgebraElement::from_word(Word(o.n, {static_cast<Letter>(o.n)}));
  AlgebraElement co = AlgebraElement::unit(o.n) - an;
  int aa = corner_dimension(t, an, an);
  int ae = corner_dimension(t, an, co);
  int ea = corner_dimension(t, co, an);
  int ee = corner_dimension(t, co, co);
  bool holds = static_cast<long>(t.size()) == 2l * prev.size() + ea;
  if (o.format == "plain") {
    emit(o, "a.a " + std::to_string(aa) + "\na.e " + std::to_string(ae) + "\ne.a " +
                std::to_string(ea) + "\ne.e " + std::to_string(ee) + "\nrecursion " +
                (holds ? "holds" : "FAILS"));
  } else {
    ordered_json j;
    j["n"] = o.n;
    j["size"] = t.size();
    j["size_prev"] = prev.size();
    j["corners"] = {{"a_a", aa}, {"a_e", ae}, {"e_a", ea}, {"e_e", ee}};
    j["recursion_holds"] = holds;
    emit(o, j.dump(2));
  }
  return 0;
}

int cmd_export_cayley_graph(const Options& o) {
  SemigroupTable t = enumerate(o.n, o.element_cap);
  emit(o, cayley_dot(t));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation in Kiselman semigroups K_n"};
  app.require_subcommand(1);

  Options o;
  std::map<const CLI::App*, std::string> default_format;
  auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("-n,--rank", o.n, "rank of the semigroup")
        ->check(CLI::Range(1, 32))
        ->capture_default_str();
    sub->add_option("--out", o.out, "write the output to a file instead of stdout");
    o.format = formats.front();
    default_format[sub] = formats.front();
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    return sub;
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--element-cap", o.element_cap, "abort enumerations beyond this many elements")
        ->capture_default_str();
  };

  CLI::App* normalize_cmd = add_common(app.add_subcommand("normalize", "canonical form of a word"),
                                       {"plain", "json"});
  normalize_cmd->add_option("word", o.word_text, "the word, as comma-separated letters")
      ->required();

  CLI::App* size_cmd =
      add_common(app.add_subcommand("size", "number of elements of K_n"), {"plain", "json"});
  add_cap(size_cmd);

  CLI::App* check_cmd = add_common(
      app.add_subcommand("check", "run the self-verification suites"), {"json", "plain"});
  check_cmd->add_option("--suite", o.suite, "which suite to run")
      ->check(CLI::IsMember({"all", "rewrite", "structure", "repr", "algebra"}))
      ->capture_default_str();
  check_cmd->add_option("--seed", o.seed, "seed for sampled checks")->capture_default_str();
  add_cap(check_cmd);

  CLI::App* elements_cmd =
      add_common(app.add_subcommand("elements", "list all elements"), {"json", "plain"});
  add_cap(elements_cmd);

  CLI::App* table_cmd =
      add_common(app.add_subcommand("table", "full multiplication table"), {"csv"});
  add_cap(table_cmd);

  CLI::App* idem_cmd = add_common(
      app.add_subcommand("idempotents", "the idempotents e_X"), {"json", "plain"});
  idem_cmd->add_option("--content", o.content_text, "single content X, comma-separated")
      ->trigger_on_parse()
      ->each([&](const std::string&) { o.has_content = true; });

  CLI::App* green_cmd =
      add_common(app.add_subcommand("green", "Green's relation classes"), {"json", "plain"});
  add_cap(green_cmd);

  CLI::App* nil_cmd = add_common(
      app.add_subcommand("nilpotent", "maximal nilpotent subsemigroups"), {"json"});
  nil_cmd->add_option("--content", o.content_text, "single content X, comma-separated")
      ->each([&](const std::string&) { o.has_content = true; });
  add_cap(nil_cmd);

  CLI::App* repr_cmd = add_common(
      app.add_subcommand("repr", "matrix representations"), {"json"});
  repr_cmd->add_option("--kind", o.kind, "which representation")
      ->check(CLI::IsMember({"psi", "kappa", "kappa-prime"}))
      ->capture_default_str();
  repr_cmd->add_option("--word", o.word_text, "image of this word instead of the generators")
      ->each([&](const std::string&) { o.has_word = true; });

  CLI::App* algidem_cmd = add_common(
      app.add_subcommand("algebra-idempotents", "the primitive idempotent system"), {"json"});
  algidem_cmd->add_option("--content", o.content_text, "single content X, comma-separated")
      ->each([&](const std::string&) { o.has_content = true; });

  CLI::App* corner_cmd = add_common(
      app.add_subcommand("corner-dims", "corner dimensions and the size recursion"),
      {"json", "plain"});
  add_cap(corner_cmd);

  CLI::App* export_cmd = add_common(
      app.add_subcommand("export-cayley-graph", "right Cayley graph in DOT"), {"dot"});
  add_cap(export_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const CLI::App* parsed = app.get_subcommands().front();
  if (!parsed->count("--format")) o.format = default_format.at(parsed);

  try {
    if (app.got_subcommand(normalize_cmd)) return cmd_normalize(o);
    if (app.got_subcommand(size_cmd)) return cmd_size(o);
    if (app.got_subcommand(check_cmd)) return cmd_check(o);
    if (app.got_subcommand(elements_cmd)) return cmd_elements(o);
    if (app.got_subcommand(table_cmd)) return cmd_table(o);
    if (app.got_subcommand(idem_cmd)) return cmd_idempotents(o);
    if (app.got_subcommand(green_cmd)) return cmd_green(o);
    if (app.got_subcommand(nil_cmd)) return cmd_nilpotent(o);
    if (app.got_subcommand(repr_cmd)) return cmd_repr(o);
    if (app.got_subcommand(algidem_cmd)) return cmd_algebra_idempotents(o);
    if (app.got_subcommand(corner_cmd)) return cmd_corner_dims(o);
    if (app.got_subcommand(export_cmd)) return cmd_export_cayley_graph(o);
  } catch (const kiselman::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
