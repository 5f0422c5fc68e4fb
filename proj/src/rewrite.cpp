#include "kiselman/rewrite.hpp"

#include <stdexcept>

#include "kiselman/words.hpp"

namespace kiselman {

std::vector<ReductionStep> applicable_steps(const Word& w) {
  const auto& v = w.letters();
  std::vector<ReductionStep> out;
  for (std::size_t p = 0; p < v.size(); ++p) {
    Letter g = v[p];
    bool larger = false, smaller = false;
    std::size_t q = p + 1;
    while (q < v.size() && v[q] != g) {
      larger = larger || v[q] > g;
      smaller = smaller || v[q] < g;
      ++q;
    }
    if (q == v.size()) continue;
    if (!larger) out.push_back({p, q, g, StepKind::drop_right});
    if (!smaller) out.push_back({p, q, g, StepKind::drop_left});
  }
  return out;
}

Word apply_step(const Word& w, const ReductionStep& s) {
  const auto& v = w.letters();
  bool ok = s.begin < s.end && s.end < v.size() && v[s.begin] == s.letter &&
            v[s.end] == s.letter;
  if (ok) {
    for (std::size_t r = s.begin + 1; r < s.end && ok; ++r) {
      if (v[r] == s.letter) ok = false;
      if (s.kind == StepKind::drop_right && v[r] > s.letter) ok = false;
      if (s.kind == StepKind::drop_left && v[r] < s.letter) ok = false;
    }
  }
  if (!ok)
    throw std::invalid_argument("reduction step does not apply to " +
                                to_text(w));
  std::vector<Letter> letters = v;
  letters.erase(letters.begin() +
                static_cast<std::ptrdiff_t>(
                    s.kind == StepKind::drop_right ? s.end : s.begin));
  return Word(w.rank(), std::move(letters));
}

namespace {
std::size_t erased_position(const ReductionStep& s) {
  return s.kind == StepKind::drop_right ? s.end : s.begin;
}

// the index of the chosen step within a nonempty `steps`
std::size_t choose(const std::vector<ReductionStep>& steps,
                   StepChoice choice) {
  if (choice == StepChoice::leftmost) return 0;
  std::size_t best = 0;
  for (std::size_t k = 1; k < steps.size(); ++k) {
    std::size_t a = erased_position(steps[k]);
    std::size_t b = erased_position(steps[best]);
    if (a > b || (a == b && steps[k].kind == StepKind::drop_right &&
                  steps[best].kind == StepKind::drop_left))
      best = k;
  }
  return best;
}

struct SplitMix64 {
  std::uint64_t s;
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};
}  // namespace

Word normalize(const Word& w) {
  Word cur = w;
  while (true) {
    auto steps = applicable_steps(cur);
    if (steps.empty()) return cur;
    cur = apply_step(cur, steps.front());
  }
}

ReductionTrace normalize_traced(const Word& w, StepChoice choice) {
  ReductionTrace tr{w, {}, w};
  while (true) {
    auto steps = applicable_steps(tr.result);
    if (steps.empty()) return tr;
    const ReductionStep& s = steps[choose(steps, choice)];
    tr.steps.push_back(s);
    tr.result = apply_step(tr.result, s);
  }
}

ConfluenceReport confluence_check(const Word& w, int trials,
                                  std::uint64_t seed) {
  ConfluenceReport rep{true, trials, normalize(w)};
  SplitMix64 rng{seed};
  for (int t = 0; t < trials && rep.ok; ++t) {
    Word cur = w;
    while (true) {
      auto steps = applicable_steps(cur);
      if (steps.empty()) break;
      cur = apply_step(cur, steps[rng.next() % steps.size()]);
    }
    rep.ok = cur == rep.normal_form;
  }
  return rep;
}

}  // namespace kiselman
