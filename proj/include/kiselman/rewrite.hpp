// kiselman/rewrite.hpp -- the length-reducing rewriting system behind
// canonical forms.  A step erases one of the two equal letters of a factor
// a_i u a_i: the right one when u has only smaller letters (drop_right,
// a_i u a_i = a_i u), the left one when u has only larger letters
// (drop_left, a_i u a_i = u a_i).  For empty u both kinds apply.
#pragma once

#include <cstdint>
#include <vector>

#include "kiselman/words.hpp"

namespace kiselman {

enum class StepKind { drop_right, drop_left };

/// One applicable reduction.  begin/end are the 0-based positions of the two
/// equal letters; the strictly inner segment is the factor's u.  drop_right
/// erases position end, drop_left erases position begin.
struct ReductionStep {
  std::size_t begin = 0;
  std::size_t end = 0;
  Letter letter = 0;
  StepKind kind = StepKind::drop_right;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

/// All steps applicable to w, ordered by begin position, drop_right before
/// drop_left when both apply to the same factor.  Only consecutive
/// occurrences of a letter are candidates (u may not contain the letter
/// itself).
std::vector<ReductionStep> applicable_steps(const Word& w);

/// Apply one step, validating it against w first; throws
/// std::invalid_argument if the step does not apply.
Word apply_step(const Word& w, const ReductionStep& s);

/// Deterministic normal form: repeatedly apply the first applicable step
/// (leftmost begin, drop_right preferred) until none remains.  The result is
/// the canonical form of the word's element.
Word normalize(const Word& w);

/// Which applicable step a traced normalization picks at each point.
/// leftmost is the strategy of normalize(); rightmost picks the step whose
/// erased position is furthest right (drop_right preferred on ties) and is
/// the organization under which reductions of a product of two canonical
/// words proceed weakly leftwards.
enum class StepChoice { leftmost, rightmost };

/// A full reduction record: steps[k] applied to the word after the first k
/// steps.  size(input) - size(result) == number of steps.
struct ReductionTrace {
  Word input;
  std::vector<ReductionStep> steps;
  Word result;
};

ReductionTrace normalize_traced(const Word& w,
                                StepChoice choice = StepChoice::leftmost);

struct ConfluenceReport {
  bool ok = false;
  int trials = 0;
  Word normal_form;
};

/// Reduce w to a normal form `trials` times picking uniformly random
/// applicable steps (seeded, reproducible) and compare every result against
/// the deterministic normal form.
ConfluenceReport confluence_check(const Word& w, int trials,
                                  std::uint64_t seed);

}  // namespace kiselman
