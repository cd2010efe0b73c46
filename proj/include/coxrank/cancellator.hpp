// Synthesis of multiplier words that turn an element of a finite-index
// normal subgroup T into one that is s-good for every generator s, while
// staying inside T.
//
// For a generator s pick s' not commuting with s, and s'' (distinct from
// both) not commuting with s (TYPE1) or, failing that, with s' (TYPE2).  The
// multiplier is (s'' s s')^n for TYPE1 and (s' s'' s s' s'')^n for TYPE2,
// where g^n lies in T for every g.  Prepending it to a reduced word w:
//
//   * if s is missing from w, s appears afterwards and nothing disappears;
//   * if w has full support and is not s-good, the result is s-, s'- and
//     s''-good, and stays t-good for every other t that was good.
//
// fix_missing applies the first rule until the support is full, make_good
// the second until the bad set is empty.

#ifndef COXRANK_CANCELLATOR_HPP_
#define COXRANK_CANCELLATOR_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "coxrank/graph.hpp"
#include "coxrank/subgroup.hpp"
#include "coxrank/word.hpp"

namespace coxrank {

  enum class BlockerVariant { TYPE1, TYPE2 };

  std::string_view to_string(BlockerVariant v) noexcept;

  struct BlockerChoice {
    letter_type    s;
    letter_type    s_prime;
    letter_type    s_double_prime;
    BlockerVariant variant;

    friend bool operator==(BlockerChoice const&, BlockerChoice const&) = default;
  };

  enum class RepairPhase { MISSING_GENERATOR, BAD_GENERATOR };

  std::string_view to_string(RepairPhase p) noexcept;

  struct MultiplierStep {
    RepairPhase   phase;
    letter_type   target;
    BlockerChoice choice;
    word_type     multiplier;
    ReducedWord   result;  // reduced form of multiplier · previous word
  };

  struct MultiplierTrace {
    std::vector<MultiplierStep> steps;
    // Concatenation of the step multipliers, newest leftmost.
    word_type     total_multiplier;
    std::size_t   exponent = 2;

    std::size_t count(RepairPhase phase) const;
  };

  // s' is the least generator not commuting with s; s'' the least generator
  // outside {s, s'} not commuting with s, else the least not commuting with
  // s'.  Throws NO_BLOCKER if either does not exist (the graph is then
  // reducible or infinite dihedral).
  BlockerChoice choose_blockers(DefiningGraph const& g, letter_type s);

  // Throws EXPONENT_TOO_SMALL if n < 2.
  word_type multiplier_word(BlockerChoice const& choice, std::size_t n);

  std::pair<ReducedWord, MultiplierTrace>
  fix_missing(DefiningGraph const& g, word_type const& w, std::size_t n);

  // Requires reduce(w) to have full support (MISSING_GENERATORS otherwise).
  // Throws CONTRACT_VIOLATION if a step fails to shrink the bad set.
  std::pair<ReducedWord, MultiplierTrace>
  make_good(DefiningGraph const& g, word_type const& w, std::size_t n);

  // fix_missing followed by make_good.  With a subgroup, w must be a member
  // (NOT_IN_SUBGROUP otherwise) and n is the exponent of the quotient, raised
  // to 2 when the quotient is trivial; without one, n = 2.  The result is
  // checked to be good-essential and, with a subgroup, a member; any miss is
  // a CONTRACT_VIOLATION.
  std::pair<ReducedWord, MultiplierTrace>
  essentialize(DefiningGraph const&               g,
               word_type const&                   w,
               std::optional<SubgroupSpec> const& spec = std::nullopt);

}  // namespace coxrank

#endif  // COXRANK_CANCELLATOR_HPP_
