// Sufficient criteria for an element to be essential, i.e. for its
// parabolic closure to be the whole group.  Essential elements of an
// infinite irreducible non-affine right-angled Coxeter group are rank one.
//
// For a reduced word w and a generator s occurring in it, write
//
//   w = w_0 s w_1 s ... s w_k s w_{k+1}
//
// with no s inside any block.  An s-blocker is a generator not commuting
// with s.  w is s-minimal when every inner block w_1..w_k contains an
// s-blocker, and s-good when it is s-minimal and, for k >= 1, the outer
// blocks w_{k+1} w_0 contain an s-blocker as well.  A single occurrence
// (k = 0) is always s-good.

#ifndef COXRANK_ESSENTIAL_HPP_
#define COXRANK_ESSENTIAL_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "coxrank/graph.hpp"
#include "coxrank/word.hpp"

namespace coxrank {

  enum class GoodStatus { GOOD, NOT_MINIMAL_IMPOSSIBLE, NOT_GOOD, ABSENT };

  std::string_view to_string(GoodStatus status) noexcept;

  struct GoodnessReport {
    std::vector<GoodStatus> per_generator;  // indexed by generator
    GeneratorSet            bad_set;
    bool                    full_support = false;
  };

  // The blocks w_0, ..., w_{k+1} of w around the occurrences of s.  Empty if
  // s does not occur.
  std::vector<word_type> s_blocks(word_type const& w, letter_type s);

  // Throws GENERATOR_ABSENT if s does not occur in w.
  bool is_s_minimal(DefiningGraph const& g, ReducedWord const& w, letter_type s);
  bool is_s_good(DefiningGraph const& g, ReducedWord const& w, letter_type s);

  // Status of every generator; never throws on missing generators.
  GoodnessReport goodness(DefiningGraph const& g, ReducedWord const& w);

  // The bad set B(w).  Throws MISSING_GENERATORS unless w has full support.
  GoodnessReport bad_set(DefiningGraph const& g, ReducedWord const& w);

  // Every generator occurs, each an odd number of times.
  bool is_all_odd_essential(DefiningGraph const& g, word_type const& w);

  // The reduced form has full support and is s-good for every s.
  bool is_good_essential(DefiningGraph const& g, word_type const& w);

  // Product, in vertex order, of the generators occurring an even number of
  // times in w.  Multiplying w on the left by it gives an all-odd word.
  word_type find_even_completion(DefiningGraph const& g, word_type const& w);

  struct FalsifyResult {
    bool                     counterexample = false;
    word_type                conjugator;  // u, when counterexample
    GeneratorSet             parabolic;   // J = support(u w u^-1)
    std::size_t              radius = 0;
    std::size_t              conjugators_tried = 0;
  };

  // Bounded search for evidence that w is not essential: the shortlex-least
  // u of length <= conj_radius with support(u w u^-1) a proper subset of the
  // generators.  No counterexample is evidence, not proof.
  FalsifyResult falsify_essential(DefiningGraph const& g,
                                  word_type const&     w,
                                  std::size_t          conj_radius,
                                  std::size_t          cap = default_ball_cap);

  // Same, with a precomputed ball of conjugators (sorted shortlex).
  FalsifyResult falsify_essential(DefiningGraph const&            g,
                                  word_type const&                w,
                                  std::vector<ReducedWord> const& conjugators,
                                  std::size_t                     conj_radius);

}  // namespace coxrank

#endif  // COXRANK_ESSENTIAL_HPP_
