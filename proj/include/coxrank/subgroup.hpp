// Finite-index normal subgroups given by parity.
//
// The abelianization of a right-angled Coxeter group is the bit-vector space
// of parity vectors.  For a subspace Q of that space, the preimage
// T = {w : parity(w) in Q} is a normal subgroup of index 2^(|S| - dim Q)
// with elementary abelian quotient.  Q = 0 gives the commutator subgroup.

#ifndef COXRANK_SUBGROUP_HPP_
#define COXRANK_SUBGROUP_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coxrank/graph.hpp"
#include "coxrank/word.hpp"

namespace coxrank {

  class SubgroupSpec {
   public:
    // Spans `generators`; dependent vectors are dropped.  Throws
    // DIMENSION_MISMATCH if a vector's rank differs from |S|.
    SubgroupSpec(DefiningGraph ambient, std::vector<ParityVector> const& generators);

    DefiningGraph const& ambient() const noexcept {
      return _ambient;
    }

    // Linearly independent, in reduced echelon form (distinct pivots, each
    // pivot bit cleared in every other vector).
    std::vector<ParityVector> const& basis() const noexcept {
      return _basis;
    }

    std::size_t dimension() const noexcept {
      return _basis.size();
    }

    bool contains(ParityVector const& v) const;

   private:
    DefiningGraph             _ambient;
    std::vector<ParityVector> _basis;
  };

  struct QuotientInfo {
    std::uint64_t index;
    std::uint64_t exponent;
  };

  SubgroupSpec commutator_subgroup(DefiningGraph const& g);

  bool member(SubgroupSpec const& spec, word_type const& w);

  // index = 2^(|S| - dim Q); exponent of the quotient is 1 if it is trivial,
  // else 2.  Throws INDEX_OVERFLOW if the index does not fit in 64 bits.
  QuotientInfo index_and_exponent(SubgroupSpec const& spec);

  std::vector<ReducedWord> enumerate_members(SubgroupSpec const& spec,
                                             std::size_t         radius,
                                             std::size_t cap = default_ball_cap);

  // Contents of a subgroup file:
  //
  //   graph: c5.txt
  //   basis: 11000
  //   basis: 00110
  //
  // The graph reference is returned verbatim; resolving it is up to the
  // caller.
  struct SubgroupFile {
    std::string              graph_ref;
    std::vector<std::string> basis;
  };

  SubgroupFile parse_subgroup_file(std::string_view text);

  SubgroupSpec make_subgroup(DefiningGraph const& g, SubgroupFile const& file);

  std::string serialize_subgroup(SubgroupSpec const& spec,
                                 std::string const&  graph_ref);

}  // namespace coxrank

#endif  // COXRANK_SUBGROUP_HPP_
