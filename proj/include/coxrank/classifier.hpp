// Algebraic rank of right-angled Coxeter and Artin groups from the defining
// graph.
//
// A join decomposition of the graph splits the group into a direct product,
// and rank is additive over direct products.  Per factor:
//
//   Coxeter: one vertex (Z/2, spherical)            -> 0
//            two non-adjacent vertices (D_infinity)  -> |S| - 1 = 1
//            three or more vertices, not a join      -> 1
//   Artin:   one vertex (Z)                          -> 1
//            two or more vertices, not a join        -> 1
//
// The classifier reports ranks implied by these results; it does not
// compute centralizers.

#ifndef COXRANK_CLASSIFIER_HPP_
#define COXRANK_CLASSIFIER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "coxrank/graph.hpp"

namespace coxrank {

  enum class GroupKind { RACG, RAAG };
  enum class Commensurability { NO, UNKNOWN };

  std::string_view to_string(GroupKind kind) noexcept;
  std::string_view to_string(Commensurability c) noexcept;

  struct RankFactor {
    std::vector<std::string> vertex_set;
    // FactorKind name for RACG factors; INFINITE_CYCLIC or NON_JOIN for RAAG
    std::string              kind;
    std::size_t              rank;
    std::string              note;
  };

  struct RankReport {
    GroupKind                group_kind;
    std::vector<RankFactor>  factors;
    std::size_t              total_rank = 0;
    // NO: not commensurable to a uniform lattice in a higher-rank semisimple
    // Lie group
    Commensurability         higher_rank_lattice_commensurable
        = Commensurability::UNKNOWN;
    std::vector<std::string> notes;
  };

  RankReport rank_racg(DefiningGraph const& g);
  RankReport rank_raag(DefiningGraph const& g);

  // NO iff total rank <= 1: a uniform lattice in a higher-rank group has rank
  // >= 2, and rank is a commensurability invariant.
  Commensurability commensurability_flag(RankReport const& report);

}  // namespace coxrank

#endif  // COXRANK_CLASSIFIER_HPP_
