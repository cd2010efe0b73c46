// Defining graphs of right-angled Coxeter and Artin groups.
//
// A DefiningGraph is a finite simplicial graph whose vertices are the
// generators.  An edge between two generators means they commute
// (m_ij = 2); a non-edge means there is no relation (m_ij = infinity).  The
// order in which vertices are declared is the total order on generators used
// by every normal form downstream, so it is fixed at construction.
//
// Generators are identified by their index in declaration order.  At most 64
// generators are supported so that vertex subsets fit in one machine word.

#ifndef COXRANK_GRAPH_HPP_
#define COXRANK_GRAPH_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coxrank {

  using letter_type = std::uint8_t;

  inline constexpr std::size_t max_generators = 64;

  // A subset of the generators of a graph, stored as a bit mask.
  class GeneratorSet {
   public:
    constexpr GeneratorSet() noexcept = default;
    constexpr explicit GeneratorSet(std::uint64_t mask) noexcept
        : _mask(mask) {}

    static constexpr GeneratorSet full(std::size_t n) noexcept {
      return GeneratorSet(n >= 64 ? ~std::uint64_t(0)
                                  : (std::uint64_t(1) << n) - 1);
    }

    constexpr bool contains(letter_type s) const noexcept {
      return (_mask >> s) & 1U;
    }
    constexpr void insert(letter_type s) noexcept {
      _mask |= std::uint64_t(1) << s;
    }
    constexpr void erase(letter_type s) noexcept {
      _mask &= ~(std::uint64_t(1) << s);
    }
    constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_mask));
    }
    constexpr bool empty() const noexcept {
      return _mask == 0;
    }
    constexpr std::uint64_t mask() const noexcept {
      return _mask;
    }
    // Least generator in the set; the set must be non-empty.
    constexpr letter_type front() const noexcept {
      return static_cast<letter_type>(std::countr_zero(_mask));
    }
    constexpr bool is_subset_of(GeneratorSet other) const noexcept {
      return (_mask & ~other._mask) == 0;
    }

    // Members in increasing order.
    std::vector<letter_type> members() const;

    friend constexpr GeneratorSet operator|(GeneratorSet a,
                                            GeneratorSet b) noexcept {
      return GeneratorSet(a._mask | b._mask);
    }
    friend constexpr GeneratorSet operator&(GeneratorSet a,
                                            GeneratorSet b) noexcept {
      return GeneratorSet(a._mask & b._mask);
    }
    friend constexpr GeneratorSet operator-(GeneratorSet a,
                                            GeneratorSet b) noexcept {
      return GeneratorSet(a._mask & ~b._mask);
    }
    friend constexpr bool operator==(GeneratorSet,
                                     GeneratorSet) noexcept = default;

   private:
    std::uint64_t _mask = 0;
  };

  class DefiningGraph {
   public:
    using edge_type = std::pair<letter_type, letter_type>;

    // Validates labels and edges; throws EMPTY_GRAPH, INVALID_LABEL,
    // DUPLICATE_VERTEX, TOO_MANY_VERTICES, UNKNOWN_ENDPOINT or SELF_LOOP.
    // Edges are given by label; repeated edges are merged.
    DefiningGraph(std::vector<std::string>                              labels,
                  std::vector<std::pair<std::string, std::string>> const& edges);

    // Same, with edges given by vertex index.
    DefiningGraph(std::vector<std::string> labels,
                  std::vector<edge_type> const& edges);

    std::size_t size() const noexcept {
      return _labels.size();
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    std::string const& label(letter_type s) const {
      return _labels.at(s);
    }

    std::optional<letter_type> index_of(std::string_view label) const;

    // True iff s != t and {s, t} is an edge.
    bool adjacent(letter_type s, letter_type t) const noexcept {
      return _adjacency[s].contains(t);
    }

    // Group-theoretic commutation: equal generators or an edge.
    bool commute(letter_type s, letter_type t) const noexcept {
      return s == t || adjacent(s, t);
    }

    GeneratorSet neighbours(letter_type s) const noexcept {
      return _adjacency[s];
    }

    GeneratorSet all() const noexcept {
      return GeneratorSet::full(size());
    }

    // Edges (s, t) with s < t, in lexicographic order.
    std::vector<edge_type> edges() const;

    std::size_t number_of_edges() const;

    // Induced subgraph on `vertices`, keeping the relative vertex order.
    DefiningGraph induced(GeneratorSet vertices) const;

    friend bool operator==(DefiningGraph const&,
                           DefiningGraph const&) = default;

   private:
    void check_labels() const;

    std::vector<std::string>  _labels;
    std::vector<GeneratorSet> _adjacency;
  };

  enum class FactorKind {
    SPHERICAL_POINT,
    AFFINE_DIHEDRAL,
    IRREDUCIBLE_NONAFFINE
  };

  std::string_view to_string(FactorKind kind) noexcept;

  struct FactorClassification {
    FactorKind               kind;
    std::vector<std::string> vertex_set;
  };

  // Parses the line-oriented graph format:
  //
  //   # comment
  //   vertices: a b c
  //   edge: a b
  //
  // Errors carry the offending line number.
  DefiningGraph parse_graph(std::string_view text);

  // Inverse of parse_graph: vertex line in declaration order, then one edge
  // line per edge in index order.
  std::string serialize_graph(DefiningGraph const& g);

  // Connected components of the complement graph, each as a vertex set,
  // ordered by least vertex.
  std::vector<GeneratorSet> complement_components(DefiningGraph const& g);

  bool is_join(DefiningGraph const& g);

  // Induced subgraphs on the components of the complement.  None of them is
  // a join, and joining them back together gives g.
  std::vector<DefiningGraph> join_decompose(DefiningGraph const& g);

  // The join of graphs with pairwise disjoint labels; vertex order is the
  // concatenation of the factors' orders.
  DefiningGraph join(std::vector<DefiningGraph> const& factors);

  // Spherical / affine / irreducible non-affine trichotomy for a factor.  In
  // the right-angled case the only irreducible affine group is the infinite
  // dihedral group, so the kind depends on the vertex count alone.
  FactorClassification classify_factor(DefiningGraph const& g);

  // Vertices <i>_0 then <i>_1.  (i,1)-(j,1) iff i-j in g; (i,0)-(j,0) for all
  // i != j; (i,0)-(j,1) iff i != j.
  DefiningGraph dj_double_prime(DefiningGraph const& g);

  // Vertices <i>_m1 then <i>_1.  Both layers are copies of g, and
  // (i,-1)-(j,1) iff i != j and i-j in g.
  DefiningGraph dj_prime(DefiningGraph const& g);

}  // namespace coxrank

#endif  // COXRANK_GRAPH_HPP_
