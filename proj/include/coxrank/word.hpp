// Words over the generators of a right-angled Coxeter group.
//
// In a right-angled Coxeter group a word is reduced iff it contains no two
// occurrences of a generator s such that every letter strictly between them
// commutes with s.  Any two reduced words for the same element differ by
// swaps of adjacent commuting letters, so the reduced words of an element
// form one commutation class (a trace), and the lexicographically least
// member of that class is a canonical form.

#ifndef COXRANK_WORD_HPP_
#define COXRANK_WORD_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "coxrank/graph.hpp"

namespace coxrank {

  using word_type = std::vector<letter_type>;

  inline constexpr std::size_t default_ball_cap = 10;

  // Abelianization image of an element: bit s is the parity of the number of
  // occurrences of generator s in any expression of the element.
  class ParityVector {
   public:
    ParityVector() = default;
    ParityVector(std::size_t rank, std::uint64_t bits) noexcept
        : _rank(rank), _bits(bits & GeneratorSet::full(rank).mask()) {}

    // Parses a string of '0'/'1' characters; character i is generator i.
    static ParityVector from_string(std::string_view bits);

    std::size_t rank() const noexcept {
      return _rank;
    }
    std::uint64_t bits() const noexcept {
      return _bits;
    }
    bool bit(letter_type s) const noexcept {
      return (_bits >> s) & 1U;
    }
    bool is_zero() const noexcept {
      return _bits == 0;
    }
    bool all_ones() const noexcept {
      return _bits == GeneratorSet::full(_rank).mask();
    }
    GeneratorSet odd() const noexcept {
      return GeneratorSet(_bits);
    }
    std::string to_string() const;

    friend bool operator==(ParityVector const&, ParityVector const&) = default;

   private:
    std::size_t   _rank = 0;
    std::uint64_t _bits = 0;
  };

  // A word certified to be reduced in a given graph.  Instances are only
  // produced by reduce, normal_form and certify.
  class ReducedWord {
   public:
    ReducedWord() = default;

    // Throws NOT_REDUCED if w is not reduced, UNKNOWN_GENERATOR if a letter
    // is out of range.
    static ReducedWord certify(DefiningGraph const& g, word_type w);

    word_type const& letters() const noexcept {
      return _letters;
    }
    std::size_t length() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }

    friend bool operator==(ReducedWord const&, ReducedWord const&) = default;

   private:
    explicit ReducedWord(word_type w) : _letters(std::move(w)) {}

    friend ReducedWord reduce(DefiningGraph const&, word_type const&);
    friend ReducedWord normal_form(DefiningGraph const&, word_type const&);

    word_type _letters;
  };

  // Shortlex order: shorter words first, then lexicographic by generator
  // index.
  bool shortlex_less(word_type const& a, word_type const& b) noexcept;

  // Throws UNKNOWN_GENERATOR if any letter is not a vertex of g.
  void check_word(DefiningGraph const& g, word_type const& w);

  // Labels separated by whitespace.  The empty word may be written as "",
  // "()" or, when no generator is called "e", as "e".
  word_type parse_word(DefiningGraph const& g, std::string_view text);

  // Labels separated by single spaces; the empty word is "e" (or "()" when
  // "e" is itself a generator label).
  std::string render_word(DefiningGraph const& g, word_type const& w);

  word_type inverse(word_type const& w);

  // Concatenation a·b.
  word_type concat(word_type const& a, word_type const& b);

  // Deletes cancellable pairs (two occurrences of s with only letters
  // commuting with s in between) until none remain.  Pairs are removed in
  // order of their right-hand occurrence, scanning left to right.
  ReducedWord reduce(DefiningGraph const& g, word_type const& w);

  bool is_reduced(DefiningGraph const& g, word_type const& w);

  // Lexicographically least reduced word for the element of w, built by
  // repeatedly emitting the least letter that can be commuted to the front.
  ReducedWord normal_form(DefiningGraph const& g, word_type const& w);

  bool equal(DefiningGraph const& g, word_type const& w1, word_type const& w2);

  ParityVector parity_vector(DefiningGraph const& g, word_type const& w);

  // Generators occurring in a (any) reduced expression of w.
  GeneratorSet support(DefiningGraph const& g, word_type const& w);

  // All elements of reduced length <= radius as normal forms, sorted
  // shortlex.  Throws RADIUS_EXCEEDS_CAP if radius > cap.
  std::vector<ReducedWord> enumerate_ball(DefiningGraph const& g,
                                          std::size_t          radius,
                                          std::size_t cap = default_ball_cap);

}  // namespace coxrank

#endif  // COXRANK_WORD_HPP_
