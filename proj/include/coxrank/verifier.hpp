// Exhaustive and randomized desk-scale checks of the covering results.
//
// Every check returns a VerificationReport.  Reports are deterministic for
// fixed parameters (random checks take an explicit seed), failures are
// sorted shortlex by their primary word, and an empty case set is itself a
// failure (EMPTY_DOMAIN) so that nothing passes vacuously.

#ifndef COXRANK_VERIFIER_HPP_
#define COXRANK_VERIFIER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "coxrank/graph.hpp"
#include "coxrank/subgroup.hpp"
#include "coxrank/word.hpp"

namespace coxrank {

  enum class Verdict { PASS, FAIL };

  struct VerificationReport {
    std::string                  check;
    nlohmann::ordered_json       params = nlohmann::ordered_json::object();
    std::optional<std::uint64_t> seed;
    std::size_t                  total_cases = 0;
    // At most max_recorded_failures entries; failure_count has the total.
    std::vector<nlohmann::ordered_json> failures;
    std::size_t                         failure_count = 0;
    std::optional<double>               elapsed_ms;
    Verdict                             verdict = Verdict::FAIL;
    std::vector<std::string>            notes;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
  };

  inline constexpr std::size_t max_recorded_failures = 100;

  struct VerifyOptions {
    unsigned jobs = 1;
    // Record wall-clock time in the report.  Off by default so that reports
    // are byte-for-byte reproducible.
    bool     timing = false;
  };

  struct ParityCheckOptions {
    std::size_t   trials          = 10000;
    std::size_t   max_length      = 12;
    std::size_t   moves_per_trial = 16;
    std::uint64_t seed            = 1;
    // Self-test of the harness: replace one legal move per trial by the
    // deletion of a single letter, which must be detected.
    bool inject_letter_deletion = false;
  };

  struct WordProblemOptions {
    std::size_t   max_length = 4;
    // Additional random pairs of words of length <= sample_max_length.
    std::size_t   samples           = 0;
    std::size_t   sample_max_length = 6;
    std::uint64_t seed              = 1;
    std::size_t   cap               = 6;
  };

  // Random legal moves (swap adjacent commuting letters, delete ss, insert
  // ss) must never change the parity vector.
  VerificationReport verify_parity_invariance(DefiningGraph const&      g,
                                              ParityCheckOptions const& opts,
                                              VerifyOptions const& vopts = {});

  // Normal-form equality against a rewriting-closure oracle: words of length
  // <= max_length + 2 are partitioned by union-find over commutation swaps
  // and ss-deletions, and two words are equal iff they share a class.
  VerificationReport verify_word_problem(DefiningGraph const&      g,
                                         WordProblemOptions const& opts,
                                         VerifyOptions const&      vopts = {});

  // Every element w of the ball: find_even_completion(w) is a product of
  // distinct generators in vertex order and its product with w is all-odd.
  // Throws PRECONDITION_CLASS unless g is irreducible non-affine.
  VerificationReport verify_covering(DefiningGraph const& g,
                                     std::size_t          radius,
                                     VerifyOptions const& vopts = {});

  // Every member t of the ball is essentialized inside the subgroup; the set
  // of distinct total multipliers is reported.
  VerificationReport verify_subgroup_covering(DefiningGraph const& g,
                                              SubgroupSpec const&  spec,
                                              std::size_t          radius,
                                              VerifyOptions const& vopts = {});

  // Groups full-support members by bad set, synthesizes a cancellator from
  // the first member of each class and applies it verbatim to the others.
  VerificationReport
  verify_cancellator_uniformity(DefiningGraph const& g,
                                SubgroupSpec const&  spec,
                                std::size_t          radius,
                                VerifyOptions const& vopts = {});

  // Exhaustive over labelled graphs on 1..max_vertices vertices: g is a join
  // iff dj_prime(g) is.  max_vertices must be at most 6.
  VerificationReport verify_join_lemma(std::size_t          max_vertices,
                                       VerifyOptions const& vopts = {});

  // Every element of the ball certified by either criterion survives
  // falsify_essential at conj_radius.  `extra_certified` words are treated
  // as certified regardless (harness self-test).
  VerificationReport
  verify_essential_certificates(DefiningGraph const&          g,
                                std::size_t                   radius,
                                std::size_t                   conj_radius,
                                VerifyOptions const&          vopts = {},
                                std::vector<word_type> const& extra_certified
                                = {});

}  // namespace coxrank

#endif  // COXRANK_VERIFIER_HPP_
