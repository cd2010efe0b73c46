// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.  Thresholds are pinned below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <thread>

#include "coxrank/cancellator.hpp"
#include "coxrank/classifier.hpp"
#include "coxrank/essential.hpp"
#include "coxrank/graph.hpp"
#include "coxrank/subgroup.hpp"
#include "coxrank/verifier.hpp"
#include "oracles.hpp"

namespace {

  using namespace coxrank;
  using clock_type = std::chrono::steady_clock;

  constexpr double        word_problem_limit_s      = 120;
  constexpr double        parity_limit_s            = 30;
  constexpr double        covering_limit_s          = 300;
  constexpr double        subgroup_covering_limit_s = 600;
  constexpr double        join_lemma_limit_s        = 60;
  constexpr double        certificates_limit_s      = 300;
  constexpr std::size_t   word_problem_pair_length  = 4;
  constexpr std::size_t   word_problem_samples      = 10000;
  constexpr std::size_t   word_problem_sample_len   = 6;
  constexpr std::size_t   parity_trials             = 10000;
  constexpr std::uint64_t parity_seed               = 20240601;
  constexpr std::size_t   covering_radius           = 8;
  constexpr std::size_t   subgroup_radius           = 8;
  constexpr std::uint64_t commutator_index          = 32;  // 2^5
  constexpr std::size_t   multiplier_bound          = 200;
  constexpr std::size_t   missing_step_allowance    = 5;
  constexpr std::size_t   join_lemma_vertices       = 5;
  constexpr std::size_t   join_lemma_graphs         = 1 + 2 + 8 + 64 + 1024;
  constexpr std::size_t   certificate_radius        = 6;
  constexpr std::size_t   certificate_conj_radius   = 3;

  struct Outcome {
    bool        ok = true;
    std::string detail;

    void require(bool condition, std::string const& what) {
      if (!condition) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + what;
      }
    }
  };

  VerifyOptions parallel() {
    return {std::max(1U, std::thread::hardware_concurrency()), false};
  }

  // cumulative growth series: number of elements of length <= k
  std::vector<std::uint64_t> ball_sizes(DefiningGraph const& g, std::size_t radius) {
    auto                       layers = oracle::growth_series(g, radius);
    std::vector<std::uint64_t> out;
    std::uint64_t              total = 0;
    for (auto n : layers) {
      out.push_back(total += n);
    }
    return out;
  }

  Outcome word_problem() {
    Outcome o;
    for (auto const& [name, g] : {std::pair{"C5", oracle::c5()},
                                  std::pair{"Dinf", oracle::edgeless(2)}}) {
      WordProblemOptions opts;
      opts.max_length        = word_problem_pair_length;
      opts.samples           = word_problem_samples;
      opts.sample_max_length = word_problem_sample_len;
      opts.seed              = 7;
      auto const r           = verify_word_problem(g, opts, parallel());
      o.require(r.verdict == Verdict::PASS,
                std::string(name) + ": " + std::to_string(r.failure_count) + " failures");
      o.require(r.details["sampleEqualPairs"].get<std::size_t>() > 0,
                std::string(name) + ": no equal sample pairs exercised");
      auto const expected = ball_sizes(g, word_problem_sample_len);
      o.require(r.details["oracleBallSizes"].get<std::vector<std::uint64_t>>() == expected,
                std::string(name) + ": oracle ball sizes disagree with the growth series");
    }
    return o;
  }

  Outcome parity() {
    Outcome            o;
    ParityCheckOptions opts;
    opts.trials = parity_trials;
    opts.seed   = parity_seed;
    auto const r = verify_parity_invariance(oracle::c5(), opts, parallel());
    o.require(r.verdict == Verdict::PASS, std::to_string(r.failure_count) + " violations");
    o.require(r.total_cases == parity_trials, "trial count");
    // the harness must notice a corrupted move
    opts.inject_letter_deletion = true;
    opts.trials                 = 100;
    o.require(verify_parity_invariance(oracle::c5(), opts).verdict == Verdict::FAIL,
              "self-test not detected");
    return o;
  }

  Outcome covering() {
    Outcome    o;
    auto const g = oracle::c5();
    auto const r = verify_covering(g, covering_radius, parallel());
    auto const n = ball_sizes(g, covering_radius).back();
    o.require(r.verdict == Verdict::PASS, std::to_string(r.failure_count) + " failures");
    o.require(r.total_cases == n, "ball size " + std::to_string(r.total_cases)
                                      + " != " + std::to_string(n));
    o.require(r.details["covered"] == n, "not every element covered");
    // every multiplier is a product of distinct generators in vertex order
    for (auto const& m : r.details["multipliers"]) {
      auto const w = parse_word(g, m["multiplier"].get<std::string>());
      for (std::size_t i = 1; i < w.size(); ++i) {
        o.require(w[i - 1] < w[i], "multiplier outside the finite set");
      }
    }
    return o;
  }

  Outcome subgroup_covering() {
    Outcome    o;
    auto const g = oracle::c5();
    auto const t = commutator_subgroup(g);
    o.require(index_and_exponent(t).index == commutator_index, "index");
    auto const r = verify_subgroup_covering(g, t, subgroup_radius, parallel());
    o.require(r.verdict == Verdict::PASS, std::to_string(r.failure_count) + " failures");

    // independent pass: members are the zero-parity elements of the ball
    std::set<word_type> totals;
    std::size_t         members = 0;
    for (auto const& w : enumerate_ball(g, subgroup_radius)) {
      if (!parity_vector(g, w.letters()).is_zero()) {
        continue;
      }
      ++members;
      auto const [out, trace] = essentialize(g, w.letters(), t);
      totals.insert(trace.total_multiplier);
      o.require(support(g, out.letters()) == g.all(), "support not full");
      o.require(is_good_essential(g, out.letters()), "not s-good for every s");
      o.require(member(t, out.letters()), "left the subgroup");
      auto const [fixed, missing] = fix_missing(g, w.letters(), trace.exponent);
      auto const bad              = bad_set(g, fixed).bad_set.size();
      o.require(trace.steps.size() <= bad + missing_step_allowance,
                "trace longer than |B(w)| + 5 for " + render_word(g, w.letters()));
    }
    o.require(r.total_cases == members, "member count");
    o.require(totals.size() <= multiplier_bound,
              std::to_string(totals.size()) + " distinct multipliers");
    o.require(r.details["distinctMultipliers"] == totals.size(), "multiplier count");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(members) + " members, "
                + std::to_string(totals.size()) + " distinct multipliers";
    return o;
  }

  Outcome join_lemma() {
    Outcome    o;
    auto const r = verify_join_lemma(join_lemma_vertices, parallel());
    o.require(r.verdict == Verdict::PASS, std::to_string(r.failure_count) + " failures");
    o.require(r.total_cases == join_lemma_graphs,
              std::to_string(r.total_cases) + " graphs");
    return o;
  }

  Outcome rank_table() {
    Outcome o;
    auto    check = [&o](char const* what, std::size_t got, std::size_t want) {
      o.require(got == want, std::string(what) + " = " + std::to_string(got));
    };
    auto const p3 = parse_graph("vertices: a b c\nedge: a b\nedge: b c\n");
    check("racg K3", rank_racg(oracle::complete(3)).total_rank, 0);
    check("racg C4", rank_racg(oracle::cycle(4)).total_rank, 2);
    check("racg C5", rank_racg(oracle::c5()).total_rank, 1);
    check("racg Dinf", rank_racg(oracle::edgeless(2)).total_rank, 1);
    check("raag K3", rank_raag(oracle::complete(3)).total_rank, 3);
    check("raag point", rank_raag(oracle::edgeless(1)).total_rank, 1);
    check("raag P3", rank_raag(p3).total_rank, 2);
    check("raag C5", rank_raag(oracle::c5()).total_rank, 1);
    return o;
  }

  Outcome certificates() {
    Outcome    o;
    auto const g = oracle::c5();
    auto const r = verify_essential_certificates(g, certificate_radius,
                                                 certificate_conj_radius, parallel());
    o.require(r.verdict == Verdict::PASS,
              std::to_string(r.failure_count) + " counterexamples");
    o.require(r.total_cases > 0, "no certified elements");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(r.total_cases)
                + " certified elements";
    return o;
  }

  Outcome dj_counts() {
    Outcome    o;
    auto const dp = dj_double_prime(oracle::c5());
    auto const p  = dj_prime(oracle::c5());
    o.require(dp.size() == 10 && dp.number_of_edges() == 35,
              "double prime " + std::to_string(dp.size()) + "/"
                  + std::to_string(dp.number_of_edges()));
    o.require(p.size() == 10 && p.number_of_edges() == 20,
              "prime " + std::to_string(p.size()) + "/" + std::to_string(p.number_of_edges()));
    return o;
  }

}  // namespace

int main() {
  struct Criterion {
    int                      number;
    char const*              name;
    double                   limit_s;  // 0: no time limit
    std::function<Outcome()> run;
  };
  std::vector<Criterion> const criteria{
      {1, "word problem vs rewriting closure (C5, Dinf)", word_problem_limit_s, word_problem},
      {2, "parity invariance, 10^4 move sequences", parity_limit_s, parity},
      {3, "covering of ball(8) on C5 by all-odd completions", covering_limit_s, covering},
      {4, "commutator subgroup covering on ball(8)", subgroup_covering_limit_s,
       subgroup_covering},
      {5, "join lemma on all graphs with <= 5 vertices", join_lemma_limit_s, join_lemma},
      {6, "rank table", 0, rank_table},
      {7, "certificate soundness on ball(6), conjugators ball(3)", certificates_limit_s,
       certificates},
      {8, "doubled graph counts for C5", 0, dj_counts},
  };

  bool all_ok = true;
  for (auto const& c : criteria) {
    auto const start = clock_type::now();
    Outcome    o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.ok     = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double const seconds = std::chrono::duration<double>(clock_type::now() - start).count();
    if (c.limit_s > 0 && seconds >= c.limit_s) {
      o.ok = false;
      o.detail += (o.detail.empty() ? "" : "; ") + std::string("time limit exceeded");
    }
    all_ok = all_ok && o.ok;
    std::printf("criterion %d: %s  %s  (%.2f s%s)%s%s\n",
                c.number,
                o.ok ? "PASS" : "FAIL",
                c.name,
                seconds,
                c.limit_s > 0 ? (", limit " + std::to_string(int(c.limit_s)) + " s").c_str()
                              : "",
                o.detail.empty() ? "" : "  ",
                o.detail.c_str());
  }
  return all_ok ? 0 : 1;
}
