#include "coxrank/cancellator.hpp"

#include <algorithm>

#include "coxrank/error.hpp"
#include "coxrank/essential.hpp"

namespace coxrank {

  namespace {

    std::string set_string(DefiningGraph const& g, GeneratorSet set) {
      std::string out = "{";
      for (auto s : set.members()) {
        out += (out.size() > 1 ? " " : "") + g.label(s);
      }
      return out + "}";
    }

    [[noreturn]] void violation(DefiningGraph const&   g,
                                MultiplierTrace const& trace,
                                std::string const&     what) {
      std::string detail = what + "; trace:";
      for (auto const& step : trace.steps) {
        detail += " [" + std::string(to_string(step.phase)) + " "
                  + g.label(step.target) + ": "
                  + render_word(g, step.multiplier) + " -> "
                  + render_word(g, step.result.letters()) + "]";
      }
      raise(ErrorCode::CONTRACT_VIOLATION, detail);
    }

    void append_step(MultiplierTrace& trace, MultiplierStep step) {
      trace.total_multiplier = concat(step.multiplier, trace.total_multiplier);
      trace.steps.push_back(std::move(step));
    }

  }  // namespace

  std::string_view to_string(BlockerVariant v) noexcept {
    return v == BlockerVariant::TYPE1 ? "TYPE1" : "TYPE2";
  }

  std::string_view to_string(RepairPhase p) noexcept {
    return p == RepairPhase::MISSING_GENERATOR ? "MISSING_GENERATOR"
                                               : "BAD_GENERATOR";
  }

  std::size_t MultiplierTrace::count(RepairPhase phase) const {
    std::size_t total = 0;
    for (auto const& step : steps) {
      total += step.phase == phase;
    }
    return total;
  }

  BlockerChoice choose_blockers(DefiningGraph const& g, letter_type s) {
    if (s >= g.size()) {
      raise(ErrorCode::UNKNOWN_GENERATOR,
            "generator index " + std::to_string(s) + " out of range");
    }
    GeneratorSet self;
    self.insert(s);
    auto const s_blockers = g.all() - g.neighbours(s) - self;
    if (s_blockers.empty()) {
      raise(ErrorCode::NO_BLOCKER,
            g.label(s) + " commutes with every generator");
    }
    auto const s1 = s_blockers.front();
    GeneratorSet pair = self;
    pair.insert(s1);

    if (auto const type1 = s_blockers - pair; !type1.empty()) {
      return {s, s1, type1.front(), BlockerVariant::TYPE1};
    }
    if (auto const type2 = g.all() - g.neighbours(s1) - pair; !type2.empty()) {
      return {s, s1, type2.front(), BlockerVariant::TYPE2};
    }
    raise(ErrorCode::NO_BLOCKER,
          "no generator outside {" + g.label(s) + " " + g.label(s1)
              + "} fails to commute with either");
  }

  word_type multiplier_word(BlockerChoice const& c, std::size_t n) {
    if (n < 2) {
      raise(ErrorCode::EXPONENT_TOO_SMALL,
            "multiplier exponent must be at least 2, got " + std::to_string(n));
    }
    word_type const period
        = c.variant == BlockerVariant::TYPE1
              ? word_type{c.s_double_prime, c.s, c.s_prime}
              : word_type{c.s_prime, c.s_double_prime, c.s, c.s_prime,
                          c.s_double_prime};
    word_type out;
    out.reserve(period.size() * n);
    for (std::size_t i = 0; i < n; ++i) {
      out.insert(out.end(), period.begin(), period.end());
    }
    return out;
  }

  std::pair<ReducedWord, MultiplierTrace>
  fix_missing(DefiningGraph const& g, word_type const& w, std::size_t n) {
    MultiplierTrace trace;
    trace.exponent = n;
    auto current   = reduce(g, w);
    auto supp      = support(g, current.letters());
    while (supp != g.all()) {
      auto const s          = (g.all() - supp).front();
      auto const choice     = choose_blockers(g, s);
      auto       multiplier = multiplier_word(choice, n);
      auto       next       = reduce(g, concat(multiplier, current.letters()));
      auto const next_supp  = support(g, next.letters());
      append_step(trace,
                  {RepairPhase::MISSING_GENERATOR, s, choice,
                   std::move(multiplier), next});
      if (!next_supp.contains(s) || !supp.is_subset_of(next_supp)) {
        violation(g, trace,
                  "support went from " + set_string(g, supp) + " to "
                      + set_string(g, next_supp));
      }
      current = std::move(next);
      supp    = next_supp;
    }
    return {std::move(current), std::move(trace)};
  }

  std::pair<ReducedWord, MultiplierTrace>
  make_good(DefiningGraph const& g, word_type const& w, std::size_t n) {
    MultiplierTrace trace;
    trace.exponent = n;
    auto current   = reduce(g, w);
    auto bad       = bad_set(g, current).bad_set;
    while (!bad.empty()) {
      auto const s          = bad.front();
      auto const choice     = choose_blockers(g, s);
      auto       multiplier = multiplier_word(choice, n);
      auto       next       = reduce(g, concat(multiplier, current.letters()));
      auto const report     = goodness(g, next);
      append_step(trace,
                  {RepairPhase::BAD_GENERATOR, s, choice, std::move(multiplier),
                   next});
      if (!report.full_support) {
        violation(g, trace, "a generator disappeared while repairing " + g.label(s));
      }
      if (!report.bad_set.is_subset_of(bad) || report.bad_set == bad) {
        violation(g, trace,
                  "bad set went from " + set_string(g, bad) + " to "
                      + set_string(g, report.bad_set));
      }
      current = std::move(next);
      bad     = report.bad_set;
    }
    return {std::move(current), std::move(trace)};
  }

  std::pair<ReducedWord, MultiplierTrace>
  essentialize(DefiningGraph const&               g,
               word_type const&                   w,
               std::optional<SubgroupSpec> const& spec) {
    std::size_t n = 2;
    if (spec) {
      if (!(spec->ambient() == g)) {
        raise(ErrorCode::DIMENSION_MISMATCH,
              "subgroup is defined over a different graph");
      }
      if (!member(*spec, w)) {
        raise(ErrorCode::NOT_IN_SUBGROUP,
              "'" + render_word(g, w) + "' is not in the subgroup");
      }
      n = std::max<std::size_t>(2, index_and_exponent(*spec).exponent);
    }
    auto [full, missing_trace] = fix_missing(g, w, n);
    auto [good, bad_trace]     = make_good(g, full.letters(), n);

    MultiplierTrace trace = std::move(missing_trace);
    for (auto& step : bad_trace.steps) {
      append_step(trace, std::move(step));
    }
    if (!is_good_essential(g, good.letters())) {
      violation(g, trace, "final word is not s-good for every s");
    }
    if (spec) {
      for (auto const& step : trace.steps) {
        if (!member(*spec, step.multiplier)) {
          violation(g, trace,
                    "multiplier " + render_word(g, step.multiplier)
                        + " is not in the subgroup");
        }
      }
      if (!member(*spec, good.letters())) {
        violation(g, trace, "final word left the subgroup");
      }
    }
    return {std::move(good), std::move(trace)};
  }

}  // namespace coxrank
