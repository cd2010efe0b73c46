#include "coxrank/essential.hpp"

#include "coxrank/error.hpp"

namespace coxrank {

  namespace {

    bool has_blocker(DefiningGraph const& g, word_type const& block, letter_type s) {
      for (auto t : block) {
        if (!g.commute(s, t)) {
          return true;
        }
      }
      return false;
    }

    void require_present(DefiningGraph const&    g,
                         std::vector<word_type> const& blocks,
                         letter_type             s) {
      if (blocks.empty()) {
        raise(ErrorCode::GENERATOR_ABSENT,
              "generator " + g.label(s) + " does not occur in the word");
      }
    }

    bool minimal_from_blocks(DefiningGraph const&          g,
                             std::vector<word_type> const& blocks,
                             letter_type                   s) {
      for (std::size_t i = 1; i + 1 < blocks.size(); ++i) {
        if (!has_blocker(g, blocks[i], s)) {
          return false;
        }
      }
      return true;
    }

    bool good_from_blocks(DefiningGraph const&          g,
                          std::vector<word_type> const& blocks,
                          letter_type                   s) {
      if (blocks.size() == 2) {
        return true;
      }
      return minimal_from_blocks(g, blocks, s)
             && (has_blocker(g, blocks.back(), s)
                 || has_blocker(g, blocks.front(), s));
    }

  }  // namespace

  std::string_view to_string(GoodStatus status) noexcept {
    switch (status) {
      case GoodStatus::GOOD:
        return "GOOD";
      case GoodStatus::NOT_MINIMAL_IMPOSSIBLE:
        return "NOT_MINIMAL_IMPOSSIBLE";
      case GoodStatus::NOT_GOOD:
        return "NOT_GOOD";
      case GoodStatus::ABSENT:
        return "ABSENT";
    }
    return "UNKNOWN";
  }

  std::vector<word_type> s_blocks(word_type const& w, letter_type s) {
    std::vector<word_type> blocks(1);
    for (auto t : w) {
      if (t == s) {
        blocks.emplace_back();
      } else {
        blocks.back().push_back(t);
      }
    }
    if (blocks.size() == 1) {
      blocks.clear();
    }
    return blocks;
  }

  bool is_s_minimal(DefiningGraph const& g, ReducedWord const& w, letter_type s) {
    auto const blocks = s_blocks(w.letters(), s);
    require_present(g, blocks, s);
    return minimal_from_blocks(g, blocks, s);
  }

  bool is_s_good(DefiningGraph const& g, ReducedWord const& w, letter_type s) {
    auto const blocks = s_blocks(w.letters(), s);
    require_present(g, blocks, s);
    return good_from_blocks(g, blocks, s);
  }

  GoodnessReport goodness(DefiningGraph const& g, ReducedWord const& w) {
    check_word(g, w.letters());
    GoodnessReport report;
    report.full_support = true;
    report.per_generator.resize(g.size(), GoodStatus::ABSENT);
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto const s      = static_cast<letter_type>(i);
      auto const blocks = s_blocks(w.letters(), s);
      if (blocks.empty()) {
        report.full_support = false;
        continue;
      }
      if (!minimal_from_blocks(g, blocks, s)) {
        report.per_generator[i] = GoodStatus::NOT_MINIMAL_IMPOSSIBLE;
      } else if (good_from_blocks(g, blocks, s)) {
        report.per_generator[i] = GoodStatus::GOOD;
      } else {
        report.per_generator[i] = GoodStatus::NOT_GOOD;
        report.bad_set.insert(s);
      }
    }
    return report;
  }

  GoodnessReport bad_set(DefiningGraph const& g, ReducedWord const& w) {
    auto report = goodness(g, w);
    if (!report.full_support) {
      std::string missing;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (report.per_generator[i] == GoodStatus::ABSENT) {
          missing += (missing.empty() ? "" : " ") + g.label(static_cast<letter_type>(i));
        }
      }
      raise(ErrorCode::MISSING_GENERATORS, "missing generators {" + missing + "}");
    }
    return report;
  }

  bool is_all_odd_essential(DefiningGraph const& g, word_type const& w) {
    return parity_vector(g, w).all_ones();
  }

  bool is_good_essential(DefiningGraph const& g, word_type const& w) {
    auto const report = goodness(g, reduce(g, w));
    return report.full_support && report.bad_set.empty();
  }

  word_type find_even_completion(DefiningGraph const& g, word_type const& w) {
    auto const even = g.all() - parity_vector(g, w).odd();
    return even.members();
  }

  FalsifyResult falsify_essential(DefiningGraph const& g,
                                  word_type const&     w,
                                  std::size_t          conj_radius,
                                  std::size_t          cap) {
    return falsify_essential(g, w, enumerate_ball(g, conj_radius, cap), conj_radius);
  }

  FalsifyResult falsify_essential(DefiningGraph const&            g,
                                  word_type const&                w,
                                  std::vector<ReducedWord> const& conjugators,
                                  std::size_t                     conj_radius) {
    check_word(g, w);
    FalsifyResult result;
    result.radius = conj_radius;
    for (auto const& u : conjugators) {
      if (u.length() > conj_radius) {
        continue;
      }
      ++result.conjugators_tried;
      auto const conj = concat(concat(u.letters(), w), inverse(u.letters()));
      auto const supp = support(g, conj);
      if (supp != g.all()) {
        result.counterexample = true;
        result.conjugator     = u.letters();
        result.parabolic      = supp;
        break;
      }
    }
    return result;
  }

}  // namespace coxrank
