#include "doctest.h"

#include "coxrank/error.hpp"
#include "coxrank/essential.hpp"
#include "oracles.hpp"

namespace coxrank {

  using oracle::w;

  namespace {

    ReducedWord rw(DefiningGraph const& g, std::string const& text) {
      return ReducedWord::certify(g, w(g, text));
    }

    letter_type gen(DefiningGraph const& g, std::string const& label) {
      return *g.index_of(label);
    }

  }  // namespace

  TEST_CASE("s_blocks") {
    auto const g = oracle::c5();
    auto const blocks = s_blocks(w(g, "d c a c d"), gen(g, "c"));
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0] == w(g, "d"));
    CHECK(blocks[1] == w(g, "a"));
    CHECK(blocks[2] == w(g, "d"));
    CHECK(s_blocks(w(g, "a b"), gen(g, "a")).size() == 2);
  }

  TEST_CASE("is_s_minimal: examples") {
    auto const g = oracle::c5();
    CHECK(is_s_minimal(g, rw(g, "c a c"), gen(g, "c")));
    CHECK(is_s_minimal(g, rw(g, "a"), gen(g, "a")));
    try {
      is_s_minimal(g, rw(g, "a"), gen(g, "b"));
      FAIL("expected GENERATOR_ABSENT");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::GENERATOR_ABSENT);
    }
  }

  TEST_CASE("is_s_good: examples") {
    auto const g = oracle::c5();
    CHECK_FALSE(is_s_good(g, rw(g, "c a c"), gen(g, "c")));
    CHECK(is_s_good(g, rw(g, "a b c d e"), gen(g, "a")));
    // c: head "d", tail "d", both commute with c
    CHECK_FALSE(is_s_good(g, rw(g, "d c a c d"), gen(g, "c")));
    // d: head and tail empty
    CHECK_FALSE(is_s_good(g, rw(g, "d c a c d"), gen(g, "d")));
    // a-blocker c sits in the tail
    CHECK(is_s_good(g, rw(g, "a d a c"), gen(g, "a")));
  }

  TEST_CASE("bad_set: examples") {
    auto const g = oracle::c5();
    CHECK(bad_set(g, rw(g, "a b c d e")).bad_set.empty());

    auto const report = bad_set(g, rw(g, "a b c d e a"));
    CHECK(report.bad_set.members() == std::vector<letter_type>{gen(g, "a")});
    CHECK(report.full_support);
    CHECK(report.per_generator[gen(g, "a")] == GoodStatus::NOT_GOOD);
    CHECK(report.per_generator[gen(g, "c")] == GoodStatus::GOOD);

    try {
      bad_set(g, rw(g, "a b c d"));
      FAIL("expected MISSING_GENERATORS");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::MISSING_GENERATORS);
      CHECK(std::string(e.what()).find('e') != std::string::npos);
    }

    auto const partial = goodness(g, rw(g, "a b"));
    CHECK_FALSE(partial.full_support);
    CHECK(partial.per_generator[gen(g, "e")] == GoodStatus::ABSENT);
  }

  TEST_CASE("is_all_odd_essential and is_good_essential: examples") {
    auto const g = oracle::c5();
    CHECK(is_all_odd_essential(g, w(g, "a b c d e")));
    CHECK_FALSE(is_all_odd_essential(g, w(g, "a b")));
    CHECK(is_all_odd_essential(g, w(g, "a a a b c d e")));
    CHECK(is_good_essential(g, w(g, "a b c d e")));
    // the tail b d e of c contains the c-blocker e
    CHECK(is_good_essential(g, w(g, "c a c b d e")));
    // here head and tail of c hold only b and d, which commute with c
    CHECK_FALSE(is_good_essential(g, w(g, "c a e c b d")));
    CHECK_FALSE(is_good_essential(g, w(g, "a b")));
  }

  TEST_CASE("find_even_completion: examples") {
    auto const g = oracle::c5();
    CHECK(find_even_completion(g, w(g, "a b")) == w(g, "c d e"));
    CHECK(find_even_completion(g, w(g, "a b c d e")).empty());
    CHECK(find_even_completion(g, w(g, "a a")) == w(g, "a b c d e"));
  }

  TEST_CASE("find_even_completion always yields an all-odd product") {
    auto const      g = oracle::c5();
    std::mt19937_64 rng(3);
    for (int i = 0; i < 2000; ++i) {
      auto const v     = oracle::random_word(g.size(), 12, rng);
      auto const alpha = find_even_completion(g, v);
      CHECK(parity_vector(g, concat(alpha, v)).all_ones());
      CHECK(is_all_odd_essential(g, concat(alpha, v)));
      // product of distinct generators in vertex order
      for (std::size_t k = 1; k < alpha.size(); ++k) {
        CHECK(alpha[k - 1] < alpha[k]);
      }
    }
  }

  TEST_CASE("goodness agrees with the positional definition over ball(6)") {
    auto const g = oracle::c5();
    for (auto const& r : enumerate_ball(g, 6)) {
      auto const report = goodness(g, r);
      for (letter_type s = 0; s < g.size(); ++s) {
        bool const present = support(g, r.letters()).contains(s);
        if (!present) {
          CHECK(report.per_generator[s] == GoodStatus::ABSENT);
          continue;
        }
        CHECK(is_s_minimal(g, r, s));
        bool const expected = oracle::s_good_by_definition(g, r.letters(), s);
        CHECK(is_s_good(g, r, s) == expected);
        CHECK((report.per_generator[s] == GoodStatus::GOOD) == expected);
        if (report.full_support) {
          CHECK(report.bad_set.contains(s) == !expected);
        }
      }
    }
  }

  TEST_CASE("falsify_essential: examples") {
    auto const g = oracle::c5();
    auto const a = falsify_essential(g, w(g, "a"), 2);
    CHECK(a.counterexample);
    CHECK(a.conjugator.empty());
    CHECK(a.parabolic.members() == std::vector<letter_type>{0});
    CHECK(a.radius == 2);

    auto const full = falsify_essential(g, w(g, "a b c d e"), 3);
    CHECK_FALSE(full.counterexample);
    CHECK(full.conjugators_tried == enumerate_ball(g, 3).size());
  }

  TEST_CASE("falsify_essential: certified words survive (ball(6), conjugators ball(3))") {
    auto const  g           = oracle::c5();
    auto const  conjugators = enumerate_ball(g, 3);
    std::size_t certified   = 0;
    for (auto const& r : enumerate_ball(g, 6)) {
      if (is_all_odd_essential(g, r.letters()) || is_good_essential(g, r.letters())) {
        ++certified;
        CHECK_FALSE(falsify_essential(g, r.letters(), conjugators, 3).counterexample);
      }
    }
    CHECK(certified > 0);
  }

  TEST_CASE("falsify_essential finds the conjugated parabolic") {
    auto const g = oracle::c5();
    // support {a c} is already proper at u = e
    auto const result = falsify_essential(g, w(g, "c a c"), 1);
    CHECK(result.counterexample);
    CHECK(result.conjugator.empty());
    CHECK(result.parabolic.members() == std::vector<letter_type>{0, 2});
    // all-odd, so no conjugate drops a generator
    auto const cyc = falsify_essential(g, w(g, "a c e b d"), 2);
    CHECK_FALSE(cyc.counterexample);
  }

}  // namespace coxrank
