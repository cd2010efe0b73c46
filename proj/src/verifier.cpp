#include "coxrank/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "coxrank/cancellator.hpp"
#include "coxrank/error.hpp"
#include "coxrank/essential.hpp"

namespace coxrank {

  namespace {

    using json  = nlohmann::ordered_json;
    using clock = std::chrono::steady_clock;

    struct ShortlexLess {
      bool operator()(word_type const& a, word_type const& b) const noexcept {
        return shortlex_less(a, b);
      }
    };

    // Runs fn(i) for i in [0, n) on up to `jobs` threads; results are
    // returned in index order.
    template <typename Fn>
    auto parallel_map(std::size_t n, unsigned jobs, Fn&& fn)
        -> std::vector<decltype(fn(std::size_t{}))> {
      std::vector<decltype(fn(std::size_t{}))> out(n);
      jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
      if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
          out[i] = fn(i);
        }
        return out;
      }
      std::vector<std::exception_ptr> errors(jobs);
      {
        std::vector<std::jthread> workers;
        for (unsigned j = 0; j < jobs; ++j) {
          workers.emplace_back([&, j] {
            try {
              for (std::size_t i = j; i < n; i += jobs) {
                out[i] = fn(i);
              }
            } catch (...) {
              errors[j] = std::current_exception();
            }
          });
        }
      }
      for (auto const& e : errors) {
        if (e) {
          std::rethrow_exception(e);
        }
      }
      return out;
    }

    class ReportBuilder {
     public:
      ReportBuilder(std::string check, VerifyOptions const& vopts)
          : _vopts(vopts), _start(clock::now()) {
        _report.check = std::move(check);
      }

      VerificationReport& report() {
        return _report;
      }

      void fail(json record) {
        ++_report.failure_count;
        _failures.push_back(std::move(record));
      }

      // Sorts failures shortlex by `key`, truncates, sets the verdict.
      VerificationReport finish(std::function<word_type(json const&)> key = {}) {
        if (key) {
          std::stable_sort(_failures.begin(),
                           _failures.end(),
                           [&key](json const& a, json const& b) {
                             return shortlex_less(key(a), key(b));
                           });
        }
        if (_report.total_cases == 0) {
          ++_report.failure_count;
          _failures.insert(_failures.begin(),
                           json{{"reason", "EMPTY_DOMAIN"},
                                {"expected", "at least one case"},
                                {"observed", "no cases"}});
        }
        if (_failures.size() > max_recorded_failures) {
          _failures.resize(max_recorded_failures);
        }
        _report.failures = std::move(_failures);
        _report.verdict
            = _report.failure_count == 0 ? Verdict::PASS : Verdict::FAIL;
        if (_vopts.timing) {
          _report.elapsed_ms
              = std::chrono::duration<double, std::milli>(clock::now() - _start)
                    .count();
        }
        return std::move(_report);
      }

     private:
      VerifyOptions      _vopts;
      clock::time_point  _start;
      VerificationReport _report;
      std::vector<json>  _failures;
    };

    void require_irreducible_nonaffine(DefiningGraph const& g) {
      auto const factors = join_decompose(g);
      if (factors.size() != 1) {
        raise(ErrorCode::PRECONDITION_CLASS,
              "graph is a join of " + std::to_string(factors.size())
                  + " factors; the group is reducible");
      }
      auto const cls = classify_factor(factors.front());
      if (cls.kind != FactorKind::IRREDUCIBLE_NONAFFINE) {
        raise(ErrorCode::PRECONDITION_CLASS,
              "group is " + std::string(to_string(cls.kind))
                  + ", not irreducible non-affine");
      }
    }

    std::vector<std::string> set_labels(DefiningGraph const& g, GeneratorSet set) {
      std::vector<std::string> out;
      for (auto s : set.members()) {
        out.push_back(g.label(s));
      }
      return out;
    }

    word_type parse_key(DefiningGraph const& g, json const& record, char const* field) {
      return parse_word(g, record.at(field).get<std::string>());
    }

    ////////////////////////////////////////////////////////////////////////
    // Rewriting-closure oracle for the word problem
    ////////////////////////////////////////////////////////////////////////

    // All words of length <= max_len over n letters, indexed by length then
    // little-endian base-n digits.
    class WordIndex {
     public:
      WordIndex(std::size_t n, std::size_t max_len) : _n(n) {
        std::uint64_t power = 1;
        _offsets.push_back(0);
        for (std::size_t len = 0; len <= max_len; ++len) {
          _offsets.push_back(_offsets.back() + power);
          power *= n;
          if (_offsets.back() > (std::uint64_t(1) << 26)) {
            raise(ErrorCode::RADIUS_EXCEEDS_CAP,
                  "rewriting closure over words of length <= "
                      + std::to_string(max_len) + " is too large");
          }
        }
      }

      std::uint64_t size() const {
        return _offsets.back();
      }
      std::uint64_t count_up_to(std::size_t len) const {
        return _offsets[len + 1];
      }

      std::uint64_t encode(word_type const& w) const {
        std::uint64_t code = 0;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
          code = code * _n + *it;
        }
        return _offsets[w.size()] + code;
      }

      word_type decode(std::uint64_t id) const {
        std::size_t len = 0;
        while (_offsets[len + 1] <= id) {
          ++len;
        }
        auto      code = id - _offsets[len];
        word_type w(len);
        for (std::size_t i = 0; i < len; ++i) {
          w[i] = static_cast<letter_type>(code % _n);
          code /= _n;
        }
        return w;
      }

     private:
      std::uint64_t              _n;
      std::vector<std::uint64_t> _offsets;
    };

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), std::uint32_t(0));
      }
      std::uint32_t find(std::uint32_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }
      void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          _parent[std::max(a, b)] = std::min(a, b);
        }
      }

     private:
      std::vector<std::uint32_t> _parent;
    };

    // Class representative of every word of length <= max_len under the
    // moves st <-> ts (s, t adjacent) and ss <-> empty.
    std::vector<std::uint32_t> closure_classes(DefiningGraph const& g,
                                               WordIndex const&     index) {
      UnionFind uf(index.size());
      for (std::uint64_t id = 0; id < index.size(); ++id) {
        auto w = index.decode(id);
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
          if (w[i] == w[i + 1]) {
            word_type shorter = w;
            shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(i),
                          shorter.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            uf.unite(static_cast<std::uint32_t>(id),
                     static_cast<std::uint32_t>(index.encode(shorter)));
          } else if (g.adjacent(w[i], w[i + 1])) {
            std::swap(w[i], w[i + 1]);
            uf.unite(static_cast<std::uint32_t>(id),
                     static_cast<std::uint32_t>(index.encode(w)));
            std::swap(w[i], w[i + 1]);
          }
        }
      }
      std::vector<std::uint32_t> cls(index.size());
      for (std::uint64_t id = 0; id < index.size(); ++id) {
        cls[id] = uf.find(static_cast<std::uint32_t>(id));
      }
      return cls;
    }

    // A random word of length <= max_len reached from w by legal moves.
    word_type random_rewrite(DefiningGraph const& g,
                             word_type            w,
                             std::size_t          max_len,
                             std::size_t          moves,
                             std::mt19937_64&     rng) {
      for (std::size_t m = 0; m < moves; ++m) {
        std::vector<std::pair<int, std::size_t>> options;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
          if (w[i] == w[i + 1]) {
            options.emplace_back(1, i);
          } else if (g.adjacent(w[i], w[i + 1])) {
            options.emplace_back(0, i);
          }
        }
        if (w.size() + 2 <= max_len) {
          for (std::size_t i = 0; i <= w.size(); ++i) {
            options.emplace_back(2, i);
          }
        }
        if (options.empty()) {
          break;
        }
        auto const [kind, i]
            = options[std::uniform_int_distribution<std::size_t>(
                0, options.size() - 1)(rng)];
        auto const at = w.begin() + static_cast<std::ptrdiff_t>(i);
        if (kind == 0) {
          std::swap(w[i], w[i + 1]);
        } else if (kind == 1) {
          w.erase(at, at + 2);
        } else {
          auto const s = static_cast<letter_type>(
              std::uniform_int_distribution<std::size_t>(0, g.size() - 1)(rng));
          w.insert(at, 2, s);
        }
      }
      return w;
    }

    word_type random_word(std::size_t n, std::size_t max_len, std::mt19937_64& rng) {
      auto const len
          = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
      std::uniform_int_distribution<std::size_t> letter(0, n - 1);
      word_type                                  w(len);
      for (auto& s : w) {
        s = static_cast<letter_type>(letter(rng));
      }
      return w;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Parity invariance
  ////////////////////////////////////////////////////////////////////////

  VerificationReport verify_parity_invariance(DefiningGraph const&      g,
                                              ParityCheckOptions const& opts,
                                              VerifyOptions const&      vopts) {
    ReportBuilder b("parity", vopts);
    auto&         r = b.report();
    r.seed          = opts.seed;
    r.params        = {{"trials", opts.trials},
                       {"maxLen", opts.max_length},
                       {"movesPerTrial", opts.moves_per_trial},
                       {"injectLetterDeletion", opts.inject_letter_deletion}};

    std::mt19937_64 rng(opts.seed);
    std::size_t     moves_applied = 0;
    for (std::size_t trial = 0; trial < opts.trials; ++trial) {
      auto       w        = random_word(g.size(), opts.max_length, rng);
      auto const start    = w;
      auto const expected = parity_vector(g, w);
      bool       corrupted = false;
      for (std::size_t m = 0; m < opts.moves_per_trial; ++m) {
        if (opts.inject_letter_deletion && !corrupted && !w.empty()) {
          auto const i = std::uniform_int_distribution<std::size_t>(
              0, w.size() - 1)(rng);
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
          corrupted = true;
        } else {
          // one legal move; bound the length so words stay desk-sized
          w = random_rewrite(g, std::move(w), opts.max_length + 2 * opts.moves_per_trial,
                             1, rng);
        }
        ++moves_applied;
        auto const observed = parity_vector(g, w);
        if (observed != expected) {
          b.fail({{"trial", trial},
                  {"move", m},
                  {"word", render_word(g, start)},
                  {"after", render_word(g, w)},
                  {"expected", expected.to_string()},
                  {"observed", observed.to_string()}});
          break;
        }
      }
      ++r.total_cases;
    }
    r.details = {{"movesApplied", moves_applied}};
    return b.finish();
  }

  ////////////////////////////////////////////////////////////////////////
  // Word problem
  ////////////////////////////////////////////////////////////////////////

  VerificationReport verify_word_problem(DefiningGraph const&      g,
                                         WordProblemOptions const& opts,
                                         VerifyOptions const&      vopts) {
    auto const longest = std::max(opts.max_length,
                                  opts.samples > 0 ? opts.sample_max_length : 0);
    if (longest > opts.cap) {
      raise(ErrorCode::RADIUS_EXCEEDS_CAP,
            "word length " + std::to_string(longest) + " exceeds cap "
                + std::to_string(opts.cap));
    }
    ReportBuilder b("wordproblem", vopts);
    auto&         r = b.report();
    r.params        = {{"maxLen", opts.max_length},
                       {"closureLen", longest + 2},
                       {"samples", opts.samples},
                       {"sampleMaxLen", opts.sample_max_length}};
    if (opts.samples > 0) {
      r.seed = opts.seed;
    }

    WordIndex const index(g.size(), longest + 2);
    auto const      cls = closure_classes(g, index);

    // normal form of every word of length <= longest, as a dense id
    auto const                                 n_words = index.count_up_to(longest);
    std::map<word_type, std::uint32_t>         nf_ids;
    std::vector<std::uint32_t>                 nf_id(n_words);
    {
      auto const nfs = parallel_map(n_words, vopts.jobs, [&](std::size_t id) {
        return normal_form(g, index.decode(id)).letters();
      });
      for (std::size_t id = 0; id < n_words; ++id) {
        nf_id[id] = nf_ids.try_emplace(nfs[id], static_cast<std::uint32_t>(nf_ids.size()))
                        .first->second;
      }
    }

    auto const check_pair = [&](std::uint64_t a, std::uint64_t c) {
      bool const oracle = cls[a] == cls[c];
      bool const nf     = nf_id[a] == nf_id[c];
      ++r.total_cases;
      if (oracle != nf) {
        b.fail({{"word", render_word(g, index.decode(a))},
                {"word2", render_word(g, index.decode(c))},
                {"expected", oracle},
                {"observed", nf}});
      }
    };

    auto const exhaustive = index.count_up_to(opts.max_length);
    for (std::uint64_t a = 0; a < exhaustive; ++a) {
      for (std::uint64_t c = a + 1; c < exhaustive; ++c) {
        check_pair(a, c);
      }
    }
    auto const exhaustive_pairs = r.total_cases;

    std::mt19937_64 rng(opts.seed);
    std::size_t     equal_samples = 0;
    for (std::size_t i = 0; i < opts.samples; ++i) {
      auto const w1 = random_word(g.size(), opts.sample_max_length, rng);
      word_type  w2;
      if (rng() & 1U) {
        w2 = random_rewrite(g, w1, opts.sample_max_length, 8, rng);
      } else {
        w2 = random_word(g.size(), opts.sample_max_length, rng);
      }
      auto const a = index.encode(w1);
      auto const c = index.encode(w2);
      equal_samples += cls[a] == cls[c];
      check_pair(a, c);
    }

    // number of elements of length <= k, read off the oracle classes
    json ball_sizes = json::array();
    for (std::size_t k = 0; k <= longest; ++k) {
      std::set<std::uint32_t> classes(cls.begin(),
                                      cls.begin()
                                          + static_cast<std::ptrdiff_t>(
                                              index.count_up_to(k)));
      ball_sizes.push_back(classes.size());
    }
    r.details = {{"exhaustivePairs", exhaustive_pairs},
                 {"samplePairs", opts.samples},
                 {"sampleEqualPairs", equal_samples},
                 {"oracleBallSizes", ball_sizes}};
    return b.finish([&g](json const& f) { return parse_key(g, f, "word"); });
  }

  ////////////////////////////////////////////////////////////////////////
  // Covering by products of distinct generators
  ////////////////////////////////////////////////////////////////////////

  VerificationReport verify_covering(DefiningGraph const& g,
                                     std::size_t          radius,
                                     VerifyOptions const& vopts) {
    require_irreducible_nonaffine(g);
    ReportBuilder b("covering", vopts);
    auto&         r = b.report();
    r.params        = {{"radius", radius}};
    r.notes.push_back(
        "assumed: essential elements have virtually infinite cyclic "
        "centralizer, hence lie in A_1(W); not verified here");

    auto const ball = enumerate_ball(g, radius, std::max(radius, default_ball_cap));

    struct Outcome {
      word_type alpha;
      bool      in_products_of_distinct;
      bool      all_odd;
    };
    auto const outcomes = parallel_map(ball.size(), vopts.jobs, [&](std::size_t i) {
      auto const& w     = ball[i].letters();
      auto        alpha = find_even_completion(g, w);
      bool const  distinct
          = std::adjacent_find(alpha.begin(), alpha.end(), std::greater_equal<>())
            == alpha.end();
      bool const odd = is_all_odd_essential(g, concat(alpha, w));
      return Outcome{std::move(alpha), distinct, odd};
    });

    std::map<word_type, std::size_t, ShortlexLess> histogram;
    std::size_t                                    covered = 0;
    for (std::size_t i = 0; i < ball.size(); ++i) {
      auto const& o = outcomes[i];
      ++r.total_cases;
      ++histogram[o.alpha];
      if (o.in_products_of_distinct && o.all_odd) {
        ++covered;
      } else {
        b.fail({{"word", render_word(g, ball[i].letters())},
                {"multiplier", render_word(g, o.alpha)},
                {"expected", "multiplier is a product of distinct generators "
                             "and multiplier·word is all-odd"},
                {"observed", json{{"productOfDistinct", o.in_products_of_distinct},
                                  {"allOdd", o.all_odd}}}});
      }
    }
    json hist = json::array();
    for (auto const& [alpha, count] : histogram) {
      hist.push_back({{"multiplier", render_word(g, alpha)}, {"count", count}});
    }
    r.details = {{"elements", ball.size()},
                 {"covered", covered},
                 {"distinctMultipliers", histogram.size()},
                 {"multiplierSetBound", std::uint64_t(1) << g.size()},
                 {"multipliers", hist}};
    return b.finish([&g](json const& f) { return parse_key(g, f, "word"); });
  }

  ////////////////////////////////////////////////////////////////////////
  // Covering of a finite-index subgroup
  ////////////////////////////////////////////////////////////////////////

  VerificationReport verify_subgroup_covering(DefiningGraph const& g,
                                              SubgroupSpec const&  spec,
                                              std::size_t          radius,
                                              VerifyOptions const& vopts) {
    require_irreducible_nonaffine(g);
    auto const quotient = index_and_exponent(spec);
    ReportBuilder b("subgroup-covering", vopts);
    auto&         r = b.report();
    json          basis = json::array();
    for (auto const& v : spec.basis()) {
      basis.push_back(v.to_string());
    }
    r.params = {{"radius", radius},
                {"basis", basis},
                {"index", quotient.index},
                {"exponent", quotient.exponent}};
    r.notes.push_back(
        "assumed: essential elements have virtually infinite cyclic "
        "centralizer, hence lie in A_1(T); not verified here");

    auto const members
        = enumerate_members(spec, radius, std::max(radius, default_ball_cap));

    struct Outcome {
      std::optional<std::string> error;
      word_type                  total;
      std::size_t                missing_steps = 0;
      std::size_t                bad_steps     = 0;
      std::size_t                bad_after_fix = 0;
      bool                       good          = false;
      bool                       in_subgroup   = false;
    };
    auto const outcomes = parallel_map(members.size(), vopts.jobs, [&](std::size_t i) {
      Outcome o;
      try {
        auto const& t              = members[i].letters();
        auto [final_word, trace]   = essentialize(g, t, spec);
        o.total                    = trace.total_multiplier;
        o.missing_steps            = trace.count(RepairPhase::MISSING_GENERATOR);
        o.bad_steps                = trace.count(RepairPhase::BAD_GENERATOR);
        auto const fixed           = o.missing_steps == 0
                                         ? members[i]
                                         : trace.steps[o.missing_steps - 1].result;
        o.bad_after_fix            = bad_set(g, fixed).bad_set.size();
        o.good                     = is_good_essential(g, final_word.letters());
        o.in_subgroup              = member(spec, final_word.letters());
      } catch (Error const& e) {
        o.error = e.what();
      }
      return o;
    });

    std::set<word_type, ShortlexLess> multipliers;
    std::size_t                       max_trace = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      auto const& o = outcomes[i];
      ++r.total_cases;
      auto const word = render_word(g, members[i].letters());
      if (o.error) {
        b.fail({{"word", word}, {"expected", "essentialized"}, {"observed", *o.error}});
        continue;
      }
      multipliers.insert(o.total);
      max_trace = std::max(max_trace, o.missing_steps + o.bad_steps);
      bool const steps_ok
          = o.missing_steps <= g.size() && o.bad_steps <= o.bad_after_fix;
      if (!o.good || !o.in_subgroup || !steps_ok) {
        b.fail({{"word", word},
                {"expected", "good-essential member with <= |S| missing steps "
                             "and <= |B| bad steps"},
                {"observed", json{{"goodEssential", o.good},
                                  {"member", o.in_subgroup},
                                  {"missingSteps", o.missing_steps},
                                  {"badSteps", o.bad_steps},
                                  {"badSetSize", o.bad_after_fix}}}});
      }
    }
    r.details = {{"members", members.size()},
                 {"distinctMultipliers", multipliers.size()},
                 {"maxTraceLength", max_trace}};
    return b.finish([&g](json const& f) { return parse_key(g, f, "word"); });
  }

  ////////////////////////////////////////////////////////////////////////
  // Cancellator uniformity
  ////////////////////////////////////////////////////////////////////////

  VerificationReport
  verify_cancellator_uniformity(DefiningGraph const& g,
                                SubgroupSpec const&  spec,
                                std::size_t          radius,
                                VerifyOptions const& vopts) {
    require_irreducible_nonaffine(g);
    ReportBuilder b("uniformity", vopts);
    auto&         r = b.report();
    r.params        = {{"radius", radius}};
    r.notes.push_back(
        "a FAIL is an empirical finding about whether one cancellator serves "
        "every word with the same bad set, not a defect in the build");

    auto const quotient = index_and_exponent(spec);
    auto const n        = std::max<std::size_t>(2, quotient.exponent);

    // bad set -> members with full support, in shortlex order
    std::map<std::uint64_t, std::vector<ReducedWord>> classes;
    std::size_t                                       skipped = 0;
    for (auto& t : enumerate_members(spec, radius, std::max(radius, default_ball_cap))) {
      auto const report = goodness(g, t);
      if (!report.full_support) {
        ++skipped;
        continue;
      }
      classes[report.bad_set.mask()].push_back(std::move(t));
    }

    json per_class = json::array();
    for (auto const& [mask, words] : classes) {
      auto const bad                 = GeneratorSet(mask);
      auto const [first_good, trace] = make_good(g, words.front().letters(), n);
      auto const& cancellator        = trace.total_multiplier;
      std::size_t failures           = 0;
      auto const  results = parallel_map(words.size(), vopts.jobs, [&](std::size_t i) {
        return goodness(g, reduce(g, concat(cancellator, words[i].letters())));
      });
      for (std::size_t i = 0; i < words.size(); ++i) {
        ++r.total_cases;
        auto const& rep = results[i];
        if (!rep.full_support || !rep.bad_set.empty()) {
          ++failures;
          b.fail({{"word", render_word(g, words[i].letters())},
                  {"badSet", set_labels(g, bad)},
                  {"cancellator", render_word(g, cancellator)},
                  {"expected", "s-good for every s"},
                  {"observed", json{{"fullSupport", rep.full_support},
                                    {"badSet", set_labels(g, rep.bad_set)}}}});
        }
      }
      per_class.push_back({{"badSet", set_labels(g, bad)},
                           {"size", words.size()},
                           {"representative", render_word(g, words.front().letters())},
                           {"cancellator", render_word(g, cancellator)},
                           {"failures", failures},
                           {"verdict", failures == 0 ? "PASS" : "FAIL"}});
    }
    r.details = {{"classes", per_class}, {"skippedWithoutFullSupport", skipped}};
    return b.finish([&g](json const& f) { return parse_key(g, f, "word"); });
  }

  ////////////////////////////////////////////////////////////////////////
  // Join lemma
  ////////////////////////////////////////////////////////////////////////

  VerificationReport verify_join_lemma(std::size_t          max_vertices,
                                       VerifyOptions const& vopts) {
    if (max_vertices > 6) {
      raise(ErrorCode::RADIUS_EXCEEDS_CAP,
            "join lemma check supports at most 6 vertices, got "
                + std::to_string(max_vertices));
    }
    ReportBuilder b("joinlemma", vopts);
    auto&         r = b.report();
    r.params        = {{"maxVertices", max_vertices}};

    json per_order = json::array();
    for (std::size_t k = 1; k <= max_vertices; ++k) {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < k; ++i) {
        labels.push_back("v" + std::to_string(i));
      }
      std::vector<DefiningGraph::edge_type> pairs;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          pairs.emplace_back(static_cast<letter_type>(i), static_cast<letter_type>(j));
        }
      }
      std::size_t const graphs = std::size_t(1) << pairs.size();
      struct Outcome {
        bool join, prime_join;
      };
      auto const outcomes = parallel_map(graphs, vopts.jobs, [&](std::size_t mask) {
        std::vector<DefiningGraph::edge_type> edges;
        for (std::size_t e = 0; e < pairs.size(); ++e) {
          if ((mask >> e) & 1U) {
            edges.push_back(pairs[e]);
          }
        }
        DefiningGraph const g(labels, edges);
        return Outcome{is_join(g), is_join(dj_prime(g))};
      });
      std::size_t joins = 0;
      for (std::size_t mask = 0; mask < graphs; ++mask) {
        ++r.total_cases;
        joins += outcomes[mask].join;
        if (outcomes[mask].join != outcomes[mask].prime_join) {
          json edges = json::array();
          for (std::size_t e = 0; e < pairs.size(); ++e) {
            if ((mask >> e) & 1U) {
              edges.push_back(labels[pairs[e].first] + " " + labels[pairs[e].second]);
            }
          }
          b.fail({{"vertices", k},
                  {"edges", edges},
                  {"expected", outcomes[mask].join},
                  {"observed", outcomes[mask].prime_join}});
        }
      }
      per_order.push_back({{"vertices", k}, {"graphs", graphs}, {"joins", joins}});
    }
    r.details = {{"orders", per_order}};
    return b.finish();
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificate soundness
  ////////////////////////////////////////////////////////////////////////

  VerificationReport
  verify_essential_certificates(DefiningGraph const&          g,
                                std::size_t                   radius,
                                std::size_t                   conj_radius,
                                VerifyOptions const&          vopts,
                                std::vector<word_type> const& extra_certified) {
    ReportBuilder b("certificates", vopts);
    auto&         r = b.report();
    r.params        = {{"radius", radius}, {"conjRadius", conj_radius}};
    r.notes.push_back(
        "no counterexample within the conjugator radius is evidence, not proof");

    auto const ball        = enumerate_ball(g, radius);
    auto const conjugators = enumerate_ball(g, conj_radius);

    struct Candidate {
      word_type   word;
      bool        all_odd;
      bool        good;
      bool        injected;
    };
    std::vector<Candidate> candidates;
    std::size_t            all_odd = 0, good = 0, both = 0, uncertified = 0;
    for (auto const& w : ball) {
      bool const odd = is_all_odd_essential(g, w.letters());
      bool const gd  = is_good_essential(g, w.letters());
      all_odd += odd;
      good += gd;
      both += odd && gd;
      if (odd || gd) {
        candidates.push_back({w.letters(), odd, gd, false});
      } else {
        ++uncertified;
      }
    }
    for (auto const& w : extra_certified) {
      check_word(g, w);
      candidates.push_back({w, false, false, true});
    }

    auto const results = parallel_map(candidates.size(), vopts.jobs, [&](std::size_t i) {
      return falsify_essential(g, candidates[i].word, conjugators, conj_radius);
    });
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      ++r.total_cases;
      auto const& res = results[i];
      if (res.counterexample) {
        b.fail({{"word", render_word(g, candidates[i].word)},
                {"certifiedBy", candidates[i].injected
                                    ? "injected"
                                    : (candidates[i].all_odd ? "all-odd" : "s-good")},
                {"expected", "NO_COUNTEREXAMPLE"},
                {"observed", json{{"conjugator", render_word(g, res.conjugator)},
                                  {"parabolic", set_labels(g, res.parabolic)}}}});
      }
    }
    r.details = {{"elements", ball.size()},
                 {"certifiedAllOdd", all_odd},
                 {"certifiedGood", good},
                 {"certifiedBoth", both},
                 {"uncertified", uncertified},
                 {"conjugators", conjugators.size()}};
    return b.finish([&g](json const& f) { return parse_key(g, f, "word"); });
  }

}  // namespace coxrank
