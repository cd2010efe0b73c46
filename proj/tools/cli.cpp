#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <list>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coxrank/cancellator.hpp"
#include "coxrank/classifier.hpp"
#include "coxrank/error.hpp"
#include "coxrank/essential.hpp"
#include "coxrank/graph.hpp"
#include "coxrank/report.hpp"
#include "coxrank/subgroup.hpp"
#include "coxrank/verifier.hpp"
#include "coxrank/word.hpp"

namespace coxrank::cli {

  using json = nlohmann::ordered_json;

  namespace {

    // Largest radius any subcommand will enumerate, whatever --cap says.
    constexpr std::size_t hard_cap = 12;

    struct UsageError : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    struct Config {
      std::string              graph;
      std::string              format = "json";
      std::string              kind   = "racg";
      std::string              variant;
      std::string              subgroup;
      std::vector<std::string> words;
      std::vector<std::string> assume_certified;
      std::size_t              radius         = 8;
      std::size_t              conj_radius    = 3;
      std::size_t              cap            = default_ball_cap;
      std::size_t              trials         = 10000;
      std::size_t              max_len        = 12;
      std::size_t              moves          = 16;
      std::size_t              samples        = 0;
      std::size_t              sample_max_len = 6;
      std::size_t              max_vertices   = 5;
      std::uint64_t            seed           = 1;
      unsigned                 jobs           = 1;
      bool                     timing         = false;
      bool                     inject_deletion = false;
    };

    struct Io {
      std::ostream& out;
    };

    struct Command {
      CLI::App*                            app = nullptr;
      Config                               cfg;
      std::function<int(Config const&, Io&)> action;
    };

    std::string read_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw UsageError("cannot read '" + path + "'");
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    DefiningGraph load_graph(std::string const& path) {
      if (path.empty()) {
        throw UsageError("--graph is required");
      }
      return parse_graph(read_file(path));
    }

    word_type the_word(DefiningGraph const& g, Config const& cfg) {
      if (cfg.words.size() != 1) {
        throw UsageError("exactly one --word is required");
      }
      return parse_word(g, cfg.words.front());
    }

    void check_radius(std::size_t radius, Config const& cfg) {
      if (radius > cfg.cap) {
        raise(ErrorCode::RADIUS_EXCEEDS_CAP,
              "radius " + std::to_string(radius) + " exceeds cap "
                  + std::to_string(cfg.cap));
      }
    }

    SubgroupSpec whole_group(DefiningGraph const& g) {
      std::vector<ParityVector> basis;
      for (std::size_t s = 0; s < g.size(); ++s) {
        basis.emplace_back(g.size(), std::uint64_t(1) << s);
      }
      return SubgroupSpec(g, basis);
    }

    // `commutator` and `whole` need --graph; a subgroup file names its own graph,
    // resolved relative to the file.
    std::pair<DefiningGraph, SubgroupSpec> load_subgroup(Config const& cfg) {
      if (cfg.subgroup == "commutator" || cfg.subgroup == "whole") {
        auto g    = load_graph(cfg.graph);
        auto spec = cfg.subgroup == "commutator" ? commutator_subgroup(g) : whole_group(g);
        return {std::move(g), std::move(spec)};
      }
      auto const file = parse_subgroup_file(read_file(cfg.subgroup));
      std::filesystem::path graph_path(file.graph_ref);
      if (graph_path.is_relative()) {
        graph_path = std::filesystem::path(cfg.subgroup).parent_path() / graph_path;
      }
      auto g = parse_graph(read_file(graph_path.string()));
      if (!cfg.graph.empty() && !(load_graph(cfg.graph) == g)) {
        raise(ErrorCode::DIMENSION_MISMATCH,
              "subgroup file refers to a different graph than --graph");
      }
      auto spec = make_subgroup(g, file);
      return {std::move(g), std::move(spec)};
    }

    json subgroup_json(SubgroupSpec const& spec, std::string const& selector) {
      json basis = json::array();
      for (auto const& v : spec.basis()) {
        basis.push_back(v.to_string());
      }
      auto const q = index_and_exponent(spec);
      return {{"selector", selector},
              {"basis", basis},
              {"index", q.index},
              {"exponent", q.exponent}};
    }

    int emit(Config const& cfg, Io& io, std::string_view command, json payload,
             std::string const& text) {
      if (cfg.format == "text") {
        io.out << text;
        if (!text.empty() && text.back() != '\n') {
          io.out << '\n';
        }
        return 0;
      }
      json out = {{"schemaVersion", schema_version}, {"command", command}};
      for (auto& [key, value] : payload.items()) {
        out[key] = std::move(value);
      }
      io.out << out.dump(2) << '\n';
      return 0;
    }

    int emit_report(Config const& cfg, Io& io, VerificationReport const& report) {
      emit(cfg, io, "verify", to_json(report), to_text(report));
      return report.verdict == Verdict::PASS ? 0 : 1;
    }

    VerifyOptions verify_options(Config const& cfg) {
      return {cfg.jobs, cfg.timing};
    }

    ////////////////////////////////////////////////////////////////////////
    // Actions
    ////////////////////////////////////////////////////////////////////////

    int do_classify(Config const& cfg, Io& io) {
      auto const g      = load_graph(cfg.graph);
      auto const report = cfg.kind == "raag" ? rank_raag(g) : rank_racg(g);
      return emit(cfg, io, "classify", to_json(report), to_text(report));
    }

    int do_reduce(Config const& cfg, Io& io, bool nf) {
      auto const g      = load_graph(cfg.graph);
      auto const w      = the_word(g, cfg);
      auto const result = nf ? normal_form(g, w) : reduce(g, w);
      auto const text   = render_word(g, result.letters());
      return emit(cfg, io, nf ? "nf" : "reduce",
                  {{"word", render_word(g, w)},
                   {"result", text},
                   {"length", result.length()}},
                  text);
    }

    int do_equal(Config const& cfg, Io& io) {
      auto const g = load_graph(cfg.graph);
      if (cfg.words.size() != 2) {
        throw UsageError("equal takes exactly two --word options");
      }
      auto const w1 = parse_word(g, cfg.words[0]);
      auto const w2 = parse_word(g, cfg.words[1]);
      bool const eq = equal(g, w1, w2);
      return emit(cfg, io, "equal",
                  {{"words", {render_word(g, w1), render_word(g, w2)}},
                   {"normalForms",
                    {render_word(g, normal_form(g, w1).letters()),
                     render_word(g, normal_form(g, w2).letters())}},
                   {"equal", eq}},
                  eq ? "true" : "false");
    }

    int do_parity(Config const& cfg, Io& io) {
      auto const g  = load_graph(cfg.graph);
      auto const w  = the_word(g, cfg);
      auto const pv = parity_vector(g, w);
      json       payload = {{"word", render_word(g, w)}};
      payload.update(to_json(g, pv));
      std::string text;
      for (std::size_t i = 0; i < g.size(); ++i) {
        auto const s = static_cast<letter_type>(i);
        text += (i ? " " : "") + g.label(s) + ":" + (pv.bit(s) ? "1" : "0");
      }
      return emit(cfg, io, "parity", payload, text);
    }

    int do_essential(Config const& cfg, Io& io) {
      auto const g = load_graph(cfg.graph);
      auto const w = the_word(g, cfg);
      check_radius(cfg.conj_radius, cfg);
      auto const reduced  = reduce(g, w);
      auto const report   = goodness(g, reduced);
      bool const all_odd  = is_all_odd_essential(g, w);
      bool const good     = is_good_essential(g, w);
      auto const falsify  = falsify_essential(g, w, cfg.conj_radius, cfg.cap);
      std::ostringstream text;
      text << "reduced:      " << render_word(g, reduced.letters()) << '\n'
           << "full support: " << (report.full_support ? "yes" : "no") << '\n'
           << "all-odd:      " << (all_odd ? "yes" : "no") << '\n'
           << "good for all: " << (good ? "yes" : "no") << '\n';
      for (std::size_t i = 0; i < g.size(); ++i) {
        text << "  " << g.label(static_cast<letter_type>(i)) << ": "
             << to_string(report.per_generator[i]) << '\n';
      }
      text << "falsifier (radius " << cfg.conj_radius << "): "
           << (falsify.counterexample
                   ? "counterexample u = " + render_word(g, falsify.conjugator)
                   : std::string("no counterexample"))
           << '\n';
      return emit(cfg, io, "essential",
                  {{"word", render_word(g, w)},
                   {"reduced", render_word(g, reduced.letters())},
                   {"allOdd", all_odd},
                   {"goodEssential", good},
                   {"goodness", to_json(g, report)},
                   {"falsifier", to_json(g, falsify)}},
                  text.str());
    }

    int do_completion(Config const& cfg, Io& io) {
      auto const g       = load_graph(cfg.graph);
      auto const w       = the_word(g, cfg);
      auto const alpha   = find_even_completion(g, w);
      auto const product = concat(alpha, w);
      return emit(cfg, io, "completion",
                  {{"word", render_word(g, w)},
                   {"completion", render_word(g, alpha)},
                   {"product", render_word(g, reduce(g, product).letters())},
                   {"allOdd", is_all_odd_essential(g, product)}},
                  render_word(g, alpha));
    }

    int do_cancellator(Config const& cfg, Io& io) {
      std::optional<DefiningGraph> g;
      std::optional<SubgroupSpec>  spec;
      if (cfg.subgroup.empty()) {
        g = load_graph(cfg.graph);
      } else {
        auto [graph, s] = load_subgroup(cfg);
        g               = std::move(graph);
        spec            = std::move(s);
      }
      auto const w              = the_word(*g, cfg);
      auto const [result, trace] = essentialize(*g, w, spec);
      json payload = {{"word", render_word(*g, w)},
                      {"subgroup", spec ? subgroup_json(*spec, cfg.subgroup) : json(nullptr)},
                      {"result", render_word(*g, result.letters())},
                      {"goodEssential", is_good_essential(*g, result.letters())},
                      {"trace", to_json(*g, trace)}};
      std::ostringstream text;
      for (auto const& step : trace.steps) {
        text << to_string(step.phase) << ' ' << g->label(step.target) << ": "
             << render_word(*g, step.multiplier) << "  ->  "
             << render_word(*g, step.result.letters()) << '\n';
      }
      text << "result: " << render_word(*g, result.letters()) << '\n';
      return emit(cfg, io, "cancellator", payload, text.str());
    }

    int do_dj(Config const& cfg, Io& io) {
      auto const g = load_graph(cfg.graph);
      auto const d = cfg.variant == "doubleprime" ? dj_double_prime(g) : dj_prime(g);
      json       edges = json::array();
      for (auto const& [s, t] : d.edges()) {
        edges.push_back({d.label(s), d.label(t)});
      }
      return emit(cfg, io, "dj",
                  {{"variant", cfg.variant},
                   {"vertexCount", d.size()},
                   {"edgeCount", d.number_of_edges()},
                   {"vertices", d.labels()},
                   {"edges", edges}},
                  serialize_graph(d));
    }

    int do_subgroup_member(Config const& cfg, Io& io) {
      auto const [g, spec] = load_subgroup(cfg);
      auto const w         = the_word(g, cfg);
      bool const in        = member(spec, w);
      return emit(cfg, io, "subgroup member",
                  {{"subgroup", subgroup_json(spec, cfg.subgroup)},
                   {"word", render_word(g, w)},
                   {"parity", parity_vector(g, w).to_string()},
                   {"member", in}},
                  in ? "true" : "false");
    }

    int do_subgroup_index(Config const& cfg, Io& io) {
      auto const [g, spec] = load_subgroup(cfg);
      auto const q         = index_and_exponent(spec);
      json       payload   = subgroup_json(spec, cfg.subgroup);
      payload["dimension"] = spec.dimension();
      return emit(cfg, io, "subgroup index", payload,
                  "index " + std::to_string(q.index) + ", exponent "
                      + std::to_string(q.exponent));
    }

    int do_verify_parity(Config const& cfg, Io& io) {
      auto const         g = load_graph(cfg.graph);
      ParityCheckOptions opts;
      opts.trials                 = cfg.trials;
      opts.max_length             = cfg.max_len;
      opts.moves_per_trial        = cfg.moves;
      opts.seed                   = cfg.seed;
      opts.inject_letter_deletion = cfg.inject_deletion;
      return emit_report(cfg, io, verify_parity_invariance(g, opts, verify_options(cfg)));
    }

    int do_verify_wordproblem(Config const& cfg, Io& io) {
      auto const         g = load_graph(cfg.graph);
      WordProblemOptions opts;
      opts.max_length        = cfg.max_len;
      opts.samples           = cfg.samples;
      opts.sample_max_length = cfg.sample_max_len;
      opts.seed              = cfg.seed;
      return emit_report(cfg, io, verify_word_problem(g, opts, verify_options(cfg)));
    }

    int do_verify_covering(Config const& cfg, Io& io) {
      auto const g = load_graph(cfg.graph);
      check_radius(cfg.radius, cfg);
      return emit_report(cfg, io, verify_covering(g, cfg.radius, verify_options(cfg)));
    }

    int do_verify_subgroup_covering(Config const& cfg, Io& io) {
      auto const [g, spec] = load_subgroup(cfg);
      check_radius(cfg.radius, cfg);
      return emit_report(
          cfg, io, verify_subgroup_covering(g, spec, cfg.radius, verify_options(cfg)));
    }

    int do_verify_uniformity(Config const& cfg, Io& io) {
      auto const [g, spec] = load_subgroup(cfg);
      check_radius(cfg.radius, cfg);
      return emit_report(
          cfg, io, verify_cancellator_uniformity(g, spec, cfg.radius, verify_options(cfg)));
    }

    int do_verify_joinlemma(Config const& cfg, Io& io) {
      return emit_report(cfg, io, verify_join_lemma(cfg.max_vertices, verify_options(cfg)));
    }

    int do_verify_certificates(Config const& cfg, Io& io) {
      auto const g = load_graph(cfg.graph);
      check_radius(cfg.radius, cfg);
      check_radius(cfg.conj_radius, cfg);
      std::vector<word_type> extra;
      for (auto const& text : cfg.assume_certified) {
        extra.push_back(parse_word(g, text));
      }
      return emit_report(cfg, io,
                         verify_essential_certificates(
                             g, cfg.radius, cfg.conj_radius, verify_options(cfg), extra));
    }

    ////////////////////////////////////////////////////////////////////////
    // Option wiring
    ////////////////////////////////////////////////////////////////////////

    void graph_opt(Command& c, bool required = true) {
      auto* o = c.app->add_option("--graph", c.cfg.graph, "defining graph file");
      if (required) {
        o->required();
      }
    }

    void word_opt(Command& c, std::size_t count = 1) {
      auto* o = c.app->add_option("--word", c.cfg.words,
                                  count == 1 ? "word, space-separated generator labels"
                                             : "word (give twice)");
      o->required()->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    }

    void format_opt(Command& c) {
      c.app->add_option("--format", c.cfg.format, "output format")
          ->check(CLI::IsMember({"json", "text"}))
          ->capture_default_str();
    }

    void cap_opt(Command& c) {
      c.app->add_option("--cap", c.cfg.cap, "largest radius to enumerate")
          ->check(CLI::Range(std::size_t(0), hard_cap))
          ->capture_default_str();
    }

    void radius_opt(Command& c, std::size_t def) {
      c.cfg.radius = def;
      c.app->add_option("--radius", c.cfg.radius, "ball radius")->capture_default_str();
      cap_opt(c);
    }

    void subgroup_opt(Command& c, std::string def, bool required) {
      c.cfg.subgroup = std::move(def);
      auto* o = c.app->add_option("--subgroup", c.cfg.subgroup,
                                  "'commutator', 'whole', or a subgroup file");
      if (required) {
        o->required();
      } else if (!c.cfg.subgroup.empty()) {
        o->capture_default_str();
      }
    }

    void verify_opts(Command& c) {
      c.app->add_option("--jobs", c.cfg.jobs, "worker threads")
          ->check(CLI::Range(1U, 256U))
          ->capture_default_str();
      c.app->add_flag("--timing", c.cfg.timing, "record elapsed time in the report");
    }

  }  // namespace

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rank and covering toolkit for right-angled Coxeter and Artin groups",
                 "coxrank"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "help for every subcommand");

    std::list<Command> commands;
    auto add = [&commands](CLI::App* parent, std::string const& name,
                           std::string const& desc, auto action) -> Command& {
      auto& c  = commands.emplace_back();
      c.app    = parent->add_subcommand(name, desc);
      c.action = action;
      return c;
    };

    {
      auto& c = add(&app, "classify", "algebraic rank and commensurability flag", do_classify);
      graph_opt(c);
      c.app->add_option("--kind", c.cfg.kind, "group built from the graph")
          ->check(CLI::IsMember({"racg", "raag"}))
          ->capture_default_str();
      format_opt(c);
    }
    {
      auto& c = add(&app, "reduce", "reduced word", [](Config const& cfg, Io& io) {
        return do_reduce(cfg, io, false);
      });
      graph_opt(c);
      word_opt(c);
      format_opt(c);
    }
    {
      auto& c = add(&app, "nf", "lexicographic normal form", [](Config const& cfg, Io& io) {
        return do_reduce(cfg, io, true);
      });
      graph_opt(c);
      word_opt(c);
      format_opt(c);
    }
    {
      auto& c = add(&app, "equal", "decide equality of two words", do_equal);
      graph_opt(c);
      word_opt(c, 2);
      format_opt(c);
    }
    {
      auto& c = add(&app, "parity", "parity vector", do_parity);
      graph_opt(c);
      word_opt(c);
      format_opt(c);
    }
    {
      auto& c = add(&app, "essential", "essentiality certificates and falsifier",
                    do_essential);
      graph_opt(c);
      word_opt(c);
      c.app->add_option("--conj-radius", c.cfg.conj_radius, "falsifier conjugator radius")
          ->capture_default_str();
      cap_opt(c);
      format_opt(c);
    }
    {
      auto& c = add(&app, "completion", "product of the even-parity generators",
                    do_completion);
      graph_opt(c);
      word_opt(c);
      format_opt(c);
    }
    {
      auto& c = add(&app, "cancellator", "repair a word into a good-essential one",
                    do_cancellator);
      graph_opt(c, false);
      word_opt(c);
      subgroup_opt(c, "", false);
      format_opt(c);
    }
    {
      auto& c = add(&app, "dj", "doubled graphs", do_dj);
      graph_opt(c);
      c.app->add_option("--variant", c.cfg.variant, "which doubled graph")
          ->required()
          ->check(CLI::IsMember({"prime", "doubleprime"}));
      format_opt(c);
    }

    auto* subgroup = app.add_subcommand("subgroup", "parity-kernel subgroups");
    subgroup->require_subcommand(1);
    {
      auto& c = add(subgroup, "member", "membership test", do_subgroup_member);
      graph_opt(c, false);
      subgroup_opt(c, "", true);
      word_opt(c);
      format_opt(c);
    }
    {
      auto& c = add(subgroup, "index", "index and quotient exponent", do_subgroup_index);
      graph_opt(c, false);
      subgroup_opt(c, "", true);
      format_opt(c);
    }

    auto* verify = app.add_subcommand("verify", "desk-scale verification runs");
    verify->require_subcommand(1);
    {
      auto& c = add(verify, "parity", "parity invariance under random moves",
                    do_verify_parity);
      graph_opt(c);
      c.app->add_option("--trials", c.cfg.trials, "random trials")->capture_default_str();
      c.app->add_option("--max-len", c.cfg.max_len, "longest starting word")
          ->capture_default_str();
      c.app->add_option("--moves", c.cfg.moves, "moves per trial")->capture_default_str();
      c.app->add_option("--seed", c.cfg.seed, "random seed")->capture_default_str();
      c.app->add_flag("--inject-deletion", c.cfg.inject_deletion,
                      "harness self-test: corrupt one move per trial");
      verify_opts(c);
      format_opt(c);
    }
    {
      auto& c = add(verify, "wordproblem", "normal forms against a rewriting closure",
                    do_verify_wordproblem);
      c.cfg.max_len = 4;
      graph_opt(c);
      c.app->add_option("--max-len", c.cfg.max_len, "exhaustive word length")
          ->capture_default_str();
      c.app->add_option("--samples", c.cfg.samples, "extra random pairs")
          ->capture_default_str();
      c.app->add_option("--sample-max-len", c.cfg.sample_max_len, "length of random pairs")
          ->capture_default_str();
      c.app->add_option("--seed", c.cfg.seed, "random seed")->capture_default_str();
      verify_opts(c);
      format_opt(c);
    }
    {
      auto& c = add(verify, "covering", "all-odd completion of every ball element",
                    do_verify_covering);
      graph_opt(c);
      radius_opt(c, 8);
      verify_opts(c);
      format_opt(c);
    }
    {
      auto& c = add(verify, "subgroup-covering", "cancellators inside a subgroup",
                    do_verify_subgroup_covering);
      graph_opt(c, false);
      subgroup_opt(c, "commutator", false);
      radius_opt(c, 8);
      verify_opts(c);
      format_opt(c);
    }
    {
      auto& c = add(verify, "uniformity", "one cancellator per bad set",
                    do_verify_uniformity);
      graph_opt(c, false);
      subgroup_opt(c, "whole", false);
      radius_opt(c, 6);
      verify_opts(c);
      format_opt(c);
    }
    {
      auto& c = add(verify, "joinlemma", "join-ness of a graph and its doubled graph",
                    do_verify_joinlemma);
      c.app->add_option("--max-vertices", c.cfg.max_vertices, "largest graph order")
          ->capture_default_str();
      verify_opts(c);
      format_opt(c);
    }
    {
      auto& c = add(verify, "certificates", "certified elements survive the falsifier",
                    do_verify_certificates);
      graph_opt(c);
      radius_opt(c, 6);
      c.app->add_option("--conj-radius", c.cfg.conj_radius, "falsifier conjugator radius")
          ->capture_default_str();
      c.app->add_option("--assume-certified", c.cfg.assume_certified,
                        "harness self-test: treat this word as certified")
          ->expected(1)
          ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
      verify_opts(c);
      format_opt(c);
    }

    try {
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }

    Io io{out};
    for (auto& c : commands) {
      if (!c.app->parsed()) {
        continue;
      }
      try {
        return c.action(c.cfg, io);
      } catch (Error const& e) {
        err << "error: " << e.what() << '\n';
        return 2;
      } catch (UsageError const& e) {
        err << "error: " << e.what() << '\n';
        return 2;
      }
    }
    err << "error: no command given\n";
    return 2;
  }

}  // namespace coxrank::cli
