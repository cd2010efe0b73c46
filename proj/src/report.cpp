#include "coxrank/report.hpp"

#include <algorithm>
#include <sstream>

namespace coxrank {

  using json = nlohmann::ordered_json;

  namespace {

    std::string join_labels(std::vector<std::string> const& labels) {
      std::string out;
      for (auto const& l : labels) {
        out += (out.empty() ? "" : " ") + l;
      }
      return out;
    }

  }  // namespace

  json labels_json(DefiningGraph const& g, GeneratorSet set) {
    json out = json::array();
    for (auto s : set.members()) {
      out.push_back(g.label(s));
    }
    return out;
  }

  json to_json(RankReport const& report) {
    json factors = json::array();
    for (auto const& f : report.factors) {
      factors.push_back({{"vertexSet", f.vertex_set},
                         {"kind", f.kind},
                         {"factorRank", f.rank},
                         {"note", f.note}});
    }
    return {{"groupKind", to_string(report.group_kind)},
            {"factors", factors},
            {"totalRank", report.total_rank},
            {"higherRankLatticeCommensurable",
             to_string(report.higher_rank_lattice_commensurable)},
            {"notes", report.notes}};
  }

  json to_json(DefiningGraph const& g, GoodnessReport const& report) {
    json per = json::object();
    for (std::size_t i = 0; i < report.per_generator.size(); ++i) {
      per[g.label(static_cast<letter_type>(i))] = to_string(report.per_generator[i]);
    }
    return {{"perGenerator", per},
            {"badSet", labels_json(g, report.bad_set)},
            {"fullSupport", report.full_support}};
  }

  json to_json(DefiningGraph const& g, BlockerChoice const& c) {
    return {{"s", g.label(c.s)},
            {"sPrime", g.label(c.s_prime)},
            {"sDoublePrime", g.label(c.s_double_prime)},
            {"variant", to_string(c.variant)}};
  }

  json to_json(DefiningGraph const& g, MultiplierTrace const& trace) {
    json steps = json::array();
    for (auto const& step : trace.steps) {
      steps.push_back({{"phase", to_string(step.phase)},
                       {"target", g.label(step.target)},
                       {"choice", to_json(g, step.choice)},
                       {"multiplier", render_word(g, step.multiplier)},
                       {"result", render_word(g, step.result.letters())}});
    }
    return {{"exponent", trace.exponent},
            {"steps", steps},
            {"totalMultiplier", render_word(g, trace.total_multiplier)}};
  }

  json to_json(DefiningGraph const& g, FalsifyResult const& result) {
    json out = {{"result", result.counterexample ? "COUNTEREXAMPLE" : "NO_COUNTEREXAMPLE"},
                {"conjRadius", result.radius},
                {"conjugatorsTried", result.conjugators_tried}};
    if (result.counterexample) {
      out["conjugator"] = render_word(g, result.conjugator);
      out["parabolic"]  = labels_json(g, result.parabolic);
    }
    return out;
  }

  json to_json(DefiningGraph const& g, ParityVector const& v) {
    json bits = json::object();
    for (std::size_t i = 0; i < v.rank(); ++i) {
      auto const s        = static_cast<letter_type>(i);
      bits[g.label(s)]    = v.bit(s) ? 1 : 0;
    }
    return {{"bits", bits}, {"vector", v.to_string()}};
  }

  json to_json(VerificationReport const& report) {
    json out = {{"check", report.check}, {"params", report.params}};
    if (report.seed) {
      out["seed"] = *report.seed;
    }
    out["totalCases"]   = report.total_cases;
    out["failureCount"] = report.failure_count;
    out["failures"]     = report.failures;
    out["elapsedMs"]
        = report.elapsed_ms ? json(*report.elapsed_ms) : json(nullptr);
    out["verdict"] = report.verdict == Verdict::PASS ? "PASS" : "FAIL";
    out["notes"]   = report.notes;
    out["details"] = report.details;
    return out;
  }

  std::string to_text(RankReport const& report) {
    std::ostringstream out;
    std::size_t        width = 0;
    for (auto const& f : report.factors) {
      width = std::max(width, join_labels(f.vertex_set).size());
    }
    out << "group kind:   " << to_string(report.group_kind) << '\n';
    out << "factors:\n";
    for (auto const& f : report.factors) {
      auto const labels = join_labels(f.vertex_set);
      out << "  {" << labels << '}' << std::string(width - labels.size(), ' ')
          << "  " << f.kind << "  rank " << f.rank << '\n';
    }
    out << "total rank:   " << report.total_rank << '\n';
    out << "commensurable to higher-rank uniform lattice: "
        << (report.higher_rank_lattice_commensurable == Commensurability::NO
                ? "no"
                : "unknown")
        << '\n';
    for (auto const& note : report.notes) {
      out << "note: " << note << '\n';
    }
    return out.str();
  }

  std::string to_text(VerificationReport const& report) {
    std::ostringstream out;
    out << "check:       " << report.check << '\n';
    out << "params:      " << report.params.dump() << '\n';
    if (report.seed) {
      out << "seed:        " << *report.seed << '\n';
    }
    out << "total cases: " << report.total_cases << '\n';
    out << "failures:    " << report.failure_count << '\n';
    for (auto const& f : report.failures) {
      out << "  " << f.dump() << '\n';
    }
    if (report.elapsed_ms) {
      out << "elapsed:     " << *report.elapsed_ms << " ms\n";
    }
    for (auto const& note : report.notes) {
      out << "note:        " << note << '\n';
    }
    out << "details:     " << report.details.dump() << '\n';
    out << "verdict:     " << (report.verdict == Verdict::PASS ? "PASS" : "FAIL")
        << '\n';
    return out.str();
  }

}  // namespace coxrank
