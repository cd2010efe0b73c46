// JSON and text rendering of the library's result types.  Words are
// rendered with render_word, generator sets as arrays of labels.

#ifndef COXRANK_REPORT_HPP_
#define COXRANK_REPORT_HPP_

#include <string>

#include "json.hpp"

#include "coxrank/cancellator.hpp"
#include "coxrank/classifier.hpp"
#include "coxrank/essential.hpp"
#include "coxrank/graph.hpp"
#include "coxrank/subgroup.hpp"
#include "coxrank/verifier.hpp"

namespace coxrank {

  inline constexpr int schema_version = 1;

  nlohmann::ordered_json labels_json(DefiningGraph const& g, GeneratorSet set);

  nlohmann::ordered_json to_json(RankReport const& report);
  nlohmann::ordered_json to_json(DefiningGraph const& g, GoodnessReport const& report);
  nlohmann::ordered_json to_json(DefiningGraph const& g, BlockerChoice const& choice);
  nlohmann::ordered_json to_json(DefiningGraph const& g, MultiplierTrace const& trace);
  nlohmann::ordered_json to_json(DefiningGraph const& g, FalsifyResult const& result);
  nlohmann::ordered_json to_json(DefiningGraph const& g, ParityVector const& v);
  nlohmann::ordered_json to_json(VerificationReport const& report);

  std::string to_text(RankReport const& report);
  std::string to_text(VerificationReport const& report);

}  // namespace coxrank

#endif  // COXRANK_REPORT_HPP_
