#include "coxrank/classifier.hpp"

namespace coxrank {

  namespace {

    void finish(RankReport& report) {
      report.total_rank = 0;
      for (auto const& f : report.factors) {
        report.total_rank += f.rank;
      }
      report.higher_rank_lattice_commensurable = commensurability_flag(report);
      if (report.factors.size() > 1) {
        report.notes.push_back(
            "graph is a join of " + std::to_string(report.factors.size())
            + " factors; rank of a direct product is the sum of the factor "
              "ranks");
      }
      if (report.higher_rank_lattice_commensurable == Commensurability::NO) {
        report.notes.push_back(
            "rank <= 1: not commensurable to any uniform lattice in a higher "
            "rank non-compact connected semisimple Lie group");
      }
    }

  }  // namespace

  std::string_view to_string(GroupKind kind) noexcept {
    return kind == GroupKind::RACG ? "RACG" : "RAAG";
  }

  std::string_view to_string(Commensurability c) noexcept {
    return c == Commensurability::NO ? "NO" : "UNKNOWN";
  }

  RankReport rank_racg(DefiningGraph const& g) {
    RankReport report{GroupKind::RACG, {}, 0, Commensurability::UNKNOWN, {}};
    for (auto const& factor : join_decompose(g)) {
      auto const cls = classify_factor(factor);
      RankFactor f{cls.vertex_set, std::string(to_string(cls.kind)), 0, {}};
      switch (cls.kind) {
        case FactorKind::SPHERICAL_POINT:
          f.rank = 0;
          f.note = "finite (spherical) factor: rank 0";
          break;
        case FactorKind::AFFINE_DIHEDRAL:
          f.rank = factor.size() - 1;
          f.note = "irreducible affine factor (infinite dihedral): rank |S| - 1";
          break;
        case FactorKind::IRREDUCIBLE_NONAFFINE:
          f.rank = 1;
          f.note = "infinite irreducible non-affine factor: rank 1";
          break;
      }
      report.factors.push_back(std::move(f));
    }
    finish(report);
    return report;
  }

  RankReport rank_raag(DefiningGraph const& g) {
    RankReport report{GroupKind::RAAG, {}, 0, Commensurability::UNKNOWN, {}};
    for (auto const& factor : join_decompose(g)) {
      RankFactor f{factor.labels(), "", 1, {}};
      if (factor.size() == 1) {
        f.kind = "INFINITE_CYCLIC";
        f.note = "infinite cyclic factor: rank 1";
      } else {
        f.kind = "NON_JOIN";
        f.note = "defining graph not a join: rank 1 via the doubled Coxeter "
                 "group, which is irreducible non-affine";
      }
      report.factors.push_back(std::move(f));
    }
    finish(report);
    return report;
  }

  Commensurability commensurability_flag(RankReport const& report) {
    return report.total_rank <= 1 ? Commensurability::NO
                                  : Commensurability::UNKNOWN;
  }

}  // namespace coxrank
