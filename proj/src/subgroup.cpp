#include "coxrank/subgroup.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "coxrank/error.hpp"

namespace coxrank {

  namespace {

    std::uint64_t pivot_bit(std::uint64_t v) {
      return v & (~v + 1);
    }

    std::string_view trim(std::string_view s) {
      auto const first = s.find_first_not_of(" \t\r\n");
      if (first == std::string_view::npos) {
        return {};
      }
      auto const last = s.find_last_not_of(" \t\r\n");
      return s.substr(first, last - first + 1);
    }

  }  // namespace

  SubgroupSpec::SubgroupSpec(DefiningGraph                    ambient,
                             std::vector<ParityVector> const& generators)
      : _ambient(std::move(ambient)) {
    auto const rank = _ambient.size();
    std::vector<std::uint64_t> rows;
    for (auto const& v : generators) {
      if (v.rank() != rank) {
        raise(ErrorCode::DIMENSION_MISMATCH,
              "basis vector " + v.to_string() + " has length "
                  + std::to_string(v.rank()) + ", expected "
                  + std::to_string(rank));
      }
      auto x = v.bits();
      for (auto r : rows) {
        if (x & pivot_bit(r)) {
          x ^= r;
        }
      }
      if (x == 0) {
        continue;
      }
      auto const p = pivot_bit(x);
      for (auto& r : rows) {
        if (r & p) {
          r ^= x;
        }
      }
      rows.push_back(x);
    }
    std::sort(rows.begin(), rows.end(), [](auto a, auto b) {
      return pivot_bit(a) < pivot_bit(b);
    });
    for (auto r : rows) {
      _basis.emplace_back(rank, r);
    }
  }

  bool SubgroupSpec::contains(ParityVector const& v) const {
    if (v.rank() != _ambient.size()) {
      raise(ErrorCode::DIMENSION_MISMATCH,
            "parity vector of length " + std::to_string(v.rank()));
    }
    auto x = v.bits();
    for (auto const& b : _basis) {
      if (x & pivot_bit(b.bits())) {
        x ^= b.bits();
      }
    }
    return x == 0;
  }

  SubgroupSpec commutator_subgroup(DefiningGraph const& g) {
    return SubgroupSpec(g, {});
  }

  bool member(SubgroupSpec const& spec, word_type const& w) {
    return spec.contains(parity_vector(spec.ambient(), w));
  }

  QuotientInfo index_and_exponent(SubgroupSpec const& spec) {
    auto const codim = spec.ambient().size() - spec.dimension();
    if (codim >= 64) {
      raise(ErrorCode::INDEX_OVERFLOW,
            "index 2^" + std::to_string(codim) + " does not fit in 64 bits");
    }
    return {std::uint64_t(1) << codim, codim == 0 ? 1U : 2U};
  }

  std::vector<ReducedWord> enumerate_members(SubgroupSpec const& spec,
                                             std::size_t         radius,
                                             std::size_t         cap) {
    auto ball = enumerate_ball(spec.ambient(), radius, cap);
    std::erase_if(ball, [&spec](ReducedWord const& w) {
      return !member(spec, w.letters());
    });
    return ball;
  }

  SubgroupFile parse_subgroup_file(std::string_view text) {
    SubgroupFile file;
    bool         have_graph = false;
    std::size_t  line_no    = 0;
    std::size_t  pos        = 0;
    while (pos <= text.size()) {
      auto const end  = std::min(text.find('\n', pos), text.size());
      auto const line = trim(text.substr(pos, end - pos));
      ++line_no;
      pos = end + 1;
      if (line.empty() || line.front() == '#') {
        continue;
      }
      auto const colon = line.find(':');
      auto const where = "line " + std::to_string(line_no) + ": ";
      if (colon == std::string_view::npos) {
        raise(ErrorCode::SYNTAX_ERROR, where + "expected 'graph:' or 'basis:'");
      }
      auto const key   = trim(line.substr(0, colon));
      auto const value = trim(line.substr(colon + 1));
      if (key == "graph") {
        if (have_graph) {
          raise(ErrorCode::SYNTAX_ERROR, where + "repeated 'graph:' line");
        }
        if (value.empty()) {
          raise(ErrorCode::SYNTAX_ERROR, where + "empty graph reference");
        }
        have_graph     = true;
        file.graph_ref = std::string(value);
      } else if (key == "basis") {
        if (!have_graph) {
          raise(ErrorCode::SYNTAX_ERROR, where + "'basis:' before 'graph:'");
        }
        if (value.empty()
            || value.find_first_not_of("01") != std::string_view::npos) {
          raise(ErrorCode::SYNTAX_ERROR, where + "basis must be a 0/1 string");
        }
        file.basis.emplace_back(value);
      } else {
        raise(ErrorCode::SYNTAX_ERROR,
              where + "unknown directive '" + std::string(key) + "'");
      }
    }
    if (!have_graph) {
      raise(ErrorCode::SYNTAX_ERROR, "missing 'graph:' line");
    }
    return file;
  }

  SubgroupSpec make_subgroup(DefiningGraph const& g, SubgroupFile const& file) {
    std::vector<ParityVector> vectors;
    for (auto const& bits : file.basis) {
      vectors.push_back(ParityVector::from_string(bits));
    }
    return SubgroupSpec(g, vectors);
  }

  std::string serialize_subgroup(SubgroupSpec const& spec,
                                 std::string const&  graph_ref) {
    std::ostringstream out;
    out << "graph: " << graph_ref << '\n';
    for (auto const& b : spec.basis()) {
      out << "basis: " << b.to_string() << '\n';
    }
    return out.str();
  }

}  // namespace coxrank
