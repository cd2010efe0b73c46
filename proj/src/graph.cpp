#include "coxrank/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include "coxrank/error.hpp"

namespace coxrank {

  namespace {

    bool valid_label(std::string_view label) {
      return !label.empty()
             && std::all_of(label.begin(), label.end(), [](char c) {
                  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')
                         || (c >= '0' && c <= '9') || c == '_';
                });
    }

    std::vector<std::string_view> split_ws(std::string_view text) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
          ++j;
        }
        if (j > i) {
          out.push_back(text.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }

    std::string_view trim(std::string_view s) {
      auto const first = s.find_first_not_of(" \t\r\n");
      if (first == std::string_view::npos) {
        return {};
      }
      auto const last = s.find_last_not_of(" \t\r\n");
      return s.substr(first, last - first + 1);
    }

    std::string at_line(std::size_t line, std::string const& what) {
      return "line " + std::to_string(line) + ": " + what;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // GeneratorSet
  ////////////////////////////////////////////////////////////////////////

  std::vector<letter_type> GeneratorSet::members() const {
    std::vector<letter_type> out;
    out.reserve(size());
    for (std::uint64_t m = _mask; m != 0; m &= m - 1) {
      out.push_back(static_cast<letter_type>(std::countr_zero(m)));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // DefiningGraph
  ////////////////////////////////////////////////////////////////////////

  DefiningGraph::DefiningGraph(std::vector<std::string>      labels,
                               std::vector<edge_type> const& edges)
      : _labels(std::move(labels)), _adjacency(_labels.size()) {
    check_labels();
    for (auto const& [s, t] : edges) {
      if (s >= size() || t >= size()) {
        raise(ErrorCode::UNKNOWN_ENDPOINT,
              "edge endpoint index out of range: " + std::to_string(s) + ", "
                  + std::to_string(t));
      }
      if (s == t) {
        raise(ErrorCode::SELF_LOOP, "self-loop at " + _labels[s]);
      }
      _adjacency[s].insert(t);
      _adjacency[t].insert(s);
    }
  }

  DefiningGraph::DefiningGraph(
      std::vector<std::string>                                labels,
      std::vector<std::pair<std::string, std::string>> const& edges)
      : _labels(std::move(labels)), _adjacency(_labels.size()) {
    check_labels();
    for (auto const& [a, b] : edges) {
      auto const s = index_of(a);
      auto const t = index_of(b);
      if (!s || !t) {
        raise(ErrorCode::UNKNOWN_ENDPOINT,
              "edge endpoint is not a vertex: " + (s ? b : a));
      }
      if (*s == *t) {
        raise(ErrorCode::SELF_LOOP, "self-loop at " + a);
      }
      _adjacency[*s].insert(*t);
      _adjacency[*t].insert(*s);
    }
  }

  void DefiningGraph::check_labels() const {
    if (_labels.empty()) {
      raise(ErrorCode::EMPTY_GRAPH, "a defining graph needs at least one vertex");
    }
    if (_labels.size() > max_generators) {
      raise(ErrorCode::TOO_MANY_VERTICES,
            std::to_string(_labels.size()) + " vertices, at most "
                + std::to_string(max_generators) + " supported");
    }
    std::unordered_set<std::string_view> seen;
    for (auto const& label : _labels) {
      if (!valid_label(label)) {
        raise(ErrorCode::INVALID_LABEL, "invalid vertex label '" + label + "'");
      }
      if (!seen.insert(label).second) {
        raise(ErrorCode::DUPLICATE_VERTEX, "duplicate vertex " + label);
      }
    }
  }

  std::optional<letter_type> DefiningGraph::index_of(std::string_view label) const {
    auto const it = std::find(_labels.begin(), _labels.end(), label);
    if (it == _labels.end()) {
      return std::nullopt;
    }
    return static_cast<letter_type>(it - _labels.begin());
  }

  std::vector<DefiningGraph::edge_type> DefiningGraph::edges() const {
    std::vector<edge_type> out;
    for (std::size_t s = 0; s < size(); ++s) {
      for (auto t : _adjacency[s].members()) {
        if (t > s) {
          out.emplace_back(static_cast<letter_type>(s), t);
        }
      }
    }
    return out;
  }

  std::size_t DefiningGraph::number_of_edges() const {
    std::size_t total = 0;
    for (auto const& nbrs : _adjacency) {
      total += nbrs.size();
    }
    return total / 2;
  }

  DefiningGraph DefiningGraph::induced(GeneratorSet vertices) const {
    auto const               keep = vertices.members();
    std::vector<std::string> labels;
    std::vector<letter_type> position(size(), 0);
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if (keep[i] >= size()) {
        raise(ErrorCode::UNKNOWN_GENERATOR,
              "vertex index " + std::to_string(keep[i]) + " out of range");
      }
      labels.push_back(_labels[keep[i]]);
      position[keep[i]] = static_cast<letter_type>(i);
    }
    std::vector<edge_type> sub;
    for (auto const& [s, t] : edges()) {
      if (vertices.contains(s) && vertices.contains(t)) {
        sub.emplace_back(position[s], position[t]);
      }
    }
    return DefiningGraph(std::move(labels), sub);
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing and serialization
  ////////////////////////////////////////////////////////////////////////

  DefiningGraph parse_graph(std::string_view text) {
    std::vector<std::string>                         labels;
    std::vector<std::pair<std::string, std::string>> edges;
    std::unordered_set<std::string>                  declared;
    bool                                             have_vertices = false;

    std::size_t line_no = 0;
    std::size_t pos     = 0;
    while (pos <= text.size()) {
      auto const end  = std::min(text.find('\n', pos), text.size());
      auto const line = trim(text.substr(pos, end - pos));
      ++line_no;
      pos = end + 1;
      if (line.empty() || line.front() == '#') {
        continue;
      }
      auto const colon = line.find(':');
      if (colon == std::string_view::npos) {
        raise(ErrorCode::SYNTAX_ERROR,
              at_line(line_no, "expected 'vertices:' or 'edge:'"));
      }
      auto const key    = trim(line.substr(0, colon));
      auto const tokens = split_ws(line.substr(colon + 1));

      if (key == "vertices") {
        if (have_vertices) {
          raise(ErrorCode::SYNTAX_ERROR,
                at_line(line_no, "repeated 'vertices:' line"));
        }
        have_vertices = true;
        if (tokens.empty()) {
          raise(ErrorCode::EMPTY_GRAPH, at_line(line_no, "no vertices declared"));
        }
        for (auto tok : tokens) {
          std::string label(tok);
          if (!valid_label(label)) {
            raise(ErrorCode::INVALID_LABEL,
                  at_line(line_no, "invalid vertex label '" + label + "'"));
          }
          if (!declared.insert(label).second) {
            raise(ErrorCode::DUPLICATE_VERTEX,
                  at_line(line_no, "duplicate vertex " + label));
          }
          labels.push_back(std::move(label));
        }
      } else if (key == "edge") {
        if (!have_vertices) {
          raise(ErrorCode::SYNTAX_ERROR,
                at_line(line_no, "'edge:' before 'vertices:'"));
        }
        if (tokens.size() != 2) {
          raise(ErrorCode::SYNTAX_ERROR,
                at_line(line_no, "an edge needs exactly two endpoints"));
        }
        std::string a(tokens[0]), b(tokens[1]);
        if (!declared.contains(a) || !declared.contains(b)) {
          raise(ErrorCode::UNKNOWN_ENDPOINT,
                at_line(line_no,
                        "undeclared endpoint " + (declared.contains(a) ? b : a)));
        }
        if (a == b) {
          raise(ErrorCode::SELF_LOOP, at_line(line_no, "self-loop at " + a));
        }
        edges.emplace_back(std::move(a), std::move(b));
      } else {
        raise(ErrorCode::SYNTAX_ERROR,
              at_line(line_no, "unknown directive '" + std::string(key) + "'"));
      }
    }
    if (!have_vertices) {
      raise(ErrorCode::SYNTAX_ERROR,
            at_line(line_no, "missing 'vertices:' line"));
    }
    return DefiningGraph(std::move(labels), edges);
  }

  std::string serialize_graph(DefiningGraph const& g) {
    std::ostringstream out;
    out << "vertices:";
    for (auto const& label : g.labels()) {
      out << ' ' << label;
    }
    out << '\n';
    for (auto const& [s, t] : g.edges()) {
      out << "edge: " << g.label(s) << ' ' << g.label(t) << '\n';
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Joins
  ////////////////////////////////////////////////////////////////////////

  std::vector<GeneratorSet> complement_components(DefiningGraph const& g) {
    std::vector<GeneratorSet> components;
    GeneratorSet              unseen = g.all();
    while (!unseen.empty()) {
      GeneratorSet component;
      GeneratorSet frontier;
      frontier.insert(unseen.front());
      while (!frontier.empty()) {
        auto const s = frontier.front();
        frontier.erase(s);
        component.insert(s);
        unseen.erase(s);
        // complement neighbours of s that are still unvisited
        frontier = frontier | (unseen - g.neighbours(s) - GeneratorSet(1ULL << s));
      }
      components.push_back(component);
    }
    return components;
  }

  bool is_join(DefiningGraph const& g) {
    return complement_components(g).size() > 1;
  }

  std::vector<DefiningGraph> join_decompose(DefiningGraph const& g) {
    std::vector<DefiningGraph> factors;
    for (auto const& component : complement_components(g)) {
      factors.push_back(g.induced(component));
    }
    return factors;
  }

  DefiningGraph join(std::vector<DefiningGraph> const& factors) {
    std::vector<std::string>              labels;
    std::vector<DefiningGraph::edge_type> edges;
    std::vector<std::size_t>              offsets;
    for (auto const& f : factors) {
      offsets.push_back(labels.size());
      labels.insert(labels.end(), f.labels().begin(), f.labels().end());
    }
    if (labels.size() > max_generators) {
      raise(ErrorCode::TOO_MANY_VERTICES,
            "join has " + std::to_string(labels.size()) + " vertices");
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      auto const oi = offsets[i];
      for (auto const& [s, t] : factors[i].edges()) {
        edges.emplace_back(static_cast<letter_type>(oi + s),
                           static_cast<letter_type>(oi + t));
      }
      for (std::size_t j = i + 1; j < factors.size(); ++j) {
        for (std::size_t s = 0; s < factors[i].size(); ++s) {
          for (std::size_t t = 0; t < factors[j].size(); ++t) {
            edges.emplace_back(static_cast<letter_type>(oi + s),
                               static_cast<letter_type>(offsets[j] + t));
          }
        }
      }
    }
    return DefiningGraph(std::move(labels), edges);
  }

  std::string_view to_string(FactorKind kind) noexcept {
    switch (kind) {
      case FactorKind::SPHERICAL_POINT:
        return "SPHERICAL_POINT";
      case FactorKind::AFFINE_DIHEDRAL:
        return "AFFINE_DIHEDRAL";
      case FactorKind::IRREDUCIBLE_NONAFFINE:
        return "IRREDUCIBLE_NONAFFINE";
    }
    return "UNKNOWN";
  }

  FactorClassification classify_factor(DefiningGraph const& g) {
    if (is_join(g)) {
      raise(ErrorCode::NOT_A_FACTOR,
            "graph is a join; decompose it before classifying");
    }
    FactorKind kind = FactorKind::IRREDUCIBLE_NONAFFINE;
    if (g.size() == 1) {
      kind = FactorKind::SPHERICAL_POINT;
    } else if (g.size() == 2) {
      // not a join, so the two vertices are non-adjacent: infinite dihedral
      kind = FactorKind::AFFINE_DIHEDRAL;
    }
    return {kind, g.labels()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Davis-Januszkiewicz graphs
  ////////////////////////////////////////////////////////////////////////

  DefiningGraph dj_double_prime(DefiningGraph const& g) {
    auto const n = g.size();
    if (2 * n > max_generators) {
      raise(ErrorCode::TOO_MANY_VERTICES,
            "doubled graph would have " + std::to_string(2 * n) + " vertices");
    }
    std::vector<std::string> labels;
    for (auto const& l : g.labels()) {
      labels.push_back(l + "_0");
    }
    for (auto const& l : g.labels()) {
      labels.push_back(l + "_1");
    }
    auto const zero = [](std::size_t i) { return static_cast<letter_type>(i); };
    auto const one  = [n](std::size_t i) { return static_cast<letter_type>(n + i); };

    std::vector<DefiningGraph::edge_type> edges;
    for (auto const& [s, t] : g.edges()) {
      edges.emplace_back(one(s), one(t));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) {
          continue;
        }
        if (i < j) {
          edges.emplace_back(zero(i), zero(j));
        }
        edges.emplace_back(zero(i), one(j));
      }
    }
    return DefiningGraph(std::move(labels), edges);
  }

  DefiningGraph dj_prime(DefiningGraph const& g) {
    auto const n = g.size();
    if (2 * n > max_generators) {
      raise(ErrorCode::TOO_MANY_VERTICES,
            "doubled graph would have " + std::to_string(2 * n) + " vertices");
    }
    std::vector<std::string> labels;
    for (auto const& l : g.labels()) {
      labels.push_back(l + "_m1");
    }
    for (auto const& l : g.labels()) {
      labels.push_back(l + "_1");
    }
    std::vector<DefiningGraph::edge_type> edges;
    for (auto const& [s, t] : g.edges()) {
      auto const ms = static_cast<letter_type>(s);
      auto const mt = static_cast<letter_type>(t);
      auto const ps = static_cast<letter_type>(n + s);
      auto const pt = static_cast<letter_type>(n + t);
      edges.emplace_back(ms, mt);
      edges.emplace_back(ps, pt);
      edges.emplace_back(ms, pt);
      edges.emplace_back(mt, ps);
    }
    return DefiningGraph(std::move(labels), edges);
  }

}  // namespace coxrank
