#include <set>
#include <string>
#include <utility>

#include "doctest.h"

#include "coxrank/error.hpp"
#include "coxrank/graph.hpp"
#include "oracles.hpp"

namespace coxrank {

  namespace {

    ErrorCode code_of(auto&& fn) {
      try {
        fn();
      } catch (Error const& e) {
        return e.code();
      }
      FAIL("expected an error");
      return ErrorCode::SYNTAX_ERROR;
    }

    std::set<std::pair<std::string, std::string>> labelled_edges(DefiningGraph const& g) {
      std::set<std::pair<std::string, std::string>> out;
      for (auto const& [s, t] : g.edges()) {
        auto a = g.label(s), b = g.label(t);
        if (b < a) {
          std::swap(a, b);
        }
        out.emplace(a, b);
      }
      return out;
    }

    bool same_labelled_graph(DefiningGraph const& a, DefiningGraph const& b) {
      std::set<std::string> la(a.labels().begin(), a.labels().end());
      std::set<std::string> lb(b.labels().begin(), b.labels().end());
      return la == lb && labelled_edges(a) == labelled_edges(b);
    }

    // every labelled graph on k vertices v0..v{k-1}
    std::vector<DefiningGraph> all_graphs(std::size_t k) {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < k; ++i) {
        labels.push_back("v" + std::to_string(i));
      }
      std::vector<DefiningGraph::edge_type> pairs;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          pairs.emplace_back(i, j);
        }
      }
      std::vector<DefiningGraph> out;
      for (std::size_t mask = 0; mask < (std::size_t(1) << pairs.size()); ++mask) {
        std::vector<DefiningGraph::edge_type> edges;
        for (std::size_t e = 0; e < pairs.size(); ++e) {
          if ((mask >> e) & 1) {
            edges.push_back(pairs[e]);
          }
        }
        out.emplace_back(labels, edges);
      }
      return out;
    }

    // Edge set of the doubled graphs by checking every pair of rendered
    // labels against the defining clauses.
    std::size_t brute_force_double_prime_edges(DefiningGraph const& g) {
      std::size_t count = 0;
      auto const  n     = g.size();
      for (std::size_t a = 0; a < 2 * n; ++a) {
        for (std::size_t b = a + 1; b < 2 * n; ++b) {
          auto const i = a % n, li = a / n;
          auto const j = b % n, lj = b / n;
          bool edge = false;
          if (li == 1 && lj == 1) {
            edge = g.adjacent(i, j);
          } else if (li == 0 && lj == 0) {
            edge = i != j;
          } else {
            edge = i != j;
          }
          count += edge;
        }
      }
      return count;
    }

    std::size_t brute_force_prime_edges(DefiningGraph const& g) {
      std::size_t count = 0;
      auto const  n     = g.size();
      for (std::size_t a = 0; a < 2 * n; ++a) {
        for (std::size_t b = a + 1; b < 2 * n; ++b) {
          auto const i = a % n, li = a / n;
          auto const j = b % n, lj = b / n;
          bool const edge = li == lj ? g.adjacent(i, j) : (i != j && g.adjacent(i, j));
          count += edge;
        }
      }
      return count;
    }

  }  // namespace

  TEST_CASE("parse_graph: direct encodings") {
    auto const k2 = parse_graph("vertices: a b\nedge: a b");
    CHECK(k2.labels() == std::vector<std::string>{"a", "b"});
    CHECK(k2.number_of_edges() == 1);
    CHECK(k2.adjacent(0, 1));

    auto const c5 = parse_graph(
        "# pentagon\nvertices: a b c d e\nedge: a b\nedge: b c\nedge: c d\n"
        "edge: d e\n\nedge: e a\n");
    CHECK(c5.size() == 5);
    CHECK(c5.number_of_edges() == 5);
    CHECK(c5 == oracle::c5());
  }

  TEST_CASE("parse_graph: errors name the line") {
    CHECK(code_of([] { parse_graph("vertices: a\nedge: a a"); }) == ErrorCode::SELF_LOOP);
    CHECK(code_of([] { parse_graph("vertices: a a"); }) == ErrorCode::DUPLICATE_VERTEX);
    CHECK(code_of([] { parse_graph("vertices: a\nedge: a b"); })
          == ErrorCode::UNKNOWN_ENDPOINT);
    CHECK(code_of([] { parse_graph("edge: a b\nvertices: a b"); })
          == ErrorCode::SYNTAX_ERROR);
    CHECK(code_of([] { parse_graph("vertices: a b\nedge: a"); })
          == ErrorCode::SYNTAX_ERROR);
    CHECK(code_of([] { parse_graph("# nothing\n"); }) == ErrorCode::SYNTAX_ERROR);
    CHECK(code_of([] { parse_graph("vertices:"); }) == ErrorCode::EMPTY_GRAPH);
    CHECK(code_of([] { parse_graph("vertices: a-b"); }) == ErrorCode::INVALID_LABEL);
    try {
      parse_graph("# c\n\nvertices: a b\nedge: a a\n");
      FAIL("expected SELF_LOOP");
    } catch (Error const& e) {
      CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
  }

  TEST_CASE("serialize_graph round trips") {
    for (std::size_t k = 1; k <= 4; ++k) {
      for (auto const& g : all_graphs(k)) {
        CHECK(parse_graph(serialize_graph(g)) == g);
      }
    }
  }

  TEST_CASE("is_join") {
    CHECK(is_join(oracle::cycle(4)));
    // complement of C5 is again a 5-cycle: a-c, c-e, e-b, b-d, d-a
    CHECK_FALSE(is_join(oracle::c5()));
    CHECK_FALSE(is_join(oracle::edgeless(1)));
    CHECK_FALSE(is_join(oracle::edgeless(2)));
    CHECK(is_join(oracle::complete(2)));
  }

  TEST_CASE("join_decompose") {
    auto const c4 = join_decompose(oracle::cycle(4));
    REQUIRE(c4.size() == 2);
    CHECK(c4[0].labels() == std::vector<std::string>{"a", "c"});
    CHECK(c4[1].labels() == std::vector<std::string>{"b", "d"});
    CHECK(c4[0].number_of_edges() == 0);
    CHECK(c4[1].number_of_edges() == 0);

    auto const c5 = join_decompose(oracle::c5());
    REQUIRE(c5.size() == 1);
    CHECK(c5[0] == oracle::c5());

    auto const k3 = join_decompose(oracle::complete(3));
    REQUIRE(k3.size() == 3);
    CHECK(k3[0].labels() == std::vector<std::string>{"a"});
    CHECK(k3[1].labels() == std::vector<std::string>{"b"});
    CHECK(k3[2].labels() == std::vector<std::string>{"c"});
  }

  TEST_CASE("join_decompose: factors are not joins and rejoin to g (exhaustive, <= 5 vertices)") {
    for (std::size_t k = 1; k <= 5; ++k) {
      for (auto const& g : all_graphs(k)) {
        auto const factors = join_decompose(g);
        for (auto const& f : factors) {
          CHECK_FALSE(is_join(f));
        }
        CHECK(same_labelled_graph(join(factors), g));
        // factor order follows least vertex
        for (std::size_t i = 1; i < factors.size(); ++i) {
          CHECK(*g.index_of(factors[i - 1].labels().front())
                < *g.index_of(factors[i].labels().front()));
        }
      }
    }
  }

  TEST_CASE("classify_factor") {
    CHECK(classify_factor(oracle::edgeless(1)).kind == FactorKind::SPHERICAL_POINT);
    CHECK(classify_factor(oracle::edgeless(2)).kind == FactorKind::AFFINE_DIHEDRAL);
    CHECK(classify_factor(oracle::c5()).kind == FactorKind::IRREDUCIBLE_NONAFFINE);
    CHECK(classify_factor(oracle::edgeless(3)).kind == FactorKind::IRREDUCIBLE_NONAFFINE);
    CHECK(code_of([] { classify_factor(oracle::cycle(4)); }) == ErrorCode::NOT_A_FACTOR);
  }

  TEST_CASE("dj_double_prime") {
    auto const c5 = dj_double_prime(oracle::c5());
    CHECK(c5.size() == 10);
    CHECK(c5.number_of_edges() == 35);
    CHECK(brute_force_double_prime_edges(oracle::c5()) == 35);
    CHECK(c5.label(0) == "a_0");
    CHECK(c5.label(5) == "a_1");

    auto const pt = dj_double_prime(oracle::edgeless(1));
    CHECK(pt.labels() == std::vector<std::string>{"a_0", "a_1"});
    CHECK(pt.number_of_edges() == 0);

    auto const k2 = dj_double_prime(oracle::complete(2));
    CHECK(k2.size() == 4);
    CHECK(k2.number_of_edges() == 4);
    CHECK(brute_force_double_prime_edges(oracle::complete(2)) == 4);
  }

  TEST_CASE("dj_prime") {
    auto const c5 = dj_prime(oracle::c5());
    CHECK(c5.size() == 10);
    CHECK(c5.number_of_edges() == 20);
    CHECK(brute_force_prime_edges(oracle::c5()) == 20);
    CHECK(c5.label(0) == "a_m1");
    CHECK(c5.label(5) == "a_1");

    auto const pt = dj_prime(oracle::edgeless(1));
    CHECK(pt.size() == 2);
    CHECK(pt.number_of_edges() == 0);

    CHECK(dj_prime(oracle::complete(2)).number_of_edges() == 4);
    CHECK(brute_force_prime_edges(oracle::complete(2)) == 4);
  }

  TEST_CASE("doubled graphs: properties (exhaustive, <= 5 vertices)") {
    for (std::size_t k = 1; k <= 5; ++k) {
      for (auto const& g : all_graphs(k)) {
        auto const dp  = dj_double_prime(g);
        auto const p   = dj_prime(g);
        CHECK(dp.size() == 2 * g.size());
        CHECK(dp.number_of_edges() == brute_force_double_prime_edges(g));
        CHECK(p.number_of_edges() == brute_force_prime_edges(g));
        // the I x {1} layer of the double prime graph is a copy of g
        auto const layer = dp.induced(GeneratorSet(GeneratorSet::full(2 * k).mask()
                                                   & ~GeneratorSet::full(k).mask()));
        for (auto const& [s, t] : layer.edges()) {
          CHECK(g.adjacent(s, t));
        }
        CHECK(layer.number_of_edges() == g.number_of_edges());
        CHECK(is_join(g) == is_join(p));
      }
    }
  }

  TEST_CASE("empty and oversized graphs are rejected") {
    CHECK(code_of([] { DefiningGraph({}, std::vector<DefiningGraph::edge_type>{}); })
          == ErrorCode::EMPTY_GRAPH);
    std::vector<std::string> many;
    for (int i = 0; i < 65; ++i) {
      many.push_back("x" + std::to_string(i));
    }
    CHECK(code_of([&] { DefiningGraph(many, std::vector<DefiningGraph::edge_type>{}); })
          == ErrorCode::TOO_MANY_VERTICES);
    std::vector<std::string> forty(many.begin(), many.begin() + 40);
    DefiningGraph const      big(forty, std::vector<DefiningGraph::edge_type>{});
    CHECK(code_of([&] { dj_prime(big); }) == ErrorCode::TOO_MANY_VERTICES);
  }

}  // namespace coxrank
