// Test-only reference implementations.  Each one follows the mathematical
// definition directly and shares no code path with the library routine it
// is used to check.

#ifndef COXRANK_TESTS_ORACLES_HPP_
#define COXRANK_TESTS_ORACLES_HPP_

#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxrank/graph.hpp"
#include "coxrank/word.hpp"

namespace coxrank::oracle {

  inline DefiningGraph cycle(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    std::vector<DefiningGraph::edge_type> edges;
    for (std::size_t i = 0; i < n; ++i) {
      edges.emplace_back(static_cast<letter_type>(i),
                         static_cast<letter_type>((i + 1) % n));
    }
    return DefiningGraph(labels, edges);
  }

  inline DefiningGraph c5() {
    return cycle(5);
  }

  inline DefiningGraph complete(std::size_t n) {
    std::vector<std::string> labels;
    std::vector<DefiningGraph::edge_type> edges;
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(std::string(1, static_cast<char>('a' + i)));
      for (std::size_t j = i + 1; j < n; ++j) {
        edges.emplace_back(static_cast<letter_type>(i), static_cast<letter_type>(j));
      }
    }
    return DefiningGraph(labels, edges);
  }

  inline DefiningGraph edgeless(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    return DefiningGraph(labels, std::vector<DefiningGraph::edge_type>{});
  }

  inline word_type w(DefiningGraph const& g, std::string const& text) {
    return parse_word(g, text);
  }

  // Partition of all words of length <= max_len into group elements, by
  // breadth-first flood fill under: swap adjacent commuting letters, delete
  // an adjacent pair ss, insert ss anywhere.  Returns word -> class id.
  inline std::map<word_type, std::size_t>
  closure_partition(DefiningGraph const& g, std::size_t max_len) {
    auto const n = g.size();
    std::vector<word_type> all{word_type{}};
    for (std::size_t len = 1, start = 0; len <= max_len; ++len) {
      auto const end = all.size();
      for (auto i = start; i < end; ++i) {
        for (std::size_t s = 0; s < n; ++s) {
          auto v = all[i];
          v.push_back(static_cast<letter_type>(s));
          all.push_back(std::move(v));
        }
      }
      start = end;
    }
    std::map<word_type, std::size_t> cls;
    std::size_t                      next_id = 0;
    for (auto const& root : all) {
      if (cls.contains(root)) {
        continue;
      }
      auto const id = next_id++;
      std::deque<word_type> queue{root};
      cls[root] = id;
      while (!queue.empty()) {
        auto const cur = queue.front();
        queue.pop_front();
        std::vector<word_type> nbrs;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
          if (cur[i] != cur[i + 1] && g.adjacent(cur[i], cur[i + 1])) {
            auto v = cur;
            std::swap(v[i], v[i + 1]);
            nbrs.push_back(std::move(v));
          }
          if (cur[i] == cur[i + 1]) {
            auto v = cur;
            v.erase(v.begin() + static_cast<long>(i), v.begin() + static_cast<long>(i) + 2);
            nbrs.push_back(std::move(v));
          }
        }
        if (cur.size() + 2 <= max_len) {
          for (std::size_t i = 0; i <= cur.size(); ++i) {
            for (std::size_t s = 0; s < n; ++s) {
              auto v = cur;
              v.insert(v.begin() + static_cast<long>(i), 2, static_cast<letter_type>(s));
              nbrs.push_back(std::move(v));
            }
          }
        }
        for (auto& v : nbrs) {
          if (cls.try_emplace(v, id).second) {
            queue.push_back(std::move(v));
          }
        }
      }
    }
    return cls;
  }

  // Coefficients a_0..a_radius of the growth series of a right-angled
  // Coxeter group,  W(t) = 1 / sum_{cliques C} (-t / (1 + t))^{|C|}.
  inline std::vector<std::uint64_t> growth_series(DefiningGraph const& g,
                                                  std::size_t          radius) {
    auto const n = g.size();
    // clique counts by size
    std::vector<std::int64_t> cliques(n + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
      bool clique = true;
      for (std::size_t i = 0; i < n && clique; ++i) {
        for (std::size_t j = i + 1; j < n && clique; ++j) {
          if (((mask >> i) & 1) && ((mask >> j) & 1)
              && !g.adjacent(static_cast<letter_type>(i), static_cast<letter_type>(j))) {
            clique = false;
          }
        }
      }
      if (clique) {
        ++cliques[static_cast<std::size_t>(__builtin_popcountll(mask))];
      }
    }
    std::size_t d = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      if (cliques[k] != 0) {
        d = k;
      }
    }
    auto const poly_mul = [](std::vector<std::int64_t> const& a,
                             std::vector<std::int64_t> const& b) {
      std::vector<std::int64_t> c(a.size() + b.size() - 1, 0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
          c[i + j] += a[i] * b[j];
        }
      }
      return c;
    };
    auto const power = [&](std::vector<std::int64_t> base, std::size_t e) {
      std::vector<std::int64_t> out{1};
      for (std::size_t i = 0; i < e; ++i) {
        out = poly_mul(out, base);
      }
      return out;
    };
    // numerator (1+t)^d, denominator sum_k c_k (-t)^k (1+t)^(d-k)
    auto const numer = power({1, 1}, d);
    std::vector<std::int64_t> denom(d + 1, 0);
    for (std::size_t k = 0; k <= d; ++k) {
      auto term = poly_mul(power({0, -1}, k), power({1, 1}, d - k));
      for (std::size_t i = 0; i < term.size(); ++i) {
        denom[i] += cliques[k] * term[i];
      }
    }
    std::vector<std::int64_t> series(radius + 1, 0);
    for (std::size_t i = 0; i <= radius; ++i) {
      std::int64_t value = i < numer.size() ? numer[i] : 0;
      for (std::size_t j = 1; j <= i && j < denom.size(); ++j) {
        value -= denom[j] * series[i - j];
      }
      series[i] = value / denom[0];
    }
    return {series.begin(), series.end()};
  }

  // s-good by the definition, scanning positions rather than splitting into
  // blocks.  s must occur in w.
  inline bool s_good_by_definition(DefiningGraph const& g,
                                   word_type const&     w,
                                   letter_type          s) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == s) {
        pos.push_back(i);
      }
    }
    if (pos.size() == 1) {
      return true;
    }
    auto const blocker_in = [&](std::size_t from, std::size_t to) {
      for (auto i = from; i < to; ++i) {
        if (w[i] != s && !g.adjacent(w[i], s)) {
          return true;
        }
      }
      return false;
    };
    for (std::size_t k = 0; k + 1 < pos.size(); ++k) {
      if (!blocker_in(pos[k] + 1, pos[k + 1])) {
        return false;
      }
    }
    return blocker_in(0, pos.front()) || blocker_in(pos.back() + 1, w.size());
  }

  inline word_type random_word(std::size_t n, std::size_t max_len, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<std::size_t> letter(0, n - 1);
    word_type                                  out(len_dist(rng));
    for (auto& s : out) {
      s = static_cast<letter_type>(letter(rng));
    }
    return out;
  }

}  // namespace coxrank::oracle

#endif  // COXRANK_TESTS_ORACLES_HPP_
