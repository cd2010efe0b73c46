#include "coxrank/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "coxrank/error.hpp"

namespace coxrank {

  ParityVector ParityVector::from_string(std::string_view bits) {
    if (bits.size() > max_generators) {
      raise(ErrorCode::DIMENSION_MISMATCH,
            "parity vector longer than " + std::to_string(max_generators));
    }
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') {
        mask |= std::uint64_t(1) << i;
      } else if (bits[i] != '0') {
        raise(ErrorCode::SYNTAX_ERROR,
              "parity vector must be a 0/1 string, got '" + std::string(bits)
                  + "'");
      }
    }
    return ParityVector(bits.size(), mask);
  }

  std::string ParityVector::to_string() const {
    std::string out(_rank, '0');
    for (std::size_t i = 0; i < _rank; ++i) {
      if (bit(static_cast<letter_type>(i))) {
        out[i] = '1';
      }
    }
    return out;
  }

  ReducedWord ReducedWord::certify(DefiningGraph const& g, word_type w) {
    if (!is_reduced(g, w)) {
      raise(ErrorCode::NOT_REDUCED,
            "'" + render_word(g, w) + "' is not a reduced word");
    }
    return ReducedWord(std::move(w));
  }

  bool shortlex_less(word_type const& a, word_type const& b) noexcept {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  }

  void check_word(DefiningGraph const& g, word_type const& w) {
    for (auto s : w) {
      if (s >= g.size()) {
        raise(ErrorCode::UNKNOWN_GENERATOR,
              "generator index " + std::to_string(s) + " out of range");
      }
    }
  }

  word_type parse_word(DefiningGraph const& g, std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t                   i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      auto j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      if (j > i) {
        tokens.push_back(text.substr(i, j - i));
      }
      i = j;
    }
    if (tokens.size() == 1
        && (tokens[0] == "()" || (tokens[0] == "e" && !g.index_of("e")))) {
      return {};
    }
    word_type w;
    w.reserve(tokens.size());
    for (auto tok : tokens) {
      auto const s = g.index_of(tok);
      if (!s) {
        raise(ErrorCode::UNKNOWN_GENERATOR,
              "'" + std::string(tok) + "' is not a generator");
      }
      w.push_back(*s);
    }
    return w;
  }

  std::string render_word(DefiningGraph const& g, word_type const& w) {
    if (w.empty()) {
      return g.index_of("e") ? "()" : "e";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        out += ' ';
      }
      out += g.label(w[i]);
    }
    return out;
  }

  word_type inverse(word_type const& w) {
    return word_type(w.rbegin(), w.rend());
  }

  word_type concat(word_type const& a, word_type const& b) {
    word_type out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  ReducedWord reduce(DefiningGraph const& g, word_type const& w) {
    check_word(g, w);
    // `out` stays reduced.  Appending s to a reduced word shortens it iff the
    // last occurrence of s is followed only by letters commuting with s.
    word_type out;
    out.reserve(w.size());
    for (auto s : w) {
      bool cancelled = false;
      for (auto j = out.size(); j-- > 0;) {
        if (out[j] == s) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
          cancelled = true;
          break;
        }
        if (!g.adjacent(out[j], s)) {
          break;
        }
      }
      if (!cancelled) {
        out.push_back(s);
      }
    }
    return ReducedWord(std::move(out));
  }

  bool is_reduced(DefiningGraph const& g, word_type const& w) {
    return reduce(g, w).length() == w.size();
  }

  ReducedWord normal_form(DefiningGraph const& g, word_type const& w) {
    word_type rest = reduce(g, w).letters();
    word_type out;
    out.reserve(rest.size());
    while (!rest.empty()) {
      std::size_t best = rest.size();
      // position i is initial if everything before it commutes with rest[i];
      // once a position fails, later occurrences of that letter fail too.
      GeneratorSet blocked;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        auto const s = rest[i];
        bool       initial = !blocked.contains(s);
        for (std::size_t j = 0; initial && j < i; ++j) {
          initial = g.adjacent(rest[j], s);
        }
        if (initial && (best == rest.size() || s < rest[best])) {
          best = i;
        }
        blocked.insert(s);
      }
      out.push_back(rest[best]);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return ReducedWord(std::move(out));
  }

  bool equal(DefiningGraph const& g, word_type const& w1, word_type const& w2) {
    return normal_form(g, w1) == normal_form(g, w2);
  }

  ParityVector parity_vector(DefiningGraph const& g, word_type const& w) {
    check_word(g, w);
    std::uint64_t bits = 0;
    for (auto s : w) {
      bits ^= std::uint64_t(1) << s;
    }
    return ParityVector(g.size(), bits);
  }

  GeneratorSet support(DefiningGraph const& g, word_type const& w) {
    GeneratorSet out;
    auto const   reduced = reduce(g, w);
    for (auto s : reduced.letters()) {
      out.insert(s);
    }
    return out;
  }

  std::vector<ReducedWord> enumerate_ball(DefiningGraph const& g,
                                          std::size_t          radius,
                                          std::size_t          cap) {
    if (radius > cap) {
      raise(ErrorCode::RADIUS_EXCEEDS_CAP,
            "radius " + std::to_string(radius) + " exceeds cap "
                + std::to_string(cap));
    }
    std::vector<ReducedWord> ball{ReducedWord::certify(g, {})};
    std::vector<word_type>   layer{word_type{}};
    for (std::size_t k = 0; k < radius && !layer.empty(); ++k) {
      // normal forms are unique, so elements one step further out are exactly
      // the products w·s whose normal form has length k + 1
      std::set<word_type> next;
      for (auto const& w : layer) {
        word_type ws = w;
        ws.push_back(0);
        for (std::size_t s = 0; s < g.size(); ++s) {
          ws.back() = static_cast<letter_type>(s);
          auto nf   = normal_form(g, ws);
          if (nf.length() == k + 1) {
            next.insert(nf.letters());
          }
        }
      }
      layer.assign(next.begin(), next.end());
      for (auto const& w : layer) {
        ball.push_back(ReducedWord::certify(g, w));
      }
    }
    return ball;
  }

}  // namespace coxrank
