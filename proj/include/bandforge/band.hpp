#ifndef BANDFORGE_BAND_HPP_
#define BANDFORGE_BAND_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace bandforge {

  //! A band generator a_{t,s} (s < t) or its inverse. Strands are numbered
  //! from 1.
  struct BandLetter {
    std::size_t t       = 2;
    std::size_t s       = 1;
    bool        inverse = false;

    BandLetter() = default;

    //! The two strand indices may be given in either order.
    BandLetter(std::size_t i, std::size_t j, bool inv = false)
        : t(std::max(i, j)), s(std::min(i, j)), inverse(inv) {
      if (i == j) {
        throw PreconditionError("band generator needs two distinct strands, got "
                                + std::to_string(i) + " twice");
      }
    }

    BandLetter inverted() const {
      return BandLetter(t, s, !inverse);
    }

    BandLetter positive() const {
      return BandLetter(t, s, false);
    }

    friend bool operator==(BandLetter const&, BandLetter const&) = default;
    friend auto operator<=>(BandLetter const& x, BandLetter const& y) {
      return std::tie(x.s, x.t, x.inverse) <=> std::tie(y.s, y.t, y.inverse);
    }
  };

  //! A finite sequence of band letters on a fixed number of strands.
  class BraidWord {
   public:
    BraidWord() = default;

    explicit BraidWord(std::size_t n) : _n(n) {
      if (n == 0) {
        throw RangeError("strand count must be at least 1");
      }
    }

    BraidWord(std::size_t n, std::vector<BandLetter> letters)
        : BraidWord(n) {
      for (auto const& x : letters) {
        check(x);
      }
      _letters = std::move(letters);
    }

    std::size_t strands() const noexcept {
      return _n;
    }

    std::vector<BandLetter> const& letters() const noexcept {
      return _letters;
    }

    std::size_t size() const noexcept {
      return _letters.size();
    }

    bool empty() const noexcept {
      return _letters.empty();
    }

    BandLetter const& operator[](std::size_t i) const {
      return _letters[i];
    }

    auto begin() const noexcept {
      return _letters.cbegin();
    }

    auto end() const noexcept {
      return _letters.cend();
    }

    void push_back(BandLetter const& x) {
      check(x);
      _letters.push_back(x);
    }

    BraidWord& operator*=(BraidWord const& other) {
      if (other._n != _n) {
        throw RangeError("cannot multiply braids on " + std::to_string(_n)
                         + " and " + std::to_string(other._n) + " strands");
      }
      _letters.insert(_letters.end(), other._letters.begin(), other._letters.end());
      return *this;
    }

    friend BraidWord operator*(BraidWord x, BraidWord const& y) {
      x *= y;
      return x;
    }

    //! The formal inverse: letters reversed and inverted.
    BraidWord inverse() const {
      BraidWord result(_n);
      result._letters.reserve(_letters.size());
      for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
        result._letters.push_back(it->inverted());
      }
      return result;
    }

    bool is_positive() const noexcept {
      return std::none_of(_letters.begin(), _letters.end(), [](auto const& x) {
        return x.inverse;
      });
    }

    std::size_t negative_count() const noexcept {
      return std::count_if(_letters.begin(), _letters.end(), [](auto const& x) {
        return x.inverse;
      });
    }

    friend bool operator==(BraidWord const&, BraidWord const&) = default;

   private:
    void check(BandLetter const& x) const {
      if (x.s < 1 || x.t > _n || x.s >= x.t) {
        throw RangeError("band a(" + std::to_string(x.s) + ","
                         + std::to_string(x.t) + ") out of range for "
                         + std::to_string(_n) + " strands");
      }
    }

    std::size_t             _n = 1;
    std::vector<BandLetter> _letters;
  };

  //! The descending word a_{n,n-1} ... a_{2,1} of the fundamental element.
  inline BraidWord delta_word(std::size_t n) {
    BraidWord result(n);
    for (std::size_t t = n; t >= 2; --t) {
      result.push_back(BandLetter(t, t - 1));
    }
    return result;
  }

  //! Cancels adjacent pairs x x^-1 until none remain.
  inline BraidWord free_reduce(BraidWord const& w) {
    std::vector<BandLetter> stack;
    for (auto const& x : w) {
      if (!stack.empty() && stack.back() == x.inverted()) {
        stack.pop_back();
      } else {
        stack.push_back(x);
      }
    }
    return BraidWord(w.strands(), std::move(stack));
  }

  //! A signed Artin generator sigma_i^{+-1}.
  struct ArtinLetter {
    std::size_t i       = 1;
    bool        inverse = false;
  };

  //! sigma_i maps to a_{i+1,i}.
  inline BraidWord artin_to_band(std::vector<ArtinLetter> const& word,
                                 std::size_t                     n) {
    BraidWord result(n);
    for (auto const& x : word) {
      if (x.i < 1 || x.i + 1 > n) {
        throw RangeError("Artin generator s" + std::to_string(x.i)
                         + " out of range for " + std::to_string(n)
                         + " strands");
      }
      result.push_back(BandLetter(x.i + 1, x.i, x.inverse));
    }
    return result;
  }

  //! Letters act left to right on strand positions. Entry i - 1 of the result
  //! is the final position of the strand that starts at position i; for the
  //! fundamental element of B_4 this is 1->2->3->4->1.
  inline std::vector<std::size_t> permutation(BraidWord const& w) {
    std::size_t const        n = w.strands();
    std::vector<std::size_t> at(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      at[i] = i;
    }
    for (auto const& x : w) {
      std::swap(at[x.s], at[x.t]);
    }
    std::vector<std::size_t> result(n);
    for (std::size_t pos = 1; pos <= n; ++pos) {
      result[at[pos] - 1] = pos;
    }
    return result;
  }

  inline std::int64_t writhe(BraidWord const& w) {
    return static_cast<std::int64_t>(w.size())
           - 2 * static_cast<std::int64_t>(w.negative_count());
  }

  enum class Notation {
    //! a(s,t) and A(s,t) for every n.
    band,
    //! a1..a4, b1, b2 (upper case for inverses) when n = 4, band otherwise.
    alias
  };

  namespace detail {

    inline char const* b4_alias(std::size_t s, std::size_t t) {
      static constexpr char const* names[5][5]
          = {{},
             {nullptr, nullptr, "1", "b1", "4"},
             {nullptr, nullptr, nullptr, "2", "b2"},
             {nullptr, nullptr, nullptr, nullptr, "3"},
             {}};
      return names[s][t];
    }

    inline std::string render_letter(BandLetter const& x, Notation notation,
                                     std::size_t n) {
      if (notation == Notation::alias && n == 4) {
        std::string name = b4_alias(x.s, x.t);
        if (name.size() == 1) {
          name.insert(name.begin(), 'a');
        }
        if (x.inverse) {
          name[0] = static_cast<char>(std::toupper(name[0]));
        }
        return name;
      }
      return std::string(x.inverse ? "A(" : "a(") + std::to_string(x.s) + ","
             + std::to_string(x.t) + ")";
    }

    class WordParser {
     public:
      WordParser(std::string_view text, std::size_t n) : _text(text), _n(n) {}

      BraidWord parse() {
        BraidWord result = sequence();
        skip_space();
        if (_pos != _text.size()) {
          if (_text[_pos] == ')') {
            throw ParseError("unbalanced ')'", _pos);
          }
          throw ParseError("unexpected character '" + std::string(1, _text[_pos])
                               + "'",
                           _pos);
        }
        return result;
      }

     private:
      BraidWord sequence() {
        BraidWord result(_n);
        while (true) {
          skip_space();
          if (_pos == _text.size() || _text[_pos] == ')') {
            return result;
          }
          result *= power(factor());
        }
      }

      BraidWord factor() {
        std::size_t const start = _pos;
        char const        c     = _text[_pos];
        if (c == '(') {
          ++_pos;
          BraidWord inner = sequence();
          if (_pos == _text.size()) {
            throw ParseError("missing ')'", start);
          }
          ++_pos;
          return inner;
        }
        bool const inv = std::isupper(static_cast<unsigned char>(c));
        char const lc  = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        ++_pos;
        if ((lc == 'a' || lc == 'b') && peek() == '(') {
          ++_pos;
          std::size_t const i = unsigned_int();
          expect(',');
          std::size_t const j = unsigned_int();
          expect(')');
          return band(i, j, inv, start);
        }
        if ((lc == 'a' || lc == 'b') && is_digit(peek())) {
          std::size_t const k = unsigned_int();
          if (_n != 4) {
            throw ParseError("generator aliases a1..a4, b1, b2 need 4 strands",
                             start);
          }
          static constexpr std::size_t a_pairs[5][2]
              = {{0, 0}, {1, 2}, {2, 3}, {3, 4}, {1, 4}};
          static constexpr std::size_t b_pairs[3][2] = {{0, 0}, {1, 3}, {2, 4}};
          if (lc == 'a' && k >= 1 && k <= 4) {
            return band(a_pairs[k][0], a_pairs[k][1], inv, start);
          }
          if (lc == 'b' && k >= 1 && k <= 2) {
            return band(b_pairs[k][0], b_pairs[k][1], inv, start);
          }
          throw RangeError("unknown generator alias '"
                           + std::string(_text.substr(start, _pos - start))
                           + "' at position " + std::to_string(start));
        }
        if (lc == 's' && is_digit(peek())) {
          std::size_t const i = unsigned_int();
          if (i < 1 || i + 1 > _n) {
            throw RangeError("Artin generator '"
                             + std::string(_text.substr(start, _pos - start))
                             + "' at position " + std::to_string(start)
                             + " out of range for " + std::to_string(_n)
                             + " strands");
          }
          return artin_to_band({{i, inv}}, _n);
        }
        if (lc == 'd') {
          return inv ? delta_word(_n).inverse() : delta_word(_n);
        }
        if (c == 'e') {
          return BraidWord(_n);
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'",
                         start);
      }

      BraidWord power(BraidWord const& base) {
        if (peek() != '^') {
          return base;
        }
        ++_pos;
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
          negative = peek() == '-';
          ++_pos;
        }
        std::size_t const k = unsigned_int();
        BraidWord const   unit = negative ? base.inverse() : base;
        BraidWord         result(_n);
        for (std::size_t i = 0; i < k; ++i) {
          result *= unit;
        }
        return result;
      }

      BraidWord band(std::size_t i, std::size_t j, bool inv, std::size_t start) {
        if (i < 1 || j < 1 || i > _n || j > _n || i == j) {
          throw RangeError("band '" + std::string(_text.substr(start, _pos - start))
                           + "' at position " + std::to_string(start)
                           + " out of range for " + std::to_string(_n)
                           + " strands");
        }
        BraidWord result(_n);
        result.push_back(BandLetter(i, j, inv));
        return result;
      }

      std::size_t unsigned_int() {
        std::size_t const start = _pos;
        std::size_t       value = 0;
        while (is_digit(peek())) {
          value = value * 10 + static_cast<std::size_t>(_text[_pos] - '0');
          if (value > 1'000'000) {
            throw ParseError("integer too large", start);
          }
          ++_pos;
        }
        if (_pos == start) {
          throw ParseError("expected an integer", start);
        }
        return value;
      }

      void expect(char c) {
        if (peek() != c) {
          throw ParseError("expected '" + std::string(1, c) + "'", _pos);
        }
        ++_pos;
      }

      void skip_space() {
        while (_pos < _text.size()
               && (std::isspace(static_cast<unsigned char>(_text[_pos]))
                   || _text[_pos] == '*' || _text[_pos] == '.')) {
          ++_pos;
        }
      }

      char peek() const {
        return _pos < _text.size() ? _text[_pos] : '\0';
      }

      static bool is_digit(char c) {
        return c >= '0' && c <= '9';
      }

      std::string_view _text;
      std::size_t      _n;
      std::size_t      _pos = 0;
    };

  }  // namespace detail

  //! Parses a braid word. Tokens: a(i,j) / A(i,j) (also b(i,j)), s<i> / S<i>
  //! for Artin generators, d / D for the fundamental element and its inverse,
  //! e for the identity, the B_4 aliases a1..a4, b1, b2, and parenthesised
  //! groups. Any token or group may carry a power ^k with k possibly negative.
  inline BraidWord parse_word(std::string_view text, std::size_t n) {
    if (n == 0) {
      throw RangeError("strand count must be at least 1");
    }
    return detail::WordParser(text, n).parse();
  }

  inline std::string to_string(BraidWord const& w,
                               Notation         notation = Notation::band) {
    std::string result;
    for (auto const& x : w) {
      if (!result.empty()) {
        result += ' ';
      }
      result += detail::render_letter(x, notation, w.strands());
    }
    return result;
  }

}  // namespace bandforge

#endif  // BANDFORGE_BAND_HPP_
