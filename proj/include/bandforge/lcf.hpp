#ifndef BANDFORGE_LCF_HPP_
#define BANDFORGE_LCF_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "band.hpp"
#include "errors.hpp"
#include "factor.hpp"

namespace bandforge {

  //! Left weights a pair: moves generators of R(A) n S(B) from B to A until
  //! none remain.
  inline std::pair<CanonicalFactor, CanonicalFactor>
  left_weight_pair(CanonicalFactor a, CanonicalFactor b) {
    detail::check_same_strands(a, b);
    std::size_t const n = a.strands();
    while (true) {
      auto const comp  = complement(a);
      bool       moved = false;
      for (std::size_t s = 1; s <= n && !moved; ++s) {
        for (std::size_t t = s + 1; t <= n && !moved; ++t) {
          if (comp.same_block(s, t) && b.same_block(s, t)) {
            BandLetter const c(t, s);
            a     = merge(a, c);
            b     = split_left(b, c);
            moved = true;
          }
        }
      }
      if (!moved) {
        return {std::move(a), std::move(b)};
      }
    }
  }

  inline bool is_left_weighted(CanonicalFactor const& a, CanonicalFactor const& b) {
    detail::check_same_strands(a, b);
    auto const        comp = complement(a);
    std::size_t const n    = a.strands();
    for (std::size_t s = 1; s <= n; ++s) {
      for (std::size_t t = s + 1; t <= n; ++t) {
        if (comp.same_block(s, t) && b.same_block(s, t)) {
          return false;
        }
      }
    }
    return true;
  }

  //! delta^r A_1 ... A_k with no A_i equal to e or delta and every adjacent
  //! pair left weighted.
  class LeftCanonicalForm {
   public:
    LeftCanonicalForm() = default;

    explicit LeftCanonicalForm(std::size_t n) : _n(n) {
      if (n == 0) {
        throw RangeError("strand count must be at least 1");
      }
    }

    //! Throws PreconditionError unless the data is already in normal form.
    LeftCanonicalForm(std::size_t n, std::int64_t r,
                      std::vector<CanonicalFactor> factors)
        : LeftCanonicalForm(n) {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].strands() != n) {
          throw RangeError("factor on " + std::to_string(factors[i].strands())
                           + " strands in a form on " + std::to_string(n));
        }
        if (factors[i].is_identity() || factors[i].is_delta()) {
          throw PreconditionError("factor " + std::to_string(i)
                                  + " is the identity or the fundamental element");
        }
        if (i > 0 && !is_left_weighted(factors[i - 1], factors[i])) {
          throw PreconditionError("factors " + std::to_string(i - 1) + " and "
                                  + std::to_string(i) + " are not left weighted");
        }
      }
      _r       = r;
      _factors = std::move(factors);
    }

    static LeftCanonicalForm unchecked(std::size_t n, std::int64_t r,
                                       std::vector<CanonicalFactor> factors) {
      LeftCanonicalForm result(n);
      result._r       = r;
      result._factors = std::move(factors);
      return result;
    }

    std::size_t strands() const noexcept {
      return _n;
    }

    std::int64_t delta_power() const noexcept {
      return _r;
    }

    std::vector<CanonicalFactor> const& factors() const noexcept {
      return _factors;
    }

    std::int64_t inf() const noexcept {
      return _r;
    }

    std::int64_t sup() const noexcept {
      return _r + static_cast<std::int64_t>(_factors.size());
    }

    std::size_t length() const noexcept {
      return _factors.size();
    }

    friend bool operator==(LeftCanonicalForm const&, LeftCanonicalForm const&)
        = default;
    friend auto operator<=>(LeftCanonicalForm const&, LeftCanonicalForm const&)
        = default;

   private:
    std::size_t                  _n = 1;
    std::int64_t                 _r = 0;
    std::vector<CanonicalFactor> _factors;
  };

  struct LeftCanonicalFormHash {
    std::size_t operator()(LeftCanonicalForm const& x) const noexcept {
      std::size_t h = static_cast<std::size_t>(x.delta_power()) * 31 + x.strands();
      for (auto const& a : x.factors()) {
        h = h * 0x9e3779b97f4a7c15ULL ^ CanonicalFactorHash()(a);
      }
      return h;
    }
  };

  struct InfSupLen {
    std::int64_t inf;
    std::int64_t sup;
    std::size_t  len;

    friend bool operator==(InfSupLen const&, InfSupLen const&) = default;
  };

  inline InfSupLen inf_sup_len(LeftCanonicalForm const& x) {
    return {x.inf(), x.sup(), x.length()};
  }

  namespace detail {

    //! Mutable normal form used while building: appending a positive factor
    //! on the right, one right-to-left sweep restores left weightedness.
    class NormalFormBuilder {
     public:
      explicit NormalFormBuilder(std::size_t n, std::int64_t r = 0)
          : _n(n), _r(r) {}

      void append(CanonicalFactor const& a) {
        if (a.is_identity()) {
          return;
        }
        _factors.push_back(a);
        for (std::size_t i = _factors.size() - 1; i > 0; --i) {
          auto [x, y] = left_weight_pair(_factors[i - 1], _factors[i]);
          if (x == _factors[i - 1]) {
            break;
          }
          _factors[i - 1] = std::move(x);
          _factors[i]     = std::move(y);
        }
        std::size_t lead = 0;
        while (lead < _factors.size() && _factors[lead].is_delta()) {
          ++lead;
        }
        if (lead > 0) {
          _factors.erase(_factors.begin(), _factors.begin() + lead);
          _r += static_cast<std::int64_t>(lead);
        }
        while (!_factors.empty() && _factors.back().is_identity()) {
          _factors.pop_back();
        }
      }

      //! Right multiplication by delta^-1: X delta^-1 = delta^-1 tau^-1(X).
      void append_delta_inverse() {
        for (auto& a : _factors) {
          a = tau(a, -1);
        }
        --_r;
      }

      void append_letter(BandLetter const& c) {
        auto const g = CanonicalFactor::generator(_n, c);
        if (!c.inverse) {
          append(g);
        } else {
          // c^-1 = complement(c) delta^-1.
          append(complement(g));
          append_delta_inverse();
        }
      }

      LeftCanonicalForm finish() && {
        return LeftCanonicalForm::unchecked(_n, _r, std::move(_factors));
      }

     private:
      std::size_t                  _n;
      std::int64_t                 _r;
      std::vector<CanonicalFactor> _factors;
    };

    //! A step of a general normalization: merges a pair, absorbs a delta, or
    //! drops an identity at the given index.
    struct NormalizationMove {
      enum class Kind { left_weight, absorb_delta, drop_identity };
      Kind        kind;
      std::size_t index;
    };

    inline std::vector<NormalizationMove>
    available_moves(std::vector<CanonicalFactor> const& factors) {
      std::vector<NormalizationMove> moves;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].is_identity()) {
          moves.push_back({NormalizationMove::Kind::drop_identity, i});
        } else if (factors[i].is_delta()) {
          moves.push_back({NormalizationMove::Kind::absorb_delta, i});
        }
        if (i + 1 < factors.size() && !is_left_weighted(factors[i], factors[i + 1])) {
          moves.push_back({NormalizationMove::Kind::left_weight, i});
        }
      }
      return moves;
    }

    //! Normalizes delta^r A_1 ... A_k by applying available moves in the order
    //! picked by choose(number_of_moves), until no move is left. Every order
    //! reaches the same normal form.
    inline LeftCanonicalForm
    normalize_scheduled(std::size_t n, std::int64_t r,
                        std::vector<CanonicalFactor>          factors,
                        std::function<std::size_t(std::size_t)> const& choose) {
      while (true) {
        auto const moves = available_moves(factors);
        if (moves.empty()) {
          return LeftCanonicalForm::unchecked(n, r, std::move(factors));
        }
        auto const& m = moves[choose(moves.size()) % moves.size()];
        switch (m.kind) {
          case NormalizationMove::Kind::drop_identity:
            factors.erase(factors.begin() + m.index);
            break;
          case NormalizationMove::Kind::absorb_delta:
            // X delta = delta tau(X).
            for (std::size_t j = 0; j < m.index; ++j) {
              factors[j] = tau(factors[j], 1);
            }
            factors.erase(factors.begin() + m.index);
            ++r;
            break;
          case NormalizationMove::Kind::left_weight: {
            auto [x, y] = left_weight_pair(factors[m.index], factors[m.index + 1]);
            factors[m.index]     = std::move(x);
            factors[m.index + 1] = std::move(y);
            break;
          }
        }
      }
    }

    //! The factor sequence delta^r A_1 ... A_k of a word before any left
    //! weighting: each negative letter c^-1 becomes complement(c) delta^-1 and
    //! every delta^-1 is moved to the front.
    inline std::pair<std::int64_t, std::vector<CanonicalFactor>>
    raw_factors(BraidWord const& w) {
      std::size_t const            n = w.strands();
      std::vector<CanonicalFactor> factors;
      std::int64_t                 after = 0;
      for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
        auto const g = CanonicalFactor::generator(n, *it);
        if (it->inverse) {
          ++after;
          factors.push_back(tau(complement(g), -after));
        } else {
          factors.push_back(tau(g, -after));
        }
      }
      std::reverse(factors.begin(), factors.end());
      return {-after, std::move(factors)};
    }

  }  // namespace detail

  //! Normal form of delta^r A_1 ... A_k for arbitrary factors A_i.
  inline LeftCanonicalForm normal_form(std::size_t n, std::int64_t r,
                                       std::vector<CanonicalFactor> const& factors) {
    detail::NormalFormBuilder builder(n, r);
    for (auto const& a : factors) {
      if (a.strands() != n) {
        throw RangeError("factor on " + std::to_string(a.strands())
                         + " strands in a form on " + std::to_string(n));
      }
      builder.append(a);
    }
    return std::move(builder).finish();
  }

  //! The left canonical form of a braid word.
  inline LeftCanonicalForm lcf(BraidWord const& w) {
    detail::NormalFormBuilder builder(w.strands());
    for (auto const& c : w) {
      builder.append_letter(c);
    }
    return std::move(builder).finish();
  }

  //! delta^r expands to the descending word (or its inverse, repeated) followed
  //! by the words of the factors.
  inline BraidWord lcf_to_word(LeftCanonicalForm const& x) {
    std::size_t const n = x.strands();
    BraidWord         result(n);
    BraidWord const   d = x.delta_power() >= 0 ? delta_word(n) : delta_word(n).inverse();
    for (std::int64_t i = 0; i < (x.delta_power() >= 0 ? x.delta_power() : -x.delta_power());
         ++i) {
      result *= d;
    }
    for (auto const& a : x.factors()) {
      result *= factor_to_word(a);
    }
    return result;
  }

  inline LeftCanonicalForm operator*(LeftCanonicalForm const& x,
                                     LeftCanonicalForm const& y) {
    if (x.strands() != y.strands()) {
      throw RangeError("cannot multiply braids on different strand counts");
    }
    // delta^r P delta^s Q = delta^(r+s) tau^s(P) Q.
    std::vector<CanonicalFactor> factors;
    for (auto const& a : x.factors()) {
      factors.push_back(tau(a, y.delta_power()));
    }
    factors.insert(factors.end(), y.factors().begin(), y.factors().end());
    return normal_form(x.strands(), x.delta_power() + y.delta_power(), factors);
  }

  inline LeftCanonicalForm inverse(LeftCanonicalForm const& x) {
    return lcf(lcf_to_word(x).inverse());
  }

  //! A^-1 X A for a canonical factor A.
  inline LeftCanonicalForm conjugate_by_factor(LeftCanonicalForm const& x,
                                               CanonicalFactor const&   a) {
    // A^-1 = delta^-1 tau^-1(complement(A)).
    std::int64_t const           r = x.delta_power();
    std::vector<CanonicalFactor> factors;
    factors.reserve(x.length() + 2);
    factors.push_back(tau(complement(a), r - 1));
    factors.insert(factors.end(), x.factors().begin(), x.factors().end());
    factors.push_back(a);
    return normal_form(x.strands(), r - 1, factors);
  }

  //! A B when that product is again a canonical factor.
  inline std::optional<CanonicalFactor> diamond(CanonicalFactor const& a,
                                                CanonicalFactor const& b) {
    auto const x = normal_form(a.strands(), 0, {a, b});
    if (x.delta_power() == 1 && x.length() == 0) {
      return CanonicalFactor::delta(a.strands());
    }
    if (x.delta_power() == 0 && x.length() <= 1) {
      return x.length() == 0 ? CanonicalFactor::identity(a.strands())
                             : x.factors().front();
    }
    return std::nullopt;
  }

  //! "d^r · {..} · {..}" with factors as partitions; "e" for the identity.
  inline std::string to_string(LeftCanonicalForm const& x) {
    std::string result;
    if (x.delta_power() != 0 || x.factors().empty()) {
      result = "d^" + std::to_string(x.delta_power());
    }
    for (auto const& a : x.factors()) {
      if (!result.empty()) {
        result += " · ";
      }
      result += to_string(a);
    }
    return result;
  }

}  // namespace bandforge

#endif  // BANDFORGE_LCF_HPP_
