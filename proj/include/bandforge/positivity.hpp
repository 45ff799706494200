#ifndef BANDFORGE_POSITIVITY_HPP_
#define BANDFORGE_POSITIVITY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "band.hpp"
#include "conjugacy.hpp"
#include "errors.hpp"
#include "factor.hpp"
#include "lcf.hpp"

namespace bandforge {

  //! A canonical factor or the inverse of one.
  struct SignedFactor {
    CanonicalFactor factor;
    bool            negative = false;

    friend bool operator==(SignedFactor const&, SignedFactor const&) = default;
  };

  //! delta^r W_1 ... W_s with each W_i a proper nontrivial canonical factor or
  //! its inverse.
  struct ReducedWord {
    std::size_t               n = 1;
    std::int64_t              r = 0;
    std::vector<SignedFactor> entries;

    static ReducedWord from(LeftCanonicalForm const& x) {
      ReducedWord result{x.strands(), x.delta_power(), {}};
      for (auto const& a : x.factors()) {
        result.entries.push_back({a, false});
      }
      return result;
    }

    //! r >= 0, or every entry negative.
    bool is_terminal() const {
      return r >= 0 || std::all_of(entries.begin(), entries.end(), [](auto const& e) {
               return e.negative;
             });
    }

    friend bool operator==(ReducedWord const&, ReducedWord const&) = default;
  };

  namespace detail {

    inline void check_entries(ReducedWord const& x) {
      for (std::size_t i = 0; i < x.entries.size(); ++i) {
        auto const& a = x.entries[i].factor;
        if (a.strands() != x.n) {
          throw RangeError("entry " + std::to_string(i) + " has "
                           + std::to_string(a.strands()) + " strands, expected "
                           + std::to_string(x.n));
        }
        if (a.is_identity() || a.is_delta()) {
          throw PreconditionError("entry " + std::to_string(i)
                                  + " is the identity or the fundamental element");
        }
      }
    }

  }  // namespace detail

  //! Indices of the positive entries of greatest word length, in order.
  inline std::vector<std::size_t> maximal_positive_entries(ReducedWord const& x) {
    std::vector<std::size_t> result;
    std::size_t              best = 0;
    for (std::size_t i = 0; i < x.entries.size(); ++i) {
      if (x.entries[i].negative) {
        continue;
      }
      std::size_t const len = x.entries[i].factor.word_length();
      if (len > best) {
        best = len;
        result.clear();
      }
      if (len == best) {
        result.push_back(i);
      }
    }
    return result;
  }

  //! One reduction step at a chosen positive entry k: W_k becomes
  //! (delta^-1 W_k) = complement(W_k)^-1, the entries before it are rotated by
  //! tau, and r goes up by one. Terminal inputs are returned unchanged.
  inline ReducedWord reduce_step(ReducedWord x, std::size_t k) {
    detail::check_entries(x);
    if (x.is_terminal()) {
      return x;
    }
    if (k >= x.entries.size() || x.entries[k].negative) {
      throw PreconditionError("entry " + std::to_string(k)
                              + " is not a positive entry");
    }
    for (std::size_t i = 0; i < k; ++i) {
      x.entries[i].factor = tau(x.entries[i].factor, 1);
    }
    x.entries[k] = {complement(x.entries[k].factor), true};
    ++x.r;
    return x;
  }

  //! One step at the leftmost positive entry of maximal length.
  inline ReducedWord reduce_once(ReducedWord const& x) {
    detail::check_entries(x);
    if (x.is_terminal()) {
      return x;
    }
    return reduce_step(x, maximal_positive_entries(x).front());
  }

  inline ReducedWord reduce(ReducedWord x) {
    detail::check_entries(x);
    while (!x.is_terminal()) {
      x = reduce_once(x);
    }
    return x;
  }

  inline ReducedWord reduce(LeftCanonicalForm const& x) {
    return reduce(ReducedWord::from(x));
  }

  inline BraidWord to_word(ReducedWord const& x) {
    BraidWord       result(x.n);
    BraidWord const d = x.r >= 0 ? delta_word(x.n) : delta_word(x.n).inverse();
    for (std::int64_t i = 0; i < std::abs(x.r); ++i) {
      result *= d;
    }
    for (auto const& e : x.entries) {
      auto w = factor_to_word(e.factor);
      result *= e.negative ? w.inverse() : w;
    }
    return result;
  }

  //! Negative letters in the word of a reduced form: |r| (n - 1) for a
  //! negative delta power plus the lengths of the negative entries.
  inline std::int64_t count_negative_bands(ReducedWord const& x) {
    std::int64_t result
        = x.r < 0 ? -x.r * static_cast<std::int64_t>(x.n - 1) : 0;
    for (auto const& e : x.entries) {
      if (e.negative) {
        result += static_cast<std::int64_t>(e.factor.word_length());
      }
    }
    return result;
  }

  inline std::int64_t count_negative_bands(BraidWord const& w) {
    return static_cast<std::int64_t>(w.negative_count());
  }

  //! Bounds on the least number of negative bands in a word for a braid (or,
  //! for nb_conjugacy_report, for any conjugate).
  struct NbReport {
    std::int64_t                nb_lower = 0;
    std::int64_t                nb_upper = 0;
    std::optional<std::int64_t> nb_exact;
    std::int64_t                negative_band_count_of_reduced = 0;
    //! |inf| - min(0, sup) when inf < 0 and n = 3, otherwise 0 when n = 3.
    std::optional<std::int64_t> closed_form;
    ReducedWord                 reduced;
  };

  namespace detail {

    inline NbReport nb_from_lcf(LeftCanonicalForm const& x) {
      std::int64_t const n   = static_cast<std::int64_t>(x.strands());
      std::int64_t const inf = x.inf();
      std::int64_t const sup = x.sup();
      NbReport           report;
      report.reduced                        = reduce(x);
      report.negative_band_count_of_reduced = count_negative_bands(report.reduced);
      report.nb_lower                       = std::max<std::int64_t>(0, -inf);
      if (inf >= 0) {
        report.nb_upper = 0;
      } else {
        report.nb_upper = std::min((n - 2) * -inf - std::min<std::int64_t>(0, sup),
                                   report.negative_band_count_of_reduced);
      }
      if (n == 3) {
        report.closed_form = inf >= 0 ? 0 : -inf - std::min<std::int64_t>(0, sup);
      }
      if (n <= 4 || report.nb_lower == report.nb_upper) {
        report.nb_exact = n <= 4 ? report.negative_band_count_of_reduced
                                 : report.nb_lower;
      }
      return report;
    }

  }  // namespace detail

  //! Exact only for n <= 4 or when the bounds agree.
  inline NbReport nb_report(BraidWord const& w) {
    return detail::nb_from_lcf(lcf(w));
  }

  //! The same report computed from a super summit representative.
  inline NbReport nb_conjugacy_report(BraidWord const& w) {
    return detail::nb_from_lcf(sss_representative(w).representative);
  }

  inline bool is_sqp(BraidWord const& w) {
    return lcf(w).inf() >= 0;
  }

  inline bool is_conj_sqp(BraidWord const& w) {
    return sss_representative(w).inf_conj >= 0;
  }

  //! inf >= -1, necessary for being almost strongly quasipositive but not
  //! sufficient.
  inline bool asqp_necessary(BraidWord const& w) {
    return lcf(w).inf() >= -1;
  }

  struct StrictAsqpVerdict {
    //! Every super summit element has inf = -1 and a factor of word length
    //! n - 2.
    bool criterion_holds = false;
    //! Whether criterion_holds decides strict almost strong quasipositivity
    //! of the class. For n >= 5 a failing criterion with inf[b] = -1 is not
    //! definitive.
    bool definitive = false;
  };

  inline StrictAsqpVerdict is_conj_strictly_asqp(BraidWord const& w,
                                                 SssOptions const& options = {}) {
    std::size_t const n    = w.strands();
    auto const        data = sss_representative(w);
    StrictAsqpVerdict verdict;
    if (n <= 2) {
      // B_1 is trivial; in B_2 the only such class is that of a(1,2)^-1.
      verdict.criterion_holds = n == 2 && data.inf_conj == -1 && data.sup_conj == -1;
      verdict.definitive      = true;
      return verdict;
    }
    if (data.inf_conj != -1) {
      verdict.definitive = true;
      return verdict;
    }
    auto const sss = sss_enumerate(data, options);
    verdict.criterion_holds
        = std::all_of(sss.elements().begin(), sss.elements().end(), [n](auto const& x) {
            return x.inf() == -1
                   && std::any_of(x.factors().begin(), x.factors().end(),
                                  [n](auto const& a) { return a.word_length() == n - 2; });
          });
    verdict.definitive = n <= 4 || verdict.criterion_holds;
    return verdict;
  }

}  // namespace bandforge

#endif  // BANDFORGE_POSITIVITY_HPP_
