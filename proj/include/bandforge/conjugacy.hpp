#ifndef BANDFORGE_CONJUGACY_HPP_
#define BANDFORGE_CONJUGACY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "band.hpp"
#include "errors.hpp"
#include "factor.hpp"
#include "lcf.hpp"

namespace bandforge {

  //! A conjugate q^-1 X q of some X, together with q.
  struct Conjugation {
    LeftCanonicalForm result;
    BraidWord         conjugator;
  };

  //! delta^r A_2 ... A_k tau^-r(A_1), conjugating by q = tau^-r(A_1). The
  //! identity operation when the canonical length is 0.
  inline Conjugation cycling_step(LeftCanonicalForm const& x) {
    std::size_t const n = x.strands();
    if (x.length() == 0) {
      return {x, BraidWord(n)};
    }
    auto const                   q = tau(x.factors().front(), -x.delta_power());
    std::vector<CanonicalFactor> factors(x.factors().begin() + 1, x.factors().end());
    factors.push_back(q);
    return {normal_form(n, x.delta_power(), factors), factor_to_word(q)};
  }

  //! delta^r tau^r(A_k) A_1 ... A_(k-1), conjugating by q = A_k^-1. The
  //! identity operation when the canonical length is 0.
  inline Conjugation decycling_step(LeftCanonicalForm const& x) {
    std::size_t const n = x.strands();
    if (x.length() == 0) {
      return {x, BraidWord(n)};
    }
    std::vector<CanonicalFactor> factors;
    factors.reserve(x.length());
    factors.push_back(tau(x.factors().back(), x.delta_power()));
    factors.insert(factors.end(), x.factors().begin(), x.factors().end() - 1);
    return {normal_form(n, x.delta_power(), factors),
            factor_to_word(x.factors().back()).inverse()};
  }

  inline LeftCanonicalForm cycling(LeftCanonicalForm const& x) {
    return cycling_step(x).result;
  }

  inline LeftCanonicalForm decycling(LeftCanonicalForm const& x) {
    return decycling_step(x).result;
  }

  //! A conjugate of a braid realizing both inf[b] and sup[b]. The stored
  //! conjugator c satisfies representative = c^-1 w c.
  struct SummitData {
    LeftCanonicalForm representative;
    std::int64_t      inf_conj = 0;
    std::int64_t      sup_conj = 0;
    BraidWord         conjugator;
  };

  namespace detail {

    template <typename Step>
    void climb(LeftCanonicalForm& x, BraidWord& c, Step step, bool raise_inf) {
      std::set<LeftCanonicalForm> visited{x};
      while (true) {
        auto next     = step(x);
        bool improved = raise_inf ? next.result.inf() > x.inf()
                                  : next.result.sup() < x.sup();
        c *= next.conjugator;
        x = std::move(next.result);
        if (improved) {
          visited.clear();
        } else if (visited.count(x) != 0) {
          return;
        }
        visited.insert(x);
      }
    }

  }  // namespace detail

  //! Iterated cycling raises inf until a repeat without progress; iterated
  //! decycling then lowers sup the same way.
  inline SummitData sss_representative(LeftCanonicalForm const& start) {
    LeftCanonicalForm x = start;
    BraidWord         c(start.strands());
    detail::climb(x, c, cycling_step, true);
    detail::climb(x, c, decycling_step, false);
    SummitData result;
    result.inf_conj       = x.inf();
    result.sup_conj       = x.sup();
    result.representative = std::move(x);
    result.conjugator     = free_reduce(c);
    return result;
  }

  inline SummitData sss_representative(BraidWord const& w) {
    return sss_representative(lcf(w));
  }

  struct SssOptions {
    //! Largest number of elements before BudgetExceeded is thrown.
    std::size_t budget = 100'000;
    //! Worker threads for each breadth-first level; the result does not
    //! depend on this.
    std::size_t threads = 1;
    //! Largest strand count for which canonical factors are enumerated.
    std::size_t max_strands = default_enumeration_bound;
  };

  //! The super summit set of a braid, in discovery order from the
  //! representative. Element i equals v_i^-1 R v_i, where R is the
  //! representative and v_i is witness(i).
  class SuperSummitSet {
   public:
    SuperSummitSet(SummitData const& data, SssOptions const& options = {})
        : _n(data.representative.strands()) {
      auto const& conjugators = enumerate_factors(_n, options.max_strands);
      std::int64_t const inf = data.inf_conj;
      std::int64_t const sup = data.sup_conj;
      add(data.representative, npos, npos, options.budget);
      std::size_t level_begin = 0;
      while (level_begin < _elements.size()) {
        std::size_t const level_end = _elements.size();
        std::size_t const count     = level_end - level_begin;
        // Candidate (parent, factor) pairs are computed in any order but
        // inserted in index order, so the result is deterministic.
        std::vector<std::vector<std::optional<LeftCanonicalForm>>> found(count);
        auto work = [&](std::size_t first, std::size_t last) {
          for (std::size_t p = first; p < last; ++p) {
            auto& out = found[p];
            out.resize(conjugators.size());
            auto const& x = _elements[level_begin + p];
            for (std::size_t f = 0; f < conjugators.size(); ++f) {
              if (conjugators[f].is_identity()) {
                continue;
              }
              auto y = conjugate_by_factor(x, conjugators[f]);
              if (y.inf() == inf && y.sup() == sup) {
                out[f] = std::move(y);
              }
            }
          }
        };
        std::size_t const threads = std::max<std::size_t>(
            1, std::min(options.threads, count));
        if (threads == 1) {
          work(0, count);
        } else {
          std::vector<std::thread> pool;
          std::size_t const        chunk = (count + threads - 1) / threads;
          for (std::size_t t = 0; t < threads; ++t) {
            std::size_t const first = t * chunk;
            std::size_t const last  = std::min(count, first + chunk);
            if (first < last) {
              pool.emplace_back(work, first, last);
            }
          }
          for (auto& th : pool) {
            th.join();
          }
        }
        for (std::size_t p = 0; p < count; ++p) {
          for (std::size_t f = 0; f < found[p].size(); ++f) {
            if (found[p][f]) {
              add(std::move(*found[p][f]), level_begin + p, f, options.budget);
            }
          }
        }
        level_begin = level_end;
      }
    }

    std::size_t strands() const noexcept {
      return _n;
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }

    std::vector<LeftCanonicalForm> const& elements() const noexcept {
      return _elements;
    }

    std::optional<std::size_t> find(LeftCanonicalForm const& x) const {
      auto it = _index.find(x);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    bool contains(LeftCanonicalForm const& x) const {
      return _index.count(x) != 0;
    }

    //! v with element(i) = v^-1 R v for the representative R = element(0).
    BraidWord witness(std::size_t i) const {
      std::vector<std::size_t> path;
      while (_parent[i] != npos) {
        path.push_back(_via[i]);
        i = _parent[i];
      }
      auto const& conjugators = enumerate_factors(_n, std::max(_n, default_enumeration_bound));
      BraidWord   result(_n);
      for (auto it = path.rbegin(); it != path.rend(); ++it) {
        result *= factor_to_word(conjugators[*it]);
      }
      return result;
    }

    //! The set sorted by the total order on normal forms.
    std::vector<LeftCanonicalForm> sorted() const {
      auto result = _elements;
      std::sort(result.begin(), result.end());
      return result;
    }

   private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    void add(LeftCanonicalForm x, std::size_t parent, std::size_t via,
             std::size_t budget) {
      if (_index.count(x) != 0) {
        return;
      }
      if (_elements.size() >= budget) {
        throw BudgetExceeded(budget, _elements.size());
      }
      _index.emplace(x, _elements.size());
      _elements.push_back(std::move(x));
      _parent.push_back(parent);
      _via.push_back(via);
    }

    std::size_t                                                          _n;
    std::vector<LeftCanonicalForm>                                       _elements;
    std::vector<std::size_t>                                             _parent;
    std::vector<std::size_t>                                             _via;
    std::unordered_map<LeftCanonicalForm, std::size_t, LeftCanonicalFormHash> _index;
  };

  inline SuperSummitSet sss_enumerate(SummitData const& data,
                                      SssOptions const& options = {}) {
    return SuperSummitSet(data, options);
  }

  struct ConjugacyResult {
    bool conjugate = false;
    //! v with v^-1 w1 v = w2 when conjugate.
    std::optional<BraidWord> witness;
    std::size_t              sss_size_a = 0;
    std::size_t              sss_size_b = 0;
  };

  inline ConjugacyResult are_conjugate(BraidWord const& w1, BraidWord const& w2,
                                       SssOptions const& options = {}) {
    if (w1.strands() != w2.strands()) {
      throw RangeError("cannot compare braids on " + std::to_string(w1.strands())
                       + " and " + std::to_string(w2.strands()) + " strands");
    }
    auto const      a = sss_representative(w1);
    auto const      b = sss_representative(w2);
    auto const      sa = sss_enumerate(a, options);
    auto const      sb = sss_enumerate(b, options);
    ConjugacyResult result;
    result.sss_size_a = sa.size();
    result.sss_size_b = sb.size();
    auto const i      = sa.find(b.representative);
    if (!i) {
      return result;
    }
    // a.rep = c1^-1 w1 c1, element i = v^-1 a.rep v, b.rep = c2^-1 w2 c2.
    result.conjugate = true;
    result.witness   = free_reduce(a.conjugator * sa.witness(*i) * b.conjugator.inverse());
    return result;
  }

}  // namespace bandforge

#endif  // BANDFORGE_CONJUGACY_HPP_
