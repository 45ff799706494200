#ifndef BANDFORGE_FDTC_HPP_
#define BANDFORGE_FDTC_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

#include "band.hpp"
#include "conjugacy.hpp"

namespace bandforge {

  using Rational = boost::rational<std::int64_t>;

  //! [inf[b] / n, sup[b] / n], which contains the fractional Dehn twist
  //! coefficient of b.
  struct FdtcInterval {
    Rational lower;
    Rational upper;

    bool contains(Rational const& c) const {
      return lower <= c && c <= upper;
    }

    friend bool operator==(FdtcInterval const&, FdtcInterval const&) = default;
  };

  inline FdtcInterval fdtc_bounds(SummitData const& data) {
    auto const n = static_cast<std::int64_t>(data.representative.strands());
    return {Rational(data.inf_conj, n), Rational(data.sup_conj, n)};
  }

  inline FdtcInterval fdtc_bounds(BraidWord const& w) {
    return fdtc_bounds(sss_representative(w));
  }

  //! The coefficient itself when the interval is a single point.
  inline std::optional<Rational> fdtc_exact_if_pinched(BraidWord const& w) {
    auto const interval = fdtc_bounds(w);
    if (interval.lower == interval.upper) {
      return interval.lower;
    }
    return std::nullopt;
  }

  //! "p/q", or "p" for integers.
  inline std::string to_string(Rational const& x) {
    if (x.denominator() == 1) {
      return std::to_string(x.numerator());
    }
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
  }

}  // namespace bandforge

#endif  // BANDFORGE_FDTC_HPP_
