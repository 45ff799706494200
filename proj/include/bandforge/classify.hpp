#ifndef BANDFORGE_CLASSIFY_HPP_
#define BANDFORGE_CLASSIFY_HPP_

#include <cstddef>
#include <cstdint>

#include "band.hpp"
#include "conjugacy.hpp"
#include "fdtc.hpp"
#include "lcf.hpp"
#include "positivity.hpp"

namespace bandforge {

  //! Positivity data of a braid and of its conjugacy class.
  struct ClassificationReport {
    std::int64_t      inf      = 0;
    std::int64_t      sup      = 0;
    std::int64_t      inf_conj = 0;
    std::int64_t      sup_conj = 0;
    std::size_t       sss_size = 0;
    bool              sqp      = false;
    bool              conj_sqp = false;
    bool              asqp_necessary = false;
    StrictAsqpVerdict conj_strictly_asqp;
    NbReport          nb;
    NbReport          nb_class;
    FdtcInterval      fdtc;
  };

  inline ClassificationReport classify(BraidWord const& w, SssOptions const& options = {}) {
    ClassificationReport report;
    auto const           x    = lcf(w);
    auto const           data = sss_representative(x);
    report.inf                = x.inf();
    report.sup                = x.sup();
    report.inf_conj           = data.inf_conj;
    report.sup_conj           = data.sup_conj;
    report.sss_size           = sss_enumerate(data, options).size();
    report.sqp                = x.inf() >= 0;
    report.conj_sqp           = data.inf_conj >= 0;
    report.asqp_necessary     = x.inf() >= -1;
    report.conj_strictly_asqp = is_conj_strictly_asqp(w, options);
    report.nb                 = detail::nb_from_lcf(x);
    report.nb_class           = detail::nb_from_lcf(data.representative);
    report.fdtc               = fdtc_bounds(data);
    return report;
  }

}  // namespace bandforge

#endif  // BANDFORGE_CLASSIFY_HPP_
