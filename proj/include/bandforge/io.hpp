#ifndef BANDFORGE_IO_HPP_
#define BANDFORGE_IO_HPP_

// JSON views of library values. Needs nlohmann/json (vendored as json.hpp).

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "band.hpp"
#include "classify.hpp"
#include "conjugacy.hpp"
#include "factor.hpp"
#include "fdtc.hpp"
#include "lcf.hpp"
#include "positivity.hpp"
#include "tables.hpp"

namespace bandforge {

  using json = nlohmann::json;

  //! The word of the factors A_1 ... A_k, without the delta power, in alias
  //! notation when n = 4.
  inline std::string factor_word_string(LeftCanonicalForm const& x) {
    BraidWord w(x.strands());
    for (auto const& a : x.factors()) {
      w *= factor_to_word(a);
    }
    return to_string(w, Notation::alias);
  }

  //! Sorted non-singleton blocks.
  inline json to_json(CanonicalFactor const& a) {
    json result = json::array();
    for (auto const& b : a.blocks()) {
      result.push_back(b);
    }
    return result;
  }

  inline json to_json(LeftCanonicalForm const& x) {
    json factors = json::array();
    for (auto const& a : x.factors()) {
      factors.push_back(to_json(a));
    }
    return {{"n", x.strands()},
            {"inf", x.inf()},
            {"sup", x.sup()},
            {"len", x.length()},
            {"delta_power", x.delta_power()},
            {"factors", factors},
            {"word", factor_word_string(x)}};
  }

  inline json to_json(ReducedWord const& x) {
    json entries = json::array();
    for (auto const& e : x.entries) {
      entries.push_back({{"negative", e.negative}, {"blocks", to_json(e.factor)}});
    }
    return {{"delta_power", x.r},
            {"entries", entries},
            {"word", to_string(to_word(x), Notation::alias)}};
  }

  inline json optional_json(std::optional<std::int64_t> const& x) {
    return x ? json(*x) : json(nullptr);
  }

  inline json to_json(NbReport const& report) {
    json result = {{"lower", report.nb_lower},
                   {"upper", report.nb_upper},
                   {"exact", optional_json(report.nb_exact)},
                   {"reduced_negative_bands", report.negative_band_count_of_reduced},
                   {"reduced", to_json(report.reduced)}};
    if (report.closed_form) {
      result["closed_form"] = *report.closed_form;
    }
    return result;
  }

  inline json to_json(SummitData const& data) {
    return {{"representative", to_json(data.representative)},
            {"inf_conj", data.inf_conj},
            {"sup_conj", data.sup_conj},
            {"conjugator", to_string(data.conjugator, Notation::alias)}};
  }

  inline json to_json(FdtcInterval const& interval) {
    json exact = nullptr;
    if (interval.lower == interval.upper) {
      exact = to_string(interval.lower);
    }
    return {{"lower", to_string(interval.lower)},
            {"upper", to_string(interval.upper)},
            {"exact", exact}};
  }

  inline json to_json(ConjugacyResult const& result) {
    json witness = nullptr;
    if (result.witness) {
      witness = to_string(*result.witness, Notation::alias);
    }
    return {{"conjugate", result.conjugate},
            {"witness", witness},
            {"sss_size_a", result.sss_size_a},
            {"sss_size_b", result.sss_size_b}};
  }

  inline json to_json(ClassificationReport const& report) {
    return {{"inf", report.inf},
            {"sup", report.sup},
            {"inf_conj", report.inf_conj},
            {"sup_conj", report.sup_conj},
            {"sss_size", report.sss_size},
            {"sqp", report.sqp},
            {"conj_sqp", report.conj_sqp},
            {"asqp_necessary", report.asqp_necessary},
            {"conj_strictly_asqp", report.conj_strictly_asqp.criterion_holds},
            {"conj_strictly_asqp_definitive", report.conj_strictly_asqp.definitive},
            {"nb",
             {{"lower", report.nb.nb_lower},
              {"upper", report.nb.nb_upper},
              {"exact", optional_json(report.nb.nb_exact)}}},
            {"nb_class",
             {{"lower", report.nb_class.nb_lower},
              {"upper", report.nb_class.nb_upper},
              {"exact", optional_json(report.nb_class.nb_exact)}}},
            {"fdtc", to_json(report.fdtc)}};
  }

  inline json to_json(PairTables const& tables) {
    auto rows = [](std::vector<PairRow> const& list, bool with_output) {
      json out = json::array();
      for (auto const& row : list) {
        json r = {{"a", to_json(row.a)}, {"b", to_json(row.b)}, {"orbit_size", row.orbit_size}};
        if (with_output) {
          r["a_out"] = to_json(row.a_out);
          r["b_out"] = to_json(row.b_out);
        }
        out.push_back(std::move(r));
      }
      return out;
    };
    return {{"increasable", rows(tables.increasable, true)},
            {"left_weighted", rows(tables.left_weighted, false)}};
  }

}  // namespace bandforge

#endif  // BANDFORGE_IO_HPP_
