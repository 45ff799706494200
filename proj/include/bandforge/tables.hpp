#ifndef BANDFORGE_TABLES_HPP_
#define BANDFORGE_TABLES_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "factor.hpp"
#include "lcf.hpp"

namespace bandforge {

  //! An ordered pair (A, B) of proper nontrivial factors with A != B and its
  //! left weighting (A', B').
  struct PairRow {
    CanonicalFactor a;
    CanonicalFactor b;
    CanonicalFactor a_out;
    CanonicalFactor b_out;
    bool            left_weighted = false;
    //! Number of pairs in the rotation class of (A, B).
    std::size_t orbit_size = 1;
  };

  struct PairTables {
    //! R(A) n S(B) nonempty.
    std::vector<PairRow> increasable;
    //! R(A) n S(B) empty.
    std::vector<PairRow> left_weighted;
  };

  namespace detail {

    // Single edges, then disjoint edges, then larger polygons.
    inline auto display_key(CanonicalFactor const& a) {
      return std::make_tuple(a.word_length(), -static_cast<long>(a.blocks().size()),
                             a.labels());
    }

    inline auto pair_key(CanonicalFactor const& a, CanonicalFactor const& b) {
      return std::make_tuple(display_key(a), display_key(b));
    }

  }  // namespace detail

  //! Every pair, or with collapse one pair per class under simultaneous
  //! rotation by tau. Rows are sorted by the shapes of A then B.
  inline PairTables pair_tables(std::size_t n, bool collapse) {
    auto const& all = enumerate_factors(n);
    std::vector<CanonicalFactor> proper;
    for (auto const& a : all) {
      if (!a.is_identity() && !a.is_delta()) {
        proper.push_back(a);
      }
    }
    std::vector<PairRow> rows;
    for (auto const& a : proper) {
      for (auto const& b : proper) {
        if (a == b) {
          continue;
        }
        std::vector<std::pair<CanonicalFactor, CanonicalFactor>> orbit;
        for (std::size_t k = 0; k < n; ++k) {
          std::pair p(tau(a, static_cast<std::int64_t>(k)),
                      tau(b, static_cast<std::int64_t>(k)));
          if (std::find(orbit.begin(), orbit.end(), p) == orbit.end()) {
            orbit.push_back(std::move(p));
          }
        }
        if (collapse) {
          auto best = std::min_element(orbit.begin(), orbit.end(), [](auto const& x, auto const& y) {
            return detail::pair_key(x.first, x.second) < detail::pair_key(y.first, y.second);
          });
          if (best->first != a || best->second != b) {
            continue;
          }
        }
        auto [x, y] = left_weight_pair(a, b);
        PairRow row{a, b, x, y, x == a, orbit.size()};
        rows.push_back(std::move(row));
      }
    }
    std::sort(rows.begin(), rows.end(), [](auto const& x, auto const& y) {
      return detail::pair_key(x.a, x.b) < detail::pair_key(y.a, y.b);
    });
    PairTables result;
    for (auto& row : rows) {
      (row.left_weighted ? result.left_weighted : result.increasable).push_back(std::move(row));
    }
    return result;
  }

  //! One line per row: "A B => A' B'" for increasable pairs and "A B" for left
  //! weighted ones, factors written as partitions.
  inline std::string to_string(PairTables const& tables) {
    std::string out = "# increasable: R(A) & S(B) nonempty ("
                      + std::to_string(tables.increasable.size()) + " rows)\n";
    for (auto const& row : tables.increasable) {
      out += to_string(row.a) + " " + to_string(row.b) + " => " + to_string(row.a_out)
             + " " + to_string(row.b_out) + "\n";
    }
    out += "# left weighted: R(A) & S(B) empty, A != B ("
           + std::to_string(tables.left_weighted.size()) + " rows)\n";
    for (auto const& row : tables.left_weighted) {
      out += to_string(row.a) + " " + to_string(row.b) + "\n";
    }
    return out;
  }

}  // namespace bandforge

#endif  // BANDFORGE_TABLES_HPP_
