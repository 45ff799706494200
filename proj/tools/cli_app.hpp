#ifndef BANDFORGE_TOOLS_CLI_APP_HPP_
#define BANDFORGE_TOOLS_CLI_APP_HPP_

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bandforge/bandforge.hpp"
#include "bandforge/io.hpp"

namespace bandforge::cli {

  namespace detail {

    struct Options {
      std::size_t              n = 0;
      bool                     json_out  = false;
      bool                     enumerate = false;
      bool                     collapse  = false;
      bool                     count     = false;
      bool                     by_class  = false;
      std::optional<std::size_t> budget;
      std::size_t              threads = 1;
      std::string              output;
      std::vector<std::string> words;
    };

    inline std::size_t budget(Options const& o) {
      if (o.budget) {
        return *o.budget;
      }
      if (char const* env = std::getenv("BANDFORGE_BUDGET")) {
        try {
          std::size_t used  = 0;
          auto        value = std::stoull(env, &used);
          if (used == std::string(env).size()) {
            return value;
          }
        } catch (std::exception const&) {
        }
        throw Error("BANDFORGE_BUDGET must be a non-negative integer, got '"
                    + std::string(env) + "'");
      }
      return SssOptions{}.budget;
    }

    inline SssOptions sss_options(Options const& o) {
      SssOptions result;
      result.budget  = budget(o);
      result.threads = o.threads;
      return result;
    }

    inline BraidWord word(Options const& o, std::size_t i = 0) {
      return parse_word(o.words.at(i), o.n);
    }

    inline std::string yes_no(bool b) {
      return b ? "true" : "false";
    }

    inline std::string nb_line(NbReport const& r) {
      return "[" + std::to_string(r.nb_lower) + ", " + std::to_string(r.nb_upper)
             + "]" + (r.nb_exact ? " exact " + std::to_string(*r.nb_exact) : "");
    }

    inline void cmd_lcf(Options const& o, std::ostream& out) {
      auto const x = lcf(word(o));
      if (o.json_out) {
        out << to_json(x).dump() << "\n";
        return;
      }
      auto const w = factor_word_string(x);
      out << to_string(x) << "\n"
          << "word: " << (w.empty() ? "e" : w) << "\n"
          << "inf " << x.inf() << " sup " << x.sup() << " len " << x.length() << "\n";
    }

    inline void cmd_sss(Options const& o, std::ostream& out) {
      auto const data = sss_representative(word(o));
      auto const sss  = sss_enumerate(data, sss_options(o));
      if (o.json_out) {
        json j        = to_json(data);
        j["sss_size"] = sss.size();
        if (o.enumerate) {
          json elements = json::array();
          for (auto const& x : sss.sorted()) {
            elements.push_back(to_json(x));
          }
          j["sss"] = elements;
        }
        out << j.dump() << "\n";
        return;
      }
      out << "representative: " << to_string(data.representative) << "\n"
          << "inf[b] " << data.inf_conj << " sup[b] " << data.sup_conj << "\n"
          << "sss size " << sss.size() << "\n";
      if (o.enumerate) {
        for (auto const& x : sss.sorted()) {
          out << to_string(x) << "\n";
        }
      }
    }

    inline void cmd_conjugate(Options const& o, std::ostream& out) {
      auto const result = are_conjugate(word(o, 0), word(o, 1), sss_options(o));
      if (o.json_out) {
        out << to_json(result).dump() << "\n";
        return;
      }
      out << "conjugate: " << yes_no(result.conjugate) << "\n";
      if (result.witness) {
        auto const w = to_string(*result.witness, Notation::alias);
        out << "witness: " << (w.empty() ? "e" : w) << "\n";
      }
      out << "sss sizes " << result.sss_size_a << " " << result.sss_size_b << "\n";
    }

    inline void cmd_classify(Options const& o, std::ostream& out) {
      auto const r = classify(word(o), sss_options(o));
      if (o.json_out) {
        out << to_json(r).dump() << "\n";
        return;
      }
      out << "inf " << r.inf << " sup " << r.sup << "\n"
          << "inf[b] " << r.inf_conj << " sup[b] " << r.sup_conj << " sss size "
          << r.sss_size << "\n"
          << "sqp: " << yes_no(r.sqp) << "\n"
          << "conj_sqp: " << yes_no(r.conj_sqp) << "\n"
          << "asqp_necessary: " << yes_no(r.asqp_necessary) << "\n"
          << "conj_strictly_asqp: " << yes_no(r.conj_strictly_asqp.criterion_holds)
          << (r.conj_strictly_asqp.definitive ? "" : " (not definitive)") << "\n"
          << "nb: " << nb_line(r.nb) << "\n"
          << "nb[b]: " << nb_line(r.nb_class) << "\n"
          << "fdtc: [" << to_string(r.fdtc.lower) << ", " << to_string(r.fdtc.upper)
          << "]\n";
    }

    inline void cmd_nb(Options const& o, std::ostream& out) {
      auto const w = word(o);
      auto const r = o.by_class ? nb_conjugacy_report(w) : nb_report(w);
      if (o.json_out) {
        out << to_json(r).dump() << "\n";
        return;
      }
      auto const reduced = to_string(to_word(r.reduced), Notation::alias);
      out << "nb: " << nb_line(r) << "\n"
          << "reduced: " << (reduced.empty() ? "e" : reduced) << "\n";
    }

    inline void cmd_fdtc(Options const& o, std::ostream& out) {
      auto const interval = fdtc_bounds(word(o));
      if (o.json_out) {
        out << to_json(interval).dump() << "\n";
        return;
      }
      out << "[" << to_string(interval.lower) << ", " << to_string(interval.upper)
          << "]\n";
      if (interval.lower == interval.upper) {
        out << "exact " << to_string(interval.lower) << "\n";
      }
    }

    inline void cmd_catalog(Options const& o, std::ostream& out) {
      auto const& all = enumerate_factors(o.n);
      if (o.count) {
        out << all.size() << "\n";
        return;
      }
      auto const covers = hasse_covers(o.n);
      if (o.json_out) {
        json factors = json::array();
        for (auto const& a : all) {
          factors.push_back(to_json(a));
        }
        json edges = json::array();
        for (auto const& [i, j] : covers) {
          edges.push_back({i, j});
        }
        out << json({{"n", o.n}, {"count", all.size()}, {"factors", factors}, {"hasse", edges}})
                   .dump()
            << "\n";
        return;
      }
      for (std::size_t i = 0; i < all.size(); ++i) {
        auto const w = to_string(factor_to_word(all[i]), Notation::alias);
        out << i << " " << to_string(all[i]) << " word " << (w.empty() ? "e" : w)
            << " covered by";
        for (auto const& [x, y] : covers) {
          if (x == i) {
            out << " " << y;
          }
        }
        out << "\n";
      }
    }

    inline void cmd_tables(Options const& o, std::ostream& out) {
      auto const tables = pair_tables(o.n, o.collapse);
      if (o.json_out) {
        out << to_json(tables).dump() << "\n";
        return;
      }
      out << to_string(tables);
    }

    inline void cmd_render(Options const& o, std::ostream& out) {
      // A partition, or a word: words equal to a single canonical factor are
      // drawn as that factor, others as their normal form.
      std::string const& target = o.words.at(0);
      auto const         first  = target.find_first_not_of(" \t");
      if (first != std::string::npos && target[first] == '{') {
        out << render_svg(parse_partition(target, o.n));
        return;
      }
      auto const x = lcf(parse_word(target, o.n));
      if (x.delta_power() == 1 && x.length() == 0) {
        out << render_svg(CanonicalFactor::delta(o.n));
      } else if (x.delta_power() == 0 && x.length() == 0) {
        out << render_svg(CanonicalFactor::identity(o.n));
      } else if (x.delta_power() == 0 && x.length() == 1) {
        out << render_svg(x.factors().front());
      } else {
        out << render_svg(x);
      }
    }

  }  // namespace detail

  //! Runs the tool on arguments (without the program name). Returns the exit
  //! status: 0 on success, 1 for bad input, 2 when a budget is exceeded.
  inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dual Garside structure computations on braid groups"};
    app.require_subcommand(1);
    detail::Options o;

    auto add_common = [&o](CLI::App* sub) {
      sub->add_option("-n", o.n, "strand count")->required()->check(CLI::PositiveNumber);
      sub->add_flag("--json", o.json_out, "print JSON");
      sub->add_option("-o", o.output, "write output to FILE");
    };
    auto add_budget = [&o](CLI::App* sub) {
      sub->add_option("--budget", o.budget,
                      "super summit set element budget (default 100000, or $BANDFORGE_BUDGET)");
      sub->add_option("--threads", o.threads, "worker threads for enumeration")
          ->check(CLI::PositiveNumber);
    };

    struct Sub {
      char const* name;
      char const* help;
      std::size_t words;
      void (*fn)(detail::Options const&, std::ostream&);
    };
    std::vector<Sub> const subs = {
        {"lcf", "left canonical form of a word", 1, detail::cmd_lcf},
        {"sss", "super summit representative and set size", 1, detail::cmd_sss},
        {"conjugate", "test two words for conjugacy", 2, detail::cmd_conjugate},
        {"classify", "positivity report", 1, detail::cmd_classify},
        {"nb", "negative band number bounds", 1, detail::cmd_nb},
        {"fdtc", "fractional Dehn twist coefficient bounds", 1, detail::cmd_fdtc},
        {"catalog", "canonical factors with their Hasse diagram", 0, detail::cmd_catalog},
        {"tables", "left weighting of all pairs of proper factors", 0, detail::cmd_tables},
        {"render", "SVG of a partition {..} or of the normal form of a word", 1,
         detail::cmd_render},
    };
    std::vector<CLI::App*> apps;
    for (auto const& s : subs) {
      auto* sub = app.add_subcommand(s.name, s.help);
      add_common(sub);
      if (s.words > 0) {
        sub->add_option("words", o.words, s.words == 1 ? "braid word" : "two braid words")
            ->required()
            ->expected(static_cast<int>(s.words));
      }
      apps.push_back(sub);
    }
    add_budget(apps[1]);
    add_budget(apps[2]);
    add_budget(apps[3]);
    apps[1]->add_flag("--enumerate", o.enumerate, "list every element");
    apps[4]->add_flag("--class", o.by_class, "bounds for the conjugacy class");
    apps[6]->add_flag("--count", o.count, "print only the number of factors");
    apps[7]->add_flag("--collapse", o.collapse, "one pair per rotation class");

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (CLI::ParseError const& e) {
      return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (!apps[i]->parsed()) {
        continue;
      }
      std::ostringstream buffer;
      try {
        subs[i].fn(o, buffer);
      } catch (BudgetExceeded const& e) {
        err << "error: " << e.what() << "\n";
        return 2;
      } catch (std::exception const& e) {
        err << "error: " << e.what() << "\n";
        return 1;
      }
      if (o.output.empty()) {
        out << buffer.str();
      } else {
        std::ofstream file(o.output, std::ios::binary);
        if (!file) {
          err << "error: cannot write " << o.output << "\n";
          return 1;
        }
        file << buffer.str();
      }
      return 0;
    }
    return 1;
  }

}  // namespace bandforge::cli

#endif  // BANDFORGE_TOOLS_CLI_APP_HPP_
