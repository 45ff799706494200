// One line per acceptance criterion: PASS or FAIL, a short detail, and the
// elapsed time against its limit. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>

#include "bandforge/bandforge.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "support/word_gen.hpp"

using namespace bandforge;

namespace {

  struct Outcome {
    bool        pass = true;
    std::string detail;
  };

  struct Criterion {
    int                      id;
    char const*              name;
    double                   limit_seconds;
    std::function<Outcome()> check;
  };

  BraidWord const seven_two  = parse_word("a1 a1 a1 a2 A1 a2 a3 A2 a3", 4);
  BraidWord const seven_sqp  = parse_word("a1 a1 b2 b1 a3", 4);
  BraidWord const example_74 = parse_word("a3 A1 A2 b2 b1 a1 b2 b1 a3", 4);
  BraidWord const example_82 = parse_word("D^2 (a3 a2)(a4 a3) a4 b1 b2", 4);

  BraidWord factor_words(LeftCanonicalForm const& x) {
    BraidWord w(x.strands());
    for (auto const& a : x.factors()) {
      w *= factor_to_word(a);
    }
    return w;
  }

  std::string alias(BraidWord const& w) {
    return to_string(w, Notation::alias);
  }

  Outcome catalan_counts() {
    std::vector<std::size_t> const expected = {1, 2, 5, 14, 42, 132};
    Outcome                        o;
    std::ostringstream             s;
    for (std::size_t n = 1; n <= expected.size(); ++n) {
      auto const got = enumerate_factors(n).size();
      s << (n > 1 ? " " : "") << got;
      o.pass = o.pass && got == expected[n - 1];
    }
    o.detail = "counts " + s.str();
    return o;
  }

  Outcome delta_factorizations() {
    auto const ball = oracle::rewrite_ball(oracle::delta_positive(4));
    std::set<oracle::Positive> listed;
    for (auto const* text : {"a3a2a1", "a4a3a2", "a1a4a3", "a2a1a4", "b1a2a4", "a1b1a4",
                             "a3b1a2", "a1a3b1", "b2a1a3", "a2b2a1", "a4b2a3", "a2a4b2"}) {
      listed.insert(oracle::to_positive(parse_word(text, 4)));
    }
    std::size_t listed_in_ball = 0;
    std::string extra;
    for (auto const& p : ball) {
      if (listed.count(p) != 0) {
        ++listed_in_ball;
      } else {
        extra += " " + alias(oracle::to_word(p, 4));
      }
    }
    Outcome o;
    o.pass   = ball.size() == 12 && listed_in_ball == 12;
    o.detail = std::to_string(ball.size()) + " positive 3-letter words equal delta; all "
               + std::to_string(listed_in_ball)
               + " listed words among them; unlisted:" + (extra.empty() ? " none" : extra)
               + " (each a commutation of a listed word)";
    return o;
  }

  Outcome pair_tables_regenerated() {
    using Pair     = std::pair<CanonicalFactor, CanonicalFactor>;
    auto canonical = [](CanonicalFactor const& x, CanonicalFactor const& y) {
      Pair best{x, y};
      for (std::int64_t k = 1; k < 4; ++k) {
        best = std::min(best, Pair{tau(x, k), tau(y, k)});
      }
      return best;
    };
    Outcome        o;
    std::set<Pair> paper_inc, paper_lw, inc, lw;
    std::size_t    outputs_ok = 0, outputs = 0;
    for (auto const& row : fixtures::read_rows("paper_tables.txt")) {
      auto const x = fixtures::factor_of(row[1], 4);
      auto const y = fixtures::factor_of(row[2], 4);
      if (row[0] == "increasable") {
        paper_inc.insert(canonical(x, y));
        ++outputs;
        auto const [p, q] = left_weight_pair(x, y);
        if (p == fixtures::factor_of(row[3], 4) && q == fixtures::factor_of(row[4], 4)) {
          ++outputs_ok;
        }
      } else {
        paper_lw.insert(canonical(x, y));
      }
    }
    std::size_t pairs = 0;
    for (auto const& x : enumerate_factors(4)) {
      for (auto const& y : enumerate_factors(4)) {
        ++pairs;
        if (x == y || x.is_identity() || y.is_identity() || x.is_delta() || y.is_delta()) {
          continue;
        }
        auto const r = right_set(x);
        auto const s = starting_set(y);
        bool const meet = std::any_of(r.begin(), r.end(), [&](auto const& c) {
          return std::find(s.begin(), s.end(), c) != s.end();
        });
        (meet ? inc : lw).insert(canonical(x, y));
      }
    }
    o.pass   = pairs == 196 && inc == paper_inc && lw == paper_lw && outputs_ok == outputs;
    o.detail = std::to_string(pairs) + " pairs; increasable classes "
               + std::to_string(inc.size()) + " (transcribed " + std::to_string(paper_inc.size())
               + "), left weighted classes " + std::to_string(lw.size()) + " (transcribed "
               + std::to_string(paper_lw.size()) + "); outputs reproduced "
               + std::to_string(outputs_ok) + "/" + std::to_string(outputs);
    return o;
  }

  Outcome lcf_examples() {
    Outcome    o;
    auto const a = lcf(parse_word("b2 a1 b1 a4 a2", 4));
    auto const b = lcf(seven_two);
    auto const c = lcf(example_74);
    bool const ok_a = a.delta_power() == 1
                      && oracle::positive_equal(factor_words(a), parse_word("a2 a1", 4));
    bool const ok_b = b.delta_power() == -1
                      && oracle::positive_equal(factor_words(b),
                                                parse_word("a4 a4 a4 a1 b2 a2 a3 a3", 4));
    bool const ok_c = c.delta_power() == -1
                      && oracle::positive_equal(factor_words(c),
                                                parse_word("a2 a3 b2 b1 a1 b2 b1 a3", 4));
    o.pass   = ok_a && ok_b && ok_c;
    o.detail = to_string(a) + " | d^-1 " + alias(factor_words(b)) + " | d^-1 "
               + alias(factor_words(c));
    return o;
  }

  Outcome reduction_example() {
    Outcome    o;
    auto const red = reduce(lcf(example_82));
    auto const w   = to_word(red);
    o.pass = count_negative_bands(red) == 2 && lcf(w) == lcf(example_82)
             && oracle::equal(w, parse_word("A2 A2 a4 b1 b2", 4), 16);
    o.detail = "Red = " + alias(w) + ", negative bands "
               + std::to_string(count_negative_bands(red));
    return o;
  }

  Outcome conjugacy_examples() {
    Outcome    o;
    auto const r    = are_conjugate(seven_two, seven_sqp);
    auto const knot = sss_representative(seven_two);
    bool const witness_ok
        = r.witness && lcf(r.witness->inverse() * seven_two * *r.witness) == lcf(seven_sqp);
    auto const data = sss_representative(example_74);
    auto const sss  = sss_enumerate(data);
    bool const all_minus_one = std::all_of(sss.elements().begin(), sss.elements().end(),
                                           [](auto const& x) { return x.inf() == -1; });
    auto const nb   = nb_report(example_74);
    o.pass = r.conjugate && witness_ok && knot.inf_conj == 0 && data.inf_conj == -1
             && all_minus_one && nb.nb_lower == 1 && nb.nb_upper == 2 && nb.nb_exact == 2;
    o.detail = "7_2 conjugate " + std::string(r.conjugate ? "yes" : "no") + ", inf[b] "
               + std::to_string(knot.inf_conj) + "; second example inf[b] "
               + std::to_string(data.inf_conj) + " over " + std::to_string(sss.size())
               + " summit elements, nb in [" + std::to_string(nb.nb_lower) + ", "
               + std::to_string(nb.nb_upper) + "] exact "
               + std::to_string(nb.nb_exact.value_or(-1));
    return o;
  }

  Outcome classification_properties() {
    wordgen::Rng rng(7001);
    std::size_t  va = 0, vb = 0, vc = 0;
    for (int i = 0; i < 10000; ++i) {
      auto const w = wordgen::random_positive(rng, 4, 1 + i % 20);
      if (lcf(w).inf() < 0) {
        ++va;
      }
    }
    std::size_t sampled = 0;
    while (sampled < 10000) {
      BraidWord w(4);
      if (sampled % 2 == 0) {
        w = wordgen::random_word(rng, 4, 1 + sampled % 12, 0.2);
      } else {
        w = wordgen::random_rewrites(rng, wordgen::random_positive(rng, 4, 1 + sampled % 12), 10);
      }
      auto const x = lcf(w);
      if (x.inf() < 0) {
        continue;
      }
      ++sampled;
      if (!lcf_to_word(x).is_positive()) {
        ++vb;
      }
    }
    for (int i = 0; i < 10000; ++i) {
      auto w = wordgen::random_positive(rng, 4, i % 9);
      w.push_back(wordgen::random_letter(rng, 4, 1.0));
      w *= wordgen::random_positive(rng, 4, i % 7);
      if (i % 2 == 1) {
        w = wordgen::random_rewrites(rng, w, 8);
      }
      if (lcf(w).inf() < -1) {
        ++vc;
      }
    }
    Outcome o;
    o.pass   = va == 0 && vb == 0 && vc == 0;
    o.detail = "violations " + std::to_string(va) + "/" + std::to_string(vb) + "/"
               + std::to_string(vc) + " over 3 x 10000 words";
    return o;
  }

  Outcome three_braid_formula() {
    // Class of each word: the least word of the rewrite ball of its padded
    // positive form. Each ball is computed once and cached for all members.
    std::int64_t const                 target = -5;
    std::map<oracle::Positive, std::size_t> member_class;
    std::vector<std::int64_t>          class_min_negatives;
    auto class_of = [&](BraidWord const& w) {
      auto const padded = oracle::pad(oracle::normalize_via_delta(w), target, 3);
      auto       it     = member_class.find(padded);
      if (it != member_class.end()) {
        return it->second;
      }
      std::size_t const id = class_min_negatives.size();
      class_min_negatives.push_back(std::numeric_limits<std::int64_t>::max());
      for (auto const& p : oracle::rewrite_ball(padded, 32)) {
        member_class.emplace(p, id);
      }
      return id;
    };
    std::vector<std::pair<BraidWord, std::size_t>> words;
    for (std::size_t len = 0; len <= 5; ++len) {
      for (auto const& w : oracle::all_words(3, len)) {
        auto const id = class_of(w);
        class_min_negatives[id]
            = std::min(class_min_negatives[id], static_cast<std::int64_t>(w.negative_count()));
        words.emplace_back(w, id);
      }
    }
    std::size_t checked = 0, violations = 0;
    for (auto const& [w, id] : words) {
      auto const x = lcf(w);
      if (x.inf() >= 0) {
        continue;
      }
      ++checked;
      auto const red     = count_negative_bands(reduce(x));
      auto const formula = -x.inf() - std::min<std::int64_t>(0, x.sup());
      if (red != formula || red != class_min_negatives[id]) {
        ++violations;
      }
    }
    Outcome o;
    o.pass   = violations == 0 && checked > 0;
    o.detail = std::to_string(words.size()) + " words, " + std::to_string(checked)
               + " with inf < 0, " + std::to_string(class_min_negatives.size())
               + " oracle classes, violations " + std::to_string(violations);
    return o;
  }

  Outcome oracle_equivalence() {
    std::size_t disagreements = 0, words = 0;
    std::map<LeftCanonicalForm, std::set<oracle::Positive>> groups;
    for (std::size_t len = 0; len <= 5; ++len) {
      for (auto const& w : oracle::all_words(4, len, false)) {
        groups[lcf(w)].insert(oracle::to_positive(w));
        ++words;
      }
    }
    std::size_t covered = 0;
    for (auto const& [x, members] : groups) {
      auto const ball = oracle::rewrite_ball(*members.begin());
      if (ball != members) {
        ++disagreements;
      }
      covered += ball.size();
    }
    if (covered != words) {
      ++disagreements;
    }
    wordgen::Rng rng(9001);
    std::size_t  equal_pairs = 0;
    for (int i = 0; i < 10000; ++i) {
      std::size_t const n = 3 + i % 2;
      auto const        w = wordgen::random_word(rng, n, 1 + i % 4);
      auto const v = i % 2 == 0 ? wordgen::random_rewrites(rng, w, 3)
                                : wordgen::random_word(rng, n, 1 + (i / 2) % 4);
      bool const by_oracle = oracle::equal(w, v, 24);
      equal_pairs += by_oracle ? 1 : 0;
      if (by_oracle != (lcf(w) == lcf(v))) {
        ++disagreements;
      }
    }
    Outcome o;
    o.pass   = disagreements == 0;
    o.detail = std::to_string(words) + " positive words in " + std::to_string(groups.size())
               + " classes; 10000 mixed pairs (" + std::to_string(equal_pairs)
               + " equal); disagreements " + std::to_string(disagreements);
    return o;
  }

  Outcome fdtc_fixtures() {
    std::size_t inside = 0, total = 0;
    std::string outside;
    for (auto const& row : fixtures::read_rows("paper_fdtc.txt")) {
      auto const a = fixtures::factor_of(row[0], 4);
      auto const b = fixtures::factor_of(row[1], 4);
      auto const slash = row[2].find('/');
      Rational const value = slash == std::string::npos
                                 ? Rational(std::stoll(row[2]))
                                 : Rational(std::stoll(row[2].substr(0, slash)),
                                            std::stoll(row[2].substr(slash + 1)));
      ++total;
      auto const interval = fdtc_bounds(factor_to_word(a) * factor_to_word(b));
      if (interval.contains(value)) {
        ++inside;
      } else {
        outside += "; (" + row[0] + ")(" + row[1] + ") listed " + row[2] + " outside ["
                   + to_string(interval.lower) + ", " + to_string(interval.upper) + "]";
      }
    }
    BraidWord full(4);
    for (int i = 0; i < 4; ++i) {
      full *= delta_word(4);
    }
    auto const d  = fdtc_exact_if_pinched(delta_word(4));
    auto const d4 = fdtc_exact_if_pinched(full);
    Outcome    o;
    o.pass   = total == 21 && inside == total && d == Rational(1, 4) && d4 == Rational(1);
    o.detail = std::to_string(inside) + "/" + std::to_string(total)
               + " values inside; c(delta) pinned at " + (d ? to_string(*d) : "-")
               + ", c(delta^4) pinned at " + (d4 ? to_string(*d4) : "-") + outside;
    return o;
  }

  Outcome determinism() {
    wordgen::Rng rng(11001);
    std::size_t  lcf_violations = 0, schedules = 0;
    for (int i = 0; i < 200; ++i) {
      auto const w        = wordgen::random_word(rng, 3 + i % 4, 4 + i % 12);
      auto const expected = lcf(w);
      auto const [r, raw] = detail::raw_factors(w);
      for (int trial = 0; trial < 100; ++trial) {
        auto choose = [&rng](std::size_t count) {
          return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
        };
        ++schedules;
        if (detail::normalize_scheduled(w.strands(), r, raw, choose) != expected) {
          ++lcf_violations;
        }
      }
    }
    // Every B_4 word of length <= 6, deduplicated by normal form.
    std::unordered_set<LeftCanonicalForm, LeftCanonicalFormHash> forms;
    auto const                                                   letters = oracle::alphabet(4);
    std::vector<BandLetter>                                      stack;
    std::function<void(detail::NormalFormBuilder const&, std::size_t)> grow
        = [&](detail::NormalFormBuilder const& b, std::size_t depth) {
            forms.insert(detail::NormalFormBuilder(b).finish());
            if (depth == 6) {
              return;
            }
            for (auto const& c : letters) {
              detail::NormalFormBuilder next(b);
              next.append_letter(c);
              grow(next, depth + 1);
            }
          };
    grow(detail::NormalFormBuilder(4), 0);
    std::size_t red_violations = 0, branches = 0;
    for (auto const& x : forms) {
      std::set<std::int64_t>                  counts;
      std::function<void(ReducedWord const&)> walk = [&](ReducedWord const& y) {
        if (y.is_terminal()) {
          ++branches;
          counts.insert(count_negative_bands(y));
          return;
        }
        for (auto k : maximal_positive_entries(y)) {
          walk(reduce_step(y, k));
        }
      };
      walk(ReducedWord::from(x));
      if (counts.size() != 1) {
        ++red_violations;
      }
    }
    Outcome o;
    o.pass   = lcf_violations == 0 && red_violations == 0;
    o.detail = std::to_string(schedules) + " random schedules, violations "
               + std::to_string(lcf_violations) + "; " + std::to_string(forms.size())
               + " normal forms of words of length <= 6, " + std::to_string(branches)
               + " tie-break branches, violations " + std::to_string(red_violations);
    return o;
  }

}  // namespace

int main() {
  std::vector<Criterion> const criteria = {
      {1, "catalan counts", 1.0, catalan_counts},
      {2, "delta factorizations", 1.0, delta_factorizations},
      {3, "pair tables", 1.0, pair_tables_regenerated},
      {4, "normal form examples", 3.0, lcf_examples},
      {5, "reduction example", 1.0, reduction_example},
      {6, "conjugacy examples", 10.0, conjugacy_examples},
      {7, "positivity properties", 60.0, classification_properties},
      {8, "three-braid formula", 300.0, three_braid_formula},
      {9, "oracle equivalence", 300.0, oracle_equivalence},
      {10, "fdtc fixtures", 10.0, fdtc_fixtures},
      {11, "determinism", 120.0, determinism},
  };
  int failures = 0;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = c.check();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double const seconds
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const in_time = seconds <= c.limit_seconds;
    bool const pass    = o.pass && in_time;
    failures += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof(timing), "%.2fs / %.0fs", seconds, c.limit_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << o.detail
              << " [" << timing << (in_time ? "" : ", over limit") << "]" << std::endl;
  }
  return failures;
}
