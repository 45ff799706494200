#ifndef BANDFORGE_FACTOR_HPP_
#define BANDFORGE_FACTOR_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "band.hpp"
#include "errors.hpp"

namespace bandforge {

  //! A canonical factor of the dual braid monoid, stored as a non-crossing
  //! partition of {1, ..., n}. Each point carries the smallest element of its
  //! block (0-based), so equal factors have equal storage.
  class CanonicalFactor {
   public:
    using label_type = std::uint32_t;

    CanonicalFactor() = default;

    static CanonicalFactor identity(std::size_t n) {
      check_strands(n);
      CanonicalFactor result;
      result._label.resize(n);
      std::iota(result._label.begin(), result._label.end(), label_type(0));
      return result;
    }

    static CanonicalFactor delta(std::size_t n) {
      check_strands(n);
      CanonicalFactor result;
      result._label.assign(n, 0);
      return result;
    }

    //! The 2-gon of a band generator (its sign is ignored).
    static CanonicalFactor generator(std::size_t n, BandLetter const& c) {
      check_letter(n, c);
      CanonicalFactor result = identity(n);
      result._label[c.t - 1] = static_cast<label_type>(c.s - 1);
      return result;
    }

    //! Blocks use 1-based points; omitted points are singletons. Throws if
    //! blocks overlap, leave {1..n}, or cross.
    static CanonicalFactor
    from_blocks(std::size_t n, std::vector<std::vector<std::size_t>> const& blocks) {
      check_strands(n);
      std::vector<std::size_t> block_of(n, SIZE_MAX);
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (auto x : blocks[b]) {
          if (x < 1 || x > n) {
            throw RangeError("point " + std::to_string(x) + " not in 1.."
                             + std::to_string(n));
          }
          if (block_of[x - 1] != SIZE_MAX) {
            throw PreconditionError("point " + std::to_string(x)
                                    + " appears in two blocks");
          }
          block_of[x - 1] = b;
        }
      }
      CanonicalFactor result = identity(n);
      std::vector<label_type> first(blocks.size(), label_type(-1));
      for (std::size_t x = 0; x < n; ++x) {
        if (block_of[x] == SIZE_MAX) {
          continue;
        }
        auto& f = first[block_of[x]];
        if (f == label_type(-1)) {
          f = static_cast<label_type>(x);
        }
        result._label[x] = f;
      }
      if (!detail_non_crossing(result._label)) {
        throw PreconditionError("blocks cross");
      }
      return result;
    }

    //! Builds from a label vector (entry i = least element of the block of i,
    //! 0-based) without the crossing check.
    static CanonicalFactor from_labels_unchecked(std::vector<label_type> labels) {
      CanonicalFactor result;
      result._label = std::move(labels);
      return result;
    }

    std::size_t strands() const noexcept {
      return _label.size();
    }

    std::vector<label_type> const& labels() const noexcept {
      return _label;
    }

    //! 1-based points.
    bool same_block(std::size_t i, std::size_t j) const {
      return _label[i - 1] == _label[j - 1];
    }

    //! Sorted blocks of sorted 1-based points, ordered by least element.
    std::vector<std::vector<std::size_t>> blocks(bool with_singletons = false) const {
      std::vector<std::vector<std::size_t>> by_root(_label.size());
      for (std::size_t x = 0; x < _label.size(); ++x) {
        by_root[_label[x]].push_back(x + 1);
      }
      std::vector<std::vector<std::size_t>> result;
      for (auto& b : by_root) {
        if (b.size() > 1 || (with_singletons && b.size() == 1)) {
          result.push_back(std::move(b));
        }
      }
      return result;
    }

    std::size_t block_count() const noexcept {
      std::size_t result = 0;
      for (std::size_t x = 0; x < _label.size(); ++x) {
        result += (_label[x] == x);
      }
      return result;
    }

    //! Number of letters in any positive word for the factor.
    std::size_t word_length() const noexcept {
      return _label.size() - block_count();
    }

    bool is_identity() const noexcept {
      return word_length() == 0;
    }

    bool is_delta() const noexcept {
      return block_count() == 1;
    }

    friend bool operator==(CanonicalFactor const&, CanonicalFactor const&)
        = default;
    friend auto operator<=>(CanonicalFactor const&, CanonicalFactor const&)
        = default;

    static bool detail_non_crossing(std::vector<label_type> const& label) {
      // A partition is non-crossing iff scanning left to right the open blocks
      // behave like a stack.
      std::size_t const        n = label.size();
      std::vector<std::size_t> last(n, 0);
      for (std::size_t x = 0; x < n; ++x) {
        last[label[x]] = x;
      }
      std::vector<label_type> stack;
      for (std::size_t x = 0; x < n; ++x) {
        label_type const b = label[x];
        if (b == x) {
          if (last[b] != x) {
            stack.push_back(b);
          }
          continue;
        }
        if (stack.empty() || stack.back() != b) {
          return false;
        }
        if (last[b] == x) {
          stack.pop_back();
        }
      }
      return true;
    }

   private:
    static void check_strands(std::size_t n) {
      if (n == 0) {
        throw RangeError("strand count must be at least 1");
      }
    }

    static void check_letter(std::size_t n, BandLetter const& c) {
      if (c.s < 1 || c.t > n || c.s >= c.t) {
        throw RangeError("band a(" + std::to_string(c.s) + ","
                         + std::to_string(c.t) + ") out of range for "
                         + std::to_string(n) + " strands");
      }
    }

    std::vector<label_type> _label;
  };

  struct CanonicalFactorHash {
    std::size_t operator()(CanonicalFactor const& a) const noexcept {
      std::size_t h = a.strands();
      for (auto x : a.labels()) {
        h = h * 1000003u ^ x;
      }
      return h;
    }
  };

  namespace detail {

    inline void check_same_strands(CanonicalFactor const& a,
                                   CanonicalFactor const& b) {
      if (a.strands() != b.strands()) {
        throw RangeError("factors on " + std::to_string(a.strands()) + " and "
                         + std::to_string(b.strands()) + " strands");
      }
    }

    inline void check_letter(CanonicalFactor const& a, BandLetter const& c) {
      if (c.s < 1 || c.t > a.strands() || c.s >= c.t) {
        throw RangeError("band a(" + std::to_string(c.s) + ","
                         + std::to_string(c.t) + ") out of range for "
                         + std::to_string(a.strands()) + " strands");
      }
    }

    //! Relabels through a union-find forest into least-element form.
    inline CanonicalFactor
    from_parent(std::vector<CanonicalFactor::label_type> parent) {
      auto find = [&parent](std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      };
      std::size_t const                     n = parent.size();
      std::vector<CanonicalFactor::label_type> label(n);
      std::vector<CanonicalFactor::label_type> least(n, CanonicalFactor::label_type(-1));
      for (std::size_t x = 0; x < n; ++x) {
        std::size_t const r = find(x);
        if (least[r] == CanonicalFactor::label_type(-1)) {
          least[r] = static_cast<CanonicalFactor::label_type>(x);
        }
        label[x] = least[r];
      }
      return CanonicalFactor::from_labels_unchecked(std::move(label));
    }

    inline void enumerate_into(std::vector<CanonicalFactor::label_type>& label,
                               std::size_t                              x,
                               std::vector<CanonicalFactor>&            out) {
      std::size_t const n = label.size();
      if (x == n) {
        out.push_back(CanonicalFactor::from_labels_unchecked(label));
        return;
      }
      // Point x opens a new block or joins any earlier block that keeps the
      // prefix non-crossing.
      label[x] = static_cast<CanonicalFactor::label_type>(x);
      enumerate_into(label, x + 1, out);
      std::vector<bool> seen(n, false);
      for (std::size_t y = x; y-- > 0;) {
        auto const b = label[y];
        if (seen[b]) {
          continue;
        }
        seen[b] = true;
        label[x] = b;
        if (CanonicalFactor::detail_non_crossing(
                std::vector<CanonicalFactor::label_type>(label.begin(),
                                                         label.begin() + x + 1))) {
          enumerate_into(label, x + 1, out);
        }
      }
      label[x] = static_cast<CanonicalFactor::label_type>(x);
    }

    struct FactorCache {
      std::shared_mutex                                                   mutex;
      std::map<std::size_t, std::shared_ptr<std::vector<CanonicalFactor> const>> lists;
    };

    inline FactorCache& factor_cache() {
      static FactorCache cache;
      return cache;
    }

  }  // namespace detail

  //! Default largest strand count accepted by enumerate_factors.
  inline constexpr std::size_t default_enumeration_bound = 8;

  //! All Catalan(n) canonical factors of B_n, sorted by label vector (so the
  //! fundamental element comes first and the identity last). Results are
  //! computed once per n and shared.
  inline std::vector<CanonicalFactor> const&
  enumerate_factors(std::size_t n, std::size_t bound = default_enumeration_bound) {
    if (n < 1 || n > bound) {
      throw RangeError("factor enumeration supports 1 <= n <= "
                       + std::to_string(bound) + ", got " + std::to_string(n));
    }
    auto& cache = detail::factor_cache();
    {
      std::shared_lock lock(cache.mutex);
      auto             it = cache.lists.find(n);
      if (it != cache.lists.end()) {
        return *it->second;
      }
    }
    std::unique_lock lock(cache.mutex);
    auto             it = cache.lists.find(n);
    if (it != cache.lists.end()) {
      return *it->second;
    }
    std::vector<CanonicalFactor>             out;
    std::vector<CanonicalFactor::label_type> label(n);
    detail::enumerate_into(label, 0, out);
    std::sort(out.begin(), out.end());
    auto ptr = std::make_shared<std::vector<CanonicalFactor> const>(std::move(out));
    cache.lists.emplace(n, ptr);
    return *ptr;
  }

  //! Block {t1 < ... < tk} gives a_{tk,tk-1} ... a_{t2,t1}; blocks are
  //! written in descending order of their largest point.
  inline BraidWord factor_to_word(CanonicalFactor const& a) {
    auto blocks = a.blocks();
    std::sort(blocks.begin(), blocks.end(), [](auto const& x, auto const& y) {
      return x.back() > y.back();
    });
    BraidWord result(a.strands());
    for (auto const& b : blocks) {
      for (std::size_t i = b.size() - 1; i > 0; --i) {
        result.push_back(BandLetter(b[i], b[i - 1]));
      }
    }
    return result;
  }

  //! Generators a_{t,s} with s and t in a common block, sorted.
  inline std::vector<BandLetter> starting_set(CanonicalFactor const& a) {
    std::vector<BandLetter> result;
    std::size_t const       n = a.strands();
    for (std::size_t s = 1; s <= n; ++s) {
      for (std::size_t t = s + 1; t <= n; ++t) {
        if (a.same_block(s, t)) {
          result.emplace_back(t, s);
        }
      }
    }
    return result;
  }

  //! The unique B with A B = delta. Ghost point j sits just before puncture j
  //! in the circular order; ghosts j < k share a region iff every block of A
  //! lies entirely inside or entirely outside [j, k - 1].
  inline CanonicalFactor complement(CanonicalFactor const& a) {
    using label_type    = CanonicalFactor::label_type;
    std::size_t const n = a.strands();
    auto const&       label = a.labels();
    std::vector<std::size_t> block_size(n, 0);
    for (auto b : label) {
      ++block_size[b];
    }
    std::vector<label_type> parent(n);
    std::iota(parent.begin(), parent.end(), label_type(0));
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) {
        x = parent[x];
      }
      return x;
    };
    std::vector<std::size_t> inside(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(inside.begin(), inside.end(), 0);
      std::size_t partial = 0;
      for (std::size_t k = j + 1; k < n; ++k) {
        auto const  b = label[k - 1];
        std::size_t c = ++inside[b];
        if (c == 1 && block_size[b] > 1) {
          ++partial;
        }
        if (c == block_size[b] && block_size[b] > 1) {
          --partial;
        }
        if (partial == 0) {
          auto const rj = find(j);
          auto const rk = find(k);
          parent[std::max(rj, rk)] = static_cast<label_type>(std::min(rj, rk));
          break;
        }
      }
    }
    return detail::from_parent(std::move(parent));
  }

  //! Generators c for which A c is again a canonical factor.
  inline std::vector<BandLetter> right_set(CanonicalFactor const& a) {
    return starting_set(complement(a));
  }

  inline bool in_right_set(CanonicalFactor const& a, BandLetter const& c) {
    detail::check_letter(a, c);
    return complement(a).same_block(c.s, c.t);
  }

  //! A c for c in the right set of A: the blocks of c.s and c.t are joined.
  inline CanonicalFactor merge(CanonicalFactor const& a, BandLetter const& c) {
    if (!in_right_set(a, c)) {
      throw PreconditionError("generator a(" + std::to_string(c.s) + ","
                              + std::to_string(c.t)
                              + ") is not in the right set of the factor");
    }
    auto              label = a.labels();
    auto const        lo    = std::min(label[c.s - 1], label[c.t - 1]);
    auto const        hi    = std::max(label[c.s - 1], label[c.t - 1]);
    for (auto& x : label) {
      if (x == hi) {
        x = lo;
      }
    }
    return CanonicalFactor::from_labels_unchecked(std::move(label));
  }

  //! The factor B' with B = c B', for c in the starting set of B. The block V
  //! of c splits into {x in V : c.s < x <= c.t} and the rest.
  inline CanonicalFactor split_left(CanonicalFactor const& b, BandLetter const& c) {
    detail::check_letter(b, c);
    if (!b.same_block(c.s, c.t)) {
      throw PreconditionError("generator a(" + std::to_string(c.s) + ","
                              + std::to_string(c.t)
                              + ") is not in the starting set of the factor");
    }
    using label_type  = CanonicalFactor::label_type;
    auto        label = b.labels();
    auto const  v     = label[c.s - 1];
    label_type  inner = label_type(-1);
    for (std::size_t x = c.s; x < c.t; ++x) {
      if (label[x] == v) {
        if (inner == label_type(-1)) {
          inner = static_cast<label_type>(x);
        }
        label[x] = inner;
      }
    }
    return CanonicalFactor::from_labels_unchecked(std::move(label));
  }

  //! Refinement: every block of A lies in a block of B.
  inline bool precedes(CanonicalFactor const& a, CanonicalFactor const& b) {
    detail::check_same_strands(a, b);
    auto const& la = a.labels();
    auto const& lb = b.labels();
    for (std::size_t x = 0; x < la.size(); ++x) {
      if (lb[x] != lb[la[x]]) {
        return false;
      }
    }
    return true;
  }

  //! Conjugation by delta^k: each point x moves to x + k modulo n.
  inline CanonicalFactor tau(CanonicalFactor const& a, std::int64_t k = 1) {
    using label_type         = CanonicalFactor::label_type;
    std::int64_t const n     = static_cast<std::int64_t>(a.strands());
    std::int64_t const shift = ((k % n) + n) % n;
    if (shift == 0) {
      return a;
    }
    std::vector<label_type> parent(a.strands());
    auto const&             label = a.labels();
    for (std::int64_t x = 0; x < n; ++x) {
      parent[(x + shift) % n] = static_cast<label_type>((label[x] + shift) % n);
    }
    return detail::from_parent(std::move(parent));
  }

  //! A B C for two single-block factors with non-crossing disjoint blocks,
  //! C the joining edge: the union of the two blocks. Two lone blocks always
  //! face each other, so the result is never empty here.
  inline std::optional<CanonicalFactor> star(CanonicalFactor const& a,
                                             CanonicalFactor const& b) {
    detail::check_same_strands(a, b);
    auto const xa = a.blocks();
    auto const xb = b.blocks();
    if (xa.size() != 1 || xb.size() != 1) {
      throw PreconditionError("star needs two factors with one block each");
    }
    for (auto x : xa[0]) {
      if (std::find(xb[0].begin(), xb[0].end(), x) != xb[0].end()) {
        throw PreconditionError("star needs disjoint blocks");
      }
    }
    try {
      CanonicalFactor::from_blocks(a.strands(), {xa[0], xb[0]});
    } catch (PreconditionError const&) {
      throw PreconditionError("star needs non-crossing blocks");
    }
    auto merged = xa[0];
    merged.insert(merged.end(), xb[0].begin(), xb[0].end());
    return CanonicalFactor::from_blocks(a.strands(), {merged});
  }

  //! Covering pairs (i, j) of the refinement order, as indices into
  //! enumerate_factors(n): factor i is covered by factor j.
  inline std::vector<std::pair<std::size_t, std::size_t>>
  hasse_covers(std::size_t n, std::size_t bound = default_enumeration_bound) {
    auto const& all = enumerate_factors(n, bound);
    std::vector<std::pair<std::size_t, std::size_t>> result;
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (all[i].block_count() == all[j].block_count() + 1
            && precedes(all[i], all[j])) {
          result.emplace_back(i, j);
        }
      }
    }
    return result;
  }

  //! "{1,2,3}{4,5}" with singletons left out; the identity prints as "e".
  inline std::string to_string(CanonicalFactor const& a) {
    auto const  blocks = a.blocks();
    if (blocks.empty()) {
      return "e";
    }
    std::string result;
    for (auto const& b : blocks) {
      result += '{';
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (i > 0) {
          result += ',';
        }
        result += std::to_string(b[i]);
      }
      result += '}';
    }
    return result;
  }

  //! Inverse of to_string; singletons may be written or omitted, and "e" or
  //! "{}" denote the identity.
  inline CanonicalFactor parse_partition(std::string_view text, std::size_t n) {
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t                           pos = 0;
    auto skip = [&] {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) {
        ++pos;
      }
    };
    skip();
    if (pos < text.size() && text[pos] == 'e') {
      ++pos;
      skip();
      if (pos != text.size()) {
        throw ParseError("unexpected text after 'e'", pos);
      }
      return CanonicalFactor::identity(n);
    }
    while (pos < text.size()) {
      if (text[pos] != '{') {
        throw ParseError("expected '{'", pos);
      }
      ++pos;
      std::vector<std::size_t> block;
      skip();
      while (pos < text.size() && text[pos] != '}') {
        std::size_t const start = pos;
        std::size_t       value = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
          value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
          ++pos;
        }
        if (pos == start) {
          throw ParseError("expected an integer", pos);
        }
        block.push_back(value);
        skip();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          skip();
        }
      }
      if (pos == text.size()) {
        throw ParseError("missing '}'", pos);
      }
      ++pos;
      if (!block.empty()) {
        blocks.push_back(std::move(block));
      }
      skip();
    }
    return CanonicalFactor::from_blocks(n, blocks);
  }

}  // namespace bandforge

#endif  // BANDFORGE_FACTOR_HPP_
