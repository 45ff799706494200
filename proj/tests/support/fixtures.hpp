#ifndef BANDFORGE_TESTS_FIXTURES_HPP_
#define BANDFORGE_TESTS_FIXTURES_HPP_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bandforge/factor.hpp"
#include "bandforge/lcf.hpp"
#include "oracle.hpp"

namespace fixtures {

  inline std::string golden_path(std::string const& name) {
    return std::string(BANDFORGE_GOLDEN_DIR) + "/" + name;
  }

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  //! Non-comment lines split on '|', fields trimmed.
  inline std::vector<std::vector<std::string>> read_rows(std::string const& name) {
    std::istringstream                    in(read_file(golden_path(name)));
    std::vector<std::vector<std::string>> rows;
    std::string                           line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') {
        continue;
      }
      std::vector<std::string> fields;
      std::istringstream       ls(line);
      std::string              f;
      while (std::getline(ls, f, '|')) {
        auto const b = f.find_first_not_of(' ');
        auto const e = f.find_last_not_of(' ');
        fields.push_back(b == std::string::npos ? "" : f.substr(b, e - b + 1));
      }
      rows.push_back(std::move(fields));
    }
    return rows;
  }

  //! The canonical factor equal to a positive word, found with the rewrite
  //! oracle; throws if there is none.
  inline bandforge::CanonicalFactor factor_of(std::string const& text, std::size_t n) {
    auto const w = bandforge::parse_word(text, n);
    for (auto const& a : bandforge::enumerate_factors(n)) {
      if (oracle::positive_equal(bandforge::factor_to_word(a), w)) {
        return a;
      }
    }
    throw std::runtime_error("'" + text + "' is not a canonical factor");
  }

}  // namespace fixtures

#endif  // BANDFORGE_TESTS_FIXTURES_HPP_
