#ifndef BANDFORGE_SVG_HPP_
#define BANDFORGE_SVG_HPP_

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <numbers>
#include <string>
#include <utility>

#include "factor.hpp"
#include "lcf.hpp"

namespace bandforge {

  //! Punctures of the n-punctured unit disk: puncture k sits at radius 1/2 and
  //! angle (2k - 1 - n) pi / n.
  struct DiskLayout {
    std::size_t n;

    double angle(std::size_t k) const {
      return (2.0 * static_cast<double>(k) - 1.0 - static_cast<double>(n))
             * std::numbers::pi / static_cast<double>(n);
    }

    std::pair<double, double> position(std::size_t k) const {
      return {0.5 * std::cos(angle(k)), 0.5 * std::sin(angle(k))};
    }
  };

  namespace detail {

    inline std::string fmt(double x) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.4f", std::abs(x) < 5e-5 ? 0.0 : x);
      return buf;
    }

    // Mathematical y points up, SVG y points down.
    inline std::string point(std::pair<double, double> p, double dx) {
      return fmt(p.first + dx) + "," + fmt(-p.second);
    }

    inline std::string disk_body(CanonicalFactor const& a, double dx) {
      DiskLayout const layout{a.strands()};
      std::string      out;
      out += "  <circle cx=\"" + fmt(dx)
             + "\" cy=\"0.0000\" r=\"1\" fill=\"none\" stroke=\"black\" "
               "stroke-width=\"0.02\"/>\n";
      for (auto const& b : a.blocks()) {
        if (b.size() == 2) {
          auto const p = layout.position(b[0]);
          auto const q = layout.position(b[1]);
          out += "  <line x1=\"" + fmt(p.first + dx) + "\" y1=\"" + fmt(-p.second)
                 + "\" x2=\"" + fmt(q.first + dx) + "\" y2=\"" + fmt(-q.second)
                 + "\" stroke=\"steelblue\" stroke-width=\"0.04\"/>\n";
        } else {
          out += "  <polygon points=\"";
          for (std::size_t i = 0; i < b.size(); ++i) {
            if (i > 0) {
              out += ' ';
            }
            out += point(layout.position(b[i]), dx);
          }
          out += "\" fill=\"lightsteelblue\" stroke=\"steelblue\" "
                 "stroke-width=\"0.04\"/>\n";
        }
      }
      for (std::size_t k = 1; k <= a.strands(); ++k) {
        auto const p = layout.position(k);
        out += "  <circle cx=\"" + fmt(p.first + dx) + "\" cy=\"" + fmt(-p.second)
               + "\" r=\"0.05\" fill=\"black\"/>\n";
      }
      return out;
    }

    inline std::string svg_header(double width) {
      return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1000 -1.1000 "
             + fmt(width) + " 2.2000\">\n";
    }

  }  // namespace detail

  //! The factor drawn in the punctured disk: one chord or filled polygon per
  //! non-singleton block.
  inline std::string render_svg(CanonicalFactor const& a) {
    return detail::svg_header(2.2) + detail::disk_body(a, 0.0) + "</svg>\n";
  }

  //! A delta^r label followed by one disk per factor, left to right.
  inline std::string render_svg(LeftCanonicalForm const& x) {
    double const step  = 2.4;
    double const label = 1.4;
    double const width = label + step * static_cast<double>(x.length()) + 0.2;
    std::string  out   = detail::svg_header(width);
    out += "  <text x=\"-0.9000\" y=\"0.1500\" font-size=\"0.45\">&#948;<tspan "
           "dy=\"-0.2000\" font-size=\"0.3\">"
           + std::to_string(x.delta_power()) + "</tspan></text>\n";
    for (std::size_t i = 0; i < x.length(); ++i) {
      out += detail::disk_body(x.factors()[i],
                               label + step * static_cast<double>(i) + 0.1);
    }
    out += "</svg>\n";
    return out;
  }

}  // namespace bandforge

#endif  // BANDFORGE_SVG_HPP_
