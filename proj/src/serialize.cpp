/*
   Copyright 2026 The descent-lab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "descent_lab/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace descent_lab {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

nlohmann::json poly_json(const ExactPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

nlohmann::json binary_exp_json(const BinaryExpPoly& f) {
  return {{"expo", poly_json(f.expo)}, {"plain", poly_json(f.plain)}};
}

nlohmann::json certificate_json(const RootCertificate& cert) {
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& z : cert.roots) roots.push_back({z.real(), z.imag()});
  nlohmann::json discs = nlohmann::json::array();
  for (const auto& d : cert.discs) {
    discs.push_back({{"center", {d.center.real(), d.center.imag()}}, {"radius", d.radius}});
  }
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& c : cert.checks) checks[c.name] = {{"pass", c.pass}, {"witness", c.witness}};
  return {{"set", cert.set.elems()},
          {"m", cert.set.max()},
          {"polynomial", poly_json(d_poly(cert.set))},
          {"roots", roots},
          {"residuals", cert.residuals},
          {"discs", discs},
          {"radius_rule", cert.radius_rule},
          {"checks", checks},
          {"all_pass", cert.all_pass()}};
}

std::string join_values(const std::vector<ExactInt>& v) {
  std::string s;
  for (const auto& x : v) {
    if (!s.empty()) s += ' ';
    s += x.get_str();
  }
  return s;
}

std::string set_field(std::span<const int> set) {
  std::string s;
  for (int i : set) {
    if (!s.empty()) s += ' ';
    s += std::to_string(i);
  }
  return s;
}

std::string coeff_csv_header() { return "set,m,a,c,a_log_concave,c_nonneg"; }

std::string coeff_csv_row(const CoeffReport& r) {
  return set_field(r.set) + "," + std::to_string(r.set.max()) + "," + join_values(r.a) + "," +
         join_values(r.c) + "," + (r.a_log_concave ? "1" : "0") + "," +
         (r.c_all_nonneg ? "1" : "0");
}

std::string certificate_svg(const RootCertificate& cert, int pixels) {
  const int m = cert.set.max();
  double reach = 0.0;
  for (const auto& d : cert.discs) reach = std::max(reach, d.radius + m);
  for (const auto& z : cert.roots) reach = std::max(reach, std::abs(z));
  const double L = reach + 1.0;
  const double scale = pixels / (2.0 * L);
  auto sx = [&](double x) { return (x + L) * scale; };
  auto sy = [&](double y) { return (L - y) * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pixels << "\" height=\""
      << pixels << "\" viewBox=\"0 0 " << pixels << ' ' << pixels << "\">\n";
  svg << "<title>roots of d(" << cert.set.to_string() << ";z)</title>\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Region R + m, sampled per pixel row; interior runs are filled and run
  // endpoints plus row-to-row changes are stroked as the outline.
  const int cells = pixels / 2;
  const double step = 2.0 * L / cells;
  std::vector<std::vector<bool>> inside(static_cast<std::size_t>(cells),
                                        std::vector<bool>(static_cast<std::size_t>(cells)));
  for (int r = 0; r < cells; ++r) {
    for (int c = 0; c < cells; ++c) {
      const ComplexPoint z(-L + (c + 0.5) * step, L - (r + 0.5) * step);
      inside[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = region_membership(z, m);
    }
  }
  svg << "<g fill=\"#cfe3f5\" stroke=\"none\">\n";
  for (int r = 0; r < cells; ++r) {
    const auto& row = inside[static_cast<std::size_t>(r)];
    for (int c = 0; c < cells;) {
      if (!row[static_cast<std::size_t>(c)]) {
        ++c;
        continue;
      }
      int end = c;
      while (end < cells && row[static_cast<std::size_t>(end)]) ++end;
      svg << "<rect x=\"" << fmt(c * step * scale) << "\" y=\"" << fmt(r * step * scale)
          << "\" width=\"" << fmt((end - c) * step * scale) << "\" height=\""
          << fmt(step * scale) << "\"/>\n";
      c = end;
    }
  }
  svg << "</g>\n<g fill=\"#1f5f99\" stroke=\"none\">\n";
  auto at = [&](int r, int c) {
    return r >= 0 && c >= 0 && r < cells && c < cells &&
           inside[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  };
  for (int r = 0; r < cells; ++r) {
    for (int c = 0; c < cells; ++c) {
      if (at(r, c) && !(at(r - 1, c) && at(r + 1, c) && at(r, c - 1) && at(r, c + 1))) {
        svg << "<rect x=\"" << fmt(c * step * scale) << "\" y=\"" << fmt(r * step * scale)
            << "\" width=\"" << fmt(step * scale) << "\" height=\"" << fmt(step * scale)
            << "\"/>\n";
      }
    }
  }
  svg << "</g>\n";

  svg << "<g fill=\"#808080\" fill-opacity=\"0.25\" stroke=\"#606060\" stroke-width=\"1\">\n";
  for (const auto& d : cert.discs) {
    svg << "<circle class=\"disc\" cx=\"" << fmt(sx(d.center.real())) << "\" cy=\"" << fmt(sy(d.center.imag()))
        << "\" r=\"" << fmt(d.radius * scale) << "\"/>\n";
  }
  svg << "</g>\n";

  svg << "<g stroke=\"black\" stroke-width=\"1\">\n";
  svg << "<line x1=\"0\" y1=\"" << fmt(sy(0)) << "\" x2=\"" << pixels << "\" y2=\"" << fmt(sy(0))
      << "\"/>\n";
  svg << "<line x1=\"" << fmt(sx(0)) << "\" y1=\"0\" x2=\"" << fmt(sx(0)) << "\" y2=\"" << pixels
      << "\"/>\n";
  for (int t = static_cast<int>(std::ceil(-L)); t <= static_cast<int>(std::floor(L)); ++t) {
    svg << "<line x1=\"" << fmt(sx(t)) << "\" y1=\"" << fmt(sy(0) - 3) << "\" x2=\"" << fmt(sx(t))
        << "\" y2=\"" << fmt(sy(0) + 3) << "\"/>\n";
  }
  svg << "</g>\n";

  svg << "<g fill=\"#c0392b\">\n";
  for (const auto& z : cert.roots) {
    svg << "<circle class=\"root\" cx=\"" << fmt(sx(z.real())) << "\" cy=\"" << fmt(sy(z.imag()))
        << "\" r=\"3\"/>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace descent_lab
