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

#include "descent_lab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "descent_lab/coeffs.hpp"
#include "descent_lab/descent.hpp"
#include "descent_lab/enumerate.hpp"
#include "descent_lab/parallel.hpp"
#include "descent_lab/patterns.hpp"
#include "descent_lab/roots.hpp"
#include "descent_lab/serialize.hpp"
#include "descent_lab/signed.hpp"

namespace descent_lab {

namespace {

using nlohmann::json;

Group parse_group(const std::string& s) {
  if (s == "A") return Group::A;
  if (s == "B") return Group::B;
  if (s == "D") return Group::D;
  throw std::invalid_argument("unknown type '" + s + "' (expected A, B or D)");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

// ---- compute ------------------------------------------------------------

struct ComputeOptions {
  std::string set;
  std::string type = "A";
  std::string range;
  std::string basis = "monomial";
  std::string format = "text";
  std::string out;
  bool verify = false;
};

std::optional<BinomExpansion> expand(const ExactPoly& p, int m, const std::string& basis) {
  if (basis == "monomial") return std::nullopt;
  if (basis == "m") return to_binom_basis(p, m);
  if (basis == "c" || basis == "-1") return to_binom_basis(p, -1);
  if (basis == "falling") return BinomExpansion{0, to_falling_factorial_basis(p)};
  std::size_t used = 0;
  long center = 0;
  try {
    center = std::stol(basis, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != basis.size()) {
    throw std::invalid_argument("unknown basis '" + basis + "' (monomial, m, c, falling or a center)");
  }
  return to_binom_basis(p, center);
}

int cmd_compute(const ComputeOptions& o, unsigned threads, std::ostream& out, std::ostream& err) {
  const Group g = parse_group(o.type);
  const SignedDescentSet sset = SignedDescentSet::parse(o.set);
  if (g == Group::A && sset.has_zero()) {
    throw std::invalid_argument("0 is only allowed with --type B or D");
  }
  const int m = sset.max();
  long lo = m + 1;
  long hi = m + 6;
  if (!o.range.empty()) std::tie(lo, hi) = parse_range(o.range);
  if (g == Group::D) lo = std::max(lo, 2L), hi = std::max(hi, 2L);
  if (lo <= m) throw std::invalid_argument("n must exceed max(I) = " + std::to_string(m));
  if (o.verify && hi > max_enumerable_n(g)) {
    throw std::invalid_argument("--verify enumerates the group; n must be <= " +
                                std::to_string(max_enumerable_n(g)) + " for type " + o.type);
  }
  if (g != Group::A && o.basis != "monomial") {
    throw std::invalid_argument("--basis applies to type A only");
  }

  std::vector<long> ns;
  std::vector<ExactInt> values;
  std::vector<ExactInt> brute;
  json closed;
  std::string closed_text;
  std::optional<BinomExpansion> basis;
  if (g == Group::A) {
    const DescentSet I(sset.elems());
    const ExactPoly p = d_poly(I);
    closed = poly_json(p);
    closed_text = "d(I;n) = " + p.to_string("n");
    basis = expand(p, m, o.basis);
    if (o.basis == "c" || o.basis == "-1") {
      const auto c = c_coeffs(I);
      basis->coeffs.assign(c.begin(), c.end());
    }
    for (long n = lo; n <= hi; ++n) {
      ns.push_back(n);
      values.push_back(require_integer(p(ExactRational(n)), "d(I;n)"));
    }
  } else {
    const BinaryExpPoly f = g == Group::B ? dB_pie(sset) : dD_pie(sset);
    closed = binary_exp_json(f);
    closed_text = std::string("d_") + group_name(g) + "(I;n) = (" + f.expo.to_string("n") +
                  ") 2^n + (" + f.plain.to_string("n") + ")";
    for (long n = lo; n <= hi; ++n) {
      ns.push_back(n);
      const ExactInt v = g == Group::B ? dB_value(sset, n) : dD_value(sset, n);
      if (ExactRational(v) != f.at(n)) {
        throw InternalError("closed form and recursion differ at n = " + std::to_string(n));
      }
      values.push_back(v);
    }
  }
  int mismatches = 0;
  if (o.verify) {
    for (std::size_t i = 0; i < ns.size(); ++i) {
      brute.push_back(count_by_descents(sset.elems(), static_cast<int>(ns[i]), g, threads));
      if (brute.back() != values[i]) ++mismatches;
    }
  }

  std::ostringstream text;
  if (o.format == "json") {
    json j{{"set", sset.elems()}, {"type", o.type}, {"m", m}, {"closed_form", closed}};
    if (basis) {
      json coeffs = json::array();
      for (const auto& c : basis->coeffs) coeffs.push_back(c.get_str());
      j["basis"] = {{"name", o.basis}, {"center", basis->center}, {"coeffs", coeffs}};
    }
    json table = json::array();
    for (std::size_t i = 0; i < ns.size(); ++i) {
      json row{{"n", ns[i]}, {"value", values[i].get_str()}};
      if (o.verify) row["brute"] = brute[i].get_str();
      table.push_back(row);
    }
    j["values"] = table;
    text << json_text(j);
  } else if (o.format == "csv") {
    text << kCsvVersionLine << "\n" << (o.verify ? "n,value,brute\n" : "n,value\n");
    for (std::size_t i = 0; i < ns.size(); ++i) {
      text << ns[i] << "," << values[i].get_str();
      if (o.verify) text << "," << brute[i].get_str();
      text << "\n";
    }
  } else if (o.format == "text") {
    text << "I = " << sset.to_string() << ", type " << o.type << ", m = " << m << "\n";
    text << closed_text << "\n";
    if (basis) {
      text << "basis " << o.basis << " (center " << basis->center << "): [";
      for (std::size_t k = 0; k < basis->coeffs.size(); ++k) {
        text << (k ? ", " : "") << basis->coeffs[k].get_str();
      }
      text << "]\n";
    }
    for (std::size_t i = 0; i < ns.size(); ++i) {
      text << "n = " << ns[i] << ": " << values[i].get_str();
      if (o.verify) text << (brute[i] == values[i] ? "  ok" : "  MISMATCH " + brute[i].get_str());
      text << "\n";
    }
  } else {
    throw std::invalid_argument("unknown format '" + o.format + "' (text, json, csv)");
  }
  emit(text.str(), o.out, out);
  if (mismatches > 0) {
    err << "descent-lab: " << mismatches << " values disagree with enumeration\n";
    return kExitInternal;
  }
  return kExitOk;
}

// ---- certify ------------------------------------------------------------

struct CertifyOptions {
  std::string set;
  std::string svg;
  std::string out;
};

int cmd_certify(const CertifyOptions& o, std::ostream& out, std::ostream& err) {
  const DescentSet I = DescentSet::parse(o.set);
  const RootCertificate cert = disc_certificate(I);
  emit(json_text(certificate_json(cert)), o.out, out);
  if (!o.svg.empty()) emit(certificate_svg(cert), o.svg, out);
  if (!cert.all_pass()) {
    for (const auto& c : cert.checks) {
      if (!c.pass) err << "descent-lab: check " << c.name << " failed: " << c.witness << "\n";
    }
    return kExitViolation;
  }
  return kExitOk;
}

// ---- scan ---------------------------------------------------------------

struct ScanRow {
  std::string row;
  int violations = 0;
  std::string notes;  // one "# ..." line per violation
};

struct ScanSection {
  std::string header;
  std::vector<ScanRow> rows;
};

std::vector<DescentSet> nonempty_sets(int max_m) {
  std::vector<DescentSet> out;
  for (int m = 1; m <= max_m; ++m) {
    for (auto& I : DescentSet::all_with_max(m)) out.push_back(std::move(I));
  }
  return out;
}

ScanSection scan_coeffs(const std::string& check, int max_m, unsigned threads) {
  const auto sets = nonempty_sets(max_m);
  ScanSection s{coeff_csv_header(), {}};
  s.rows = parallel_map(sets.size(), threads, [&](std::size_t i) {
    const CoeffReport r = coeff_report(sets[i]);
    ScanRow row{coeff_csv_row(r), 0, ""};
    for (const Violation& v : coeff_violations(r)) {
      const bool counted = check == "c-nonneg" ? v.check == "c-nonneg" : v.check != "c-nonneg";
      if (!counted) continue;
      ++row.violations;
      row.notes += "# violation " + v.set.to_string() + " " + v.check + " k=" +
                   std::to_string(v.index) + ": " + v.detail + "\n";
    }
    return row;
  });
  return s;
}

ScanSection scan_roots(const std::vector<std::string>& names, int max_m, unsigned threads) {
  const auto sets = nonempty_sets(max_m);
  ScanSection s{"set,m,max_modulus,min_real,radius,rule,pass", {}};
  s.rows = parallel_map(sets.size(), threads, [&](std::size_t i) {
    const DescentSet& I = sets[i];
    ScanRow row;
    try {
      const RootCertificate cert = disc_certificate(I);
      double max_mod = 0.0;
      double min_re = std::numeric_limits<double>::infinity();
      for (const auto& z : cert.roots) {
        max_mod = std::max(max_mod, std::abs(z));
        min_re = std::min(min_re, z.real());
      }
      bool pass = true;
      for (const auto& name : names) {
        const Check* c = cert.find(name);
        if (c == nullptr) throw InternalError("certificate lacks check " + name);
        if (!c->pass) {
          pass = false;
          ++row.violations;
          row.notes += "# violation " + I.to_string() + " " + name + ": " + c->witness + "\n";
        }
      }
      std::ostringstream line;
      line.precision(12);
      line << set_field(I) << "," << I.max() << "," << max_mod << "," << min_re << ","
           << cert.discs.front().radius << "," << cert.radius_rule << "," << (pass ? 1 : 0);
      row.row = line.str();
    } catch (const RootFindingError& e) {
      row.row = set_field(I) + "," + std::to_string(I.max()) + ",,,,,0";
      row.violations = 1;
      row.notes = "# violation " + I.to_string() + " root finding: " + e.what() + "\n";
    }
    return row;
  });
  return s;
}

ScanSection scan_falling(int max_m, unsigned threads) {
  const auto sets = nonempty_sets(max_m);
  ScanSection s{"set,m,pass", {}};
  s.rows = parallel_map(sets.size(), threads, [&](std::size_t i) {
    const Check c = falling_coeffs_check(sets[i]);
    ScanRow row{set_field(sets[i]) + "," + std::to_string(sets[i].max()) + "," + (c.pass ? "1" : "0"),
                c.pass ? 0 : 1, ""};
    if (!c.pass) row.notes = "# violation " + sets[i].to_string() + " falling: " + c.witness + "\n";
    return row;
  });
  return s;
}

ScanSection scan_corollary(int max_m, unsigned threads) {
  const auto sets = nonempty_sets(max_m);
  ScanSection s{"set,n,type_b_sum,type_d_sum,type_d_vanish,type_d_vanish_sum", {}};
  s.rows = parallel_map(sets.size(), threads, [&](std::size_t i) {
    const DescentSet& I = sets[i];
    ScanRow row;
    for (long n = std::max(2, I.max() + 1); n <= I.max() + 3; ++n) {
      const CorollaryReport r = corollary_checks(I, n);
      if (!row.row.empty()) row.row += "\n";
      row.row += set_field(I) + "," + std::to_string(n) + "," + (r.type_b_sum ? "1" : "0") + "," +
                 (r.type_d_sum ? "1" : "0") + "," + (r.type_d_vanish ? "1" : "0") + "," +
                 (r.type_d_vanish_sum ? "1" : "0");
      if (!r.all_pass()) {
        ++row.violations;
        row.notes += "# violation " + I.to_string() + " n=" + std::to_string(n) + ": " +
                     r.witness + "\n";
      }
    }
    return row;
  });
  return s;
}

ScanSection scan_patterns(int max_m, unsigned threads) {
  // Brute force is over S_n, so the grid is capped at max(I) <= 6, n <= 8.
  const int top = std::min(max_m, 6);
  const int n_max = std::min(8, top + 3);
  struct Job {
    PatternSet P;
    DescentSet I;
    int n;
  };
  std::vector<Job> jobs;
  for (const char* text : {"21", "132,231"}) {
    const PatternSet P = PatternSet::parse(text);
    for (const auto& I : DescentSet::all_subsets(top)) {
      for (int n = std::max(1, I.max() + P.length() - 1); n <= n_max; ++n) jobs.push_back({P, I, n});
    }
  }
  ScanSection s{"patterns,set,n,brute,rec,pass", {}};
  s.rows = parallel_map(jobs.size(), threads, [&](std::size_t i) {
    const Job& j = jobs[i];
    const ExactInt brute = pi_count(j.P, j.I, j.n);
    const ExactInt rec = pi_count_rec(j.P, j.I, j.n);
    std::string pats = j.P.to_string();
    std::replace(pats.begin(), pats.end(), ',', ' ');
    ScanRow row{pats + "," + set_field(j.I) + "," + std::to_string(j.n) + "," + brute.get_str() +
                    "," + rec.get_str() + "," + (brute == rec ? "1" : "0"),
                brute == rec ? 0 : 1, ""};
    if (brute != rec) {
      row.notes = "# violation " + j.P.to_string() + " " + j.I.to_string() + " n=" +
                  std::to_string(j.n) + "\n";
    }
    return row;
  });
  return s;
}

const std::vector<std::string>& scan_checks() {
  static const std::vector<std::string> checks{"log-concave",     "c-nonneg", "root-conjecture",
                                               "disc",            "falling",  "corollary",
                                               "pattern-rec"};
  return checks;
}

ScanSection run_scan(const std::string& check, int max_m, unsigned threads) {
  if (check == "log-concave" || check == "c-nonneg") return scan_coeffs(check, max_m, threads);
  if (check == "root-conjecture") {
    return scan_roots({"conjecture_modulus", "conjecture_real_part"}, max_m, threads);
  }
  if (check == "disc") {
    return scan_roots({"root_count", "residual", "conjugate_closure", "disc_coverage",
                       "root_theorem_exact", "root_theorem_numeric", "real_root_bound",
                       "region_exclusion"},
                      max_m, threads);
  }
  if (check == "falling") return scan_falling(max_m, threads);
  if (check == "corollary") return scan_corollary(max_m, threads);
  if (check == "pattern-rec") return scan_patterns(max_m, threads);
  throw std::invalid_argument("unknown check '" + check + "'");
}

struct ScanOptions {
  std::string check = "all";
  int max_m = 6;
  std::string out;
};

int cmd_scan(const ScanOptions& o, unsigned threads, std::ostream& out) {
  if (o.max_m < 1 || o.max_m > 20) {
    throw std::invalid_argument("--max-m must lie in [1, 20]; larger m overflows the disc radii");
  }
  std::vector<std::string> checks;
  if (o.check == "all") {
    checks = scan_checks();
  } else {
    const auto& known = scan_checks();
    if (std::find(known.begin(), known.end(), o.check) == known.end()) {
      throw std::invalid_argument("unknown check '" + o.check + "'");
    }
    checks = {o.check};
  }
  std::ostringstream text;
  text << kCsvVersionLine << "\n";
  long total = 0;
  std::size_t rows = 0;
  for (const auto& check : checks) {
    const ScanSection s = run_scan(check, o.max_m, threads);
    long violations = 0;
    text << "# check " << check << " max_m=" << o.max_m << "\n" << s.header << "\n";
    std::size_t lines = 0;
    for (const auto& r : s.rows) {
      text << r.row << "\n";
      violations += r.violations;
      lines += 1 + static_cast<std::size_t>(std::count(r.row.begin(), r.row.end(), '\n'));
    }
    for (const auto& r : s.rows) text << r.notes;
    text << "# summary " << check << ": " << lines << " rows, " << violations
         << " violations\n";
    total += violations;
    rows += lines;
  }
  text << "# total: " << rows << " rows, " << total << " violations\n";
  emit(text.str(), o.out, out);
  return total == 0 ? kExitOk : kExitViolation;
}

// ---- enumerate ----------------------------------------------------------

struct EnumerateOptions {
  int n = 4;
  std::string type = "A";
  std::string stat = "descent";
  std::string set;
  bool set_given = false;
  std::string out;
};

int cmd_enumerate(const EnumerateOptions& o, unsigned threads, std::ostream& out) {
  const Group g = parse_group(o.type);
  if (o.n < (g == Group::D ? 2 : 1) || o.n > max_enumerable_n(g)) {
    throw std::invalid_argument("n must lie in [" + std::to_string(g == Group::D ? 2 : 1) + ", " +
                                std::to_string(max_enumerable_n(g)) + "] for type " + o.type);
  }
  std::vector<std::uint64_t> hist;
  if (o.stat == "descent") {
    hist = descent_histogram(o.n, g, threads);
  } else if (o.stat == "peak") {
    if (g != Group::A) throw std::invalid_argument("peak statistics are type A only");
    hist = peak_histogram(o.n, threads);
  } else {
    throw std::invalid_argument("unknown statistic '" + o.stat + "' (descent, peak)");
  }
  std::ostringstream text;
  if (o.set_given) {
    const SignedDescentSet I = SignedDescentSet::parse(o.set);
    if (g == Group::A && I.has_zero()) throw std::invalid_argument("0 is only allowed with --type B or D");
    if (I.max() >= o.n) throw std::invalid_argument("n must exceed max(I)");
    text << hist[index_mask(I.elems())] << "\n";
  } else {
    text << kCsvVersionLine << "\nset,count\n";
    for (std::uint64_t mask = 0; mask < hist.size(); ++mask) {
      if (hist[mask] != 0) text << set_field(mask_to_set(mask)) << "," << hist[mask] << "\n";
    }
  }
  emit(text.str(), o.out, out);
  return kExitOk;
}

// ---- patterns -----------------------------------------------------------

struct PatternOptions {
  std::string patterns = "132,231";
  std::string set;
  std::string range;
  bool peaks = false;
  std::string format = "text";
  std::string out;
};

int cmd_patterns(const PatternOptions& o, unsigned threads, std::ostream& out) {
  const DescentSet I = DescentSet::parse(o.set);
  std::ostringstream text;
  if (o.peaks) {
    long lo = 0;
    long hi = 0;
    if (!o.range.empty()) std::tie(lo, hi) = parse_range(o.range);
    const PeakCheck r = peak_poly_check(I, static_cast<int>(lo), static_cast<int>(hi));
    if (o.format == "json") {
      json counts = json::array();
      json quotients = json::array();
      for (const auto& c : r.counts) counts.push_back(c.get_str());
      for (const auto& q : r.quotients) quotients.push_back(q.get_str());
      text << json_text({{"set", I.elems()},
                         {"outcome", peak_outcome_name(r.outcome)},
                         {"n_lo", r.n_lo},
                         {"n_hi", r.n_hi},
                         {"counts", counts},
                         {"quotients", quotients},
                         {"polynomial", poly_json(r.poly)},
                         {"detail", r.detail}});
    } else if (o.format == "text") {
      text << "peak set " << I.to_string() << ": " << peak_outcome_name(r.outcome) << "\n";
      if (!r.detail.empty()) text << r.detail << "\n";
      for (std::size_t i = 0; i < r.quotients.size(); ++i) {
        text << "n = " << r.n_lo + static_cast<int>(i) << ": #P = " << r.counts[i].get_str()
             << ", p = " << r.quotients[i].get_str() << "\n";
      }
      if (r.outcome == PeakOutcome::Pass) text << "p(I;n) = " << r.poly.to_string("n") << "\n";
    } else {
      throw std::invalid_argument("--peaks supports text and json");
    }
    emit(text.str(), o.out, out);
    return r.outcome == PeakOutcome::Fail ? kExitViolation : kExitOk;
  }

  const PatternSet P = PatternSet::parse(o.patterns);
  long lo = std::max(1, I.max() + P.length() - 1);
  long hi = 7;
  if (!o.range.empty()) std::tie(lo, hi) = parse_range(o.range);
  if (lo < 0 || hi > max_enumerable_n(Group::A)) {
    throw std::invalid_argument("n must lie in [0, " + std::to_string(max_enumerable_n(Group::A)) + "]");
  }
  struct Line {
    long n;
    ExactInt av, brute;
    std::optional<ExactInt> rec;
  };
  std::vector<Line> lines;
  bool agree = true;
  for (long n = lo; n <= hi; ++n) {
    Line l{n, av_count(P, static_cast<int>(n), threads), pi_count(P, I, static_cast<int>(n), threads),
           std::nullopt};
    if (P.nonoverlapping()) {
      l.rec = pi_count_rec(P, I, static_cast<int>(n), threads);
      agree = agree && *l.rec == l.brute;
    }
    lines.push_back(std::move(l));
  }
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& l : lines) {
      json r{{"n", l.n}, {"av", l.av.get_str()}, {"count", l.brute.get_str()}};
      if (l.rec) r["recursion"] = l.rec->get_str();
      rows.push_back(r);
    }
    text << json_text({{"patterns", P.to_string()},
                       {"nonoverlapping", P.nonoverlapping()},
                       {"set", I.elems()},
                       {"values", rows}});
  } else if (o.format == "csv") {
    text << kCsvVersionLine << "\nn,av,count,recursion\n";
    for (const auto& l : lines) {
      text << l.n << "," << l.av.get_str() << "," << l.brute.get_str() << ","
           << (l.rec ? l.rec->get_str() : "") << "\n";
    }
  } else if (o.format == "text") {
    text << "patterns " << P.to_string() << " (" << (P.nonoverlapping() ? "nonoverlapping" : "overlapping")
         << "), I = " << I.to_string() << "\n";
    for (const auto& l : lines) {
      text << "n = " << l.n << ": av = " << l.av.get_str() << ", count = " << l.brute.get_str();
      if (l.rec) text << ", recursion = " << l.rec->get_str();
      text << "\n";
    }
  } else {
    throw std::invalid_argument("unknown format '" + o.format + "' (text, json, csv)");
  }
  emit(text.str(), o.out, out);
  return agree ? kExitOk : kExitViolation;
}

}  // namespace

std::pair<long, long> parse_range(const std::string& text) {
  auto to_long = [&](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument("malformed range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const long v = to_long(text);
    return {v, v};
  }
  const long lo = to_long(text.substr(0, dots));
  const long hi = to_long(text.substr(dots + 2));
  if (hi < lo) throw std::invalid_argument("empty range '" + text + "'");
  return {lo, hi};
}

unsigned default_threads() {
  const char* env = std::getenv("DESCENT_LAB_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  const std::string s(env);
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || v < 1 || v > 1024) {
    throw std::invalid_argument("DESCENT_LAB_THREADS must be a positive integer");
  }
  return static_cast<unsigned>(v);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    CLI::App app{"Descent polynomials: exact counts, coefficients, roots and pattern checks",
                 "descent-lab"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "Worker threads (default: DESCENT_LAB_THREADS or 1)")
        ->check(CLI::Range(1u, 1024u));

    ComputeOptions co;
    auto* compute = app.add_subcommand("compute", "Polynomial, basis expansion and values");
    compute->add_option("--set", co.set, "Descent set, e.g. 1,3 (\"\" for the empty set)")->required();
    compute->add_option("--type", co.type, "A, B or D");
    compute->add_option("--n", co.range, "n or a..b (default m+1..m+6)");
    compute->add_option("--basis", co.basis, "monomial, m, c, falling, or an integer center");
    compute->add_option("--format", co.format, "text, json or csv");
    compute->add_option("--out", co.out, "Output file");
    compute->add_flag("--verify", co.verify, "Cross-check values by enumeration");

    CertifyOptions ce;
    auto* certify = app.add_subcommand("certify", "Root certificate as JSON");
    certify->add_option("--set", ce.set, "Nonempty descent set")->required();
    certify->add_option("--svg", ce.svg, "Write an SVG figure");
    certify->add_option("--out", ce.out, "JSON output file");

    ScanOptions so;
    auto* scan = app.add_subcommand("scan", "Property scan over all I with max(I) <= --max-m");
    scan->add_option("--check", so.check,
                     "log-concave, c-nonneg, root-conjecture, disc, falling, corollary, "
                     "pattern-rec or all");
    scan->add_option("--max-m", so.max_m, "Largest m (1..20)");
    scan->add_option("--out", so.out, "CSV output file");

    EnumerateOptions eo;
    auto* enumerate = app.add_subcommand("enumerate", "Brute-force histogram");
    enumerate->add_option("--n", eo.n, "Permutation size")->required();
    enumerate->add_option("--type", eo.type, "A, B or D");
    enumerate->add_option("--stat", eo.stat, "descent or peak");
    auto* set_opt = enumerate->add_option("--set", eo.set, "Report the count for one set only");
    enumerate->add_option("--out", eo.out, "Output file");

    PatternOptions po;
    auto* patterns = app.add_subcommand("patterns", "Consecutive pattern counts");
    patterns->add_option("--patterns", po.patterns, "Comma-separated patterns, e.g. 132,231");
    patterns->add_option("--set", po.set, "Occurrence set (or peak set with --peaks)");
    patterns->add_option("--n", po.range, "n or a..b");
    patterns->add_flag("--peaks", po.peaks, "Check the peak polynomial of --set");
    patterns->add_option("--format", po.format, "text, json or csv");
    patterns->add_option("--out", po.out, "Output file");

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitUsage;
    }
    if (threads == 0) threads = default_threads();
    eo.set_given = set_opt->count() > 0;

    if (compute->parsed()) return cmd_compute(co, threads, out, err);
    if (certify->parsed()) return cmd_certify(ce, out, err);
    if (scan->parsed()) return cmd_scan(so, threads, out);
    if (enumerate->parsed()) return cmd_enumerate(eo, threads, out);
    if (patterns->parsed()) return cmd_patterns(po, threads, out);
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "descent-lab: internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const RootFindingError& e) {
    err << "descent-lab: root finding failed: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "descent-lab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "descent-lab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "descent-lab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "descent-lab: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace descent_lab
