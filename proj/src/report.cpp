#include "polshare/report.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include <json.hpp>

#include "polshare/closed_forms.hpp"
#include "polshare/errors.hpp"
#include "polshare/spectrum.hpp"

namespace polshare {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kCsvHeader =
    "k,f_exact,f_dec,delta_exact,delta_dec,delta_l_exact_or_dec,delta_u_dec,region,on_border";

unsigned parse_unsigned(std::string_view text, std::string_view what) {
  unsigned value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw DomainError("bad " + std::string(what) + ": '" + std::string(text) + "'");
  return value;
}

bool parse_bool(std::string_view text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw DomainError("bad boolean '" + std::string(text) + "'");
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    parts.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

void ShareRequest::validate() const {
  if (sigma < 0 || sigma > 1) throw DomainError("sigma = " + to_exact_string(sigma) + " outside [0, 1]");
  if (k_min < 2) throw DomainError("k-min must be at least 2 (regions need two or more qubits)");
  if (k_max < k_min) throw DomainError("k-max is smaller than k-min");
  if (precision < 1 || precision > 1000) throw DomainError("precision must be in 1..1000");
  if (n) {
    if (p > *n) throw DomainError("p exceeds n");
    if (k_max > *n) throw DomainError("k-max exceeds n");
  }
}

ReportRow compute_row(unsigned n, unsigned p, const Rational& sigma, unsigned k, BoundFamily bound, int precision) {
  Rational f;
  Rational delta;
  if (k >= p) {
    f = f_partial(p, k, sigma);
    delta = delta_partial(p, k, sigma);
  } else {
    f = overlap_f({n, p, sigma}, k);
    delta = bias_from_f(f, k);
  }
  const RegionVerdict verdict = classify_region(delta, k, bound);
  ReportRow row;
  row.k = k;
  row.f_exact = to_exact_string(f);
  row.f_dec = to_decimal_string(f, precision);
  row.delta_exact = to_exact_string(delta);
  row.delta_dec = to_decimal_string(delta, precision);
  row.delta_l = lower_bound(bound, k).exact_or_decimal(precision);
  row.delta_u_dec = delta_upper(k).decimal(precision);
  row.region = verdict.region;
  row.on_border = verdict.on_border;
  return row;
}

SharingReport build_share_report(const ShareRequest& request) {
  request.validate();
  const unsigned n = request.n.value_or(std::max(request.k_max, request.p));

  SharingReport report;
  report.meta.p = request.p;
  report.meta.sigma = to_exact_string(request.sigma);
  report.meta.n = request.n;
  report.meta.bound = to_string(request.bound);
  report.meta.k_min = request.k_min;
  report.meta.k_max = request.k_max;
  report.meta.precision = request.precision;
  for (unsigned k = request.k_min; k <= request.k_max; ++k) {
    report.rows.push_back(compute_row(n, request.p, request.sigma, k, request.bound, request.precision));
  }
  return report;
}

ShareRequest request_from_meta(const ReportMeta& meta) {
  ShareRequest r;
  r.n = meta.n;
  r.p = meta.p;
  r.sigma = parse_exact(meta.sigma);
  r.k_min = meta.k_min;
  r.k_max = meta.k_max;
  r.bound = parse_bound_family(meta.bound);
  r.precision = meta.precision;
  return r;
}

std::string to_csv(const SharingReport& report) {
  std::ostringstream out;
  const auto& m = report.meta;
  out << "# generator=" << m.generator_version << '\n'
      << "# p=" << m.p << '\n'
      << "# sigma=" << m.sigma << '\n'
      << "# n=" << (m.n ? std::to_string(*m.n) : std::string()) << '\n'
      << "# bound=" << m.bound << '\n'
      << "# convention=" << m.convention << '\n'
      << "# k_min=" << m.k_min << '\n'
      << "# k_max=" << m.k_max << '\n'
      << "# precision=" << m.precision << '\n'
      << kCsvHeader << '\n';
  for (const auto& r : report.rows) {
    out << r.k << ',' << r.f_exact << ',' << r.f_dec << ',' << r.delta_exact << ',' << r.delta_dec << ','
        << r.delta_l << ',' << r.delta_u_dec << ',' << to_string(r.region) << ','
        << (r.on_border ? "true" : "false") << '\n';
  }
  return out.str();
}

SharingReport parse_csv(std::string_view text) {
  SharingReport report;
  std::map<std::string, std::string, std::less<>> meta;
  bool header_seen = false;
  for (std::string_view line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      line.remove_prefix(1);
      if (!line.empty() && line.front() == ' ') line.remove_prefix(1);
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) throw DomainError("bad metadata line '" + std::string(line) + "'");
      meta.emplace(std::string(line.substr(0, eq)), std::string(line.substr(eq + 1)));
      continue;
    }
    if (!header_seen) {
      if (line != kCsvHeader) throw DomainError("unexpected CSV header '" + std::string(line) + "'");
      header_seen = true;
      continue;
    }
    const auto cells = split(line, ',');
    if (cells.size() != 9) throw DomainError("CSV row has " + std::to_string(cells.size()) + " cells, expected 9");
    ReportRow row;
    row.k = parse_unsigned(cells[0], "k");
    row.f_exact = cells[1];
    row.f_dec = cells[2];
    row.delta_exact = cells[3];
    row.delta_dec = cells[4];
    row.delta_l = cells[5];
    row.delta_u_dec = cells[6];
    row.region = parse_region(cells[7]);
    row.on_border = parse_bool(cells[8]);
    report.rows.push_back(std::move(row));
  }
  if (!header_seen) throw DomainError("CSV header missing");

  auto get = [&](std::string_view key) -> const std::string& {
    auto it = meta.find(key);
    if (it == meta.end()) throw DomainError("CSV metadata '" + std::string(key) + "' missing");
    return it->second;
  };
  auto& m = report.meta;
  m.generator_version = get("generator");
  m.p = parse_unsigned(get("p"), "p");
  m.sigma = get("sigma");
  if (const auto& n = get("n"); !n.empty()) m.n = parse_unsigned(n, "n");
  m.bound = get("bound");
  m.convention = get("convention");
  m.k_min = parse_unsigned(get("k_min"), "k_min");
  m.k_max = parse_unsigned(get("k_max"), "k_max");
  m.precision = static_cast<int>(parse_unsigned(get("precision"), "precision"));
  return report;
}

std::string to_json(const SharingReport& report) {
  const auto& m = report.meta;
  ordered_json meta = {
      {"p", m.p},
      {"sigma", m.sigma},
      {"n", m.n ? ordered_json(*m.n) : ordered_json(nullptr)},
      {"bound", m.bound},
      {"convention", m.convention},
      {"generator_version", m.generator_version},
      {"k_min", m.k_min},
      {"k_max", m.k_max},
      {"precision", m.precision},
  };
  ordered_json rows = ordered_json::array();
  for (const auto& r : report.rows) {
    rows.push_back({
        {"k", r.k},
        {"f_exact", r.f_exact},
        {"f_dec", r.f_dec},
        {"delta_exact", r.delta_exact},
        {"delta_dec", r.delta_dec},
        {"delta_l_exact_or_dec", r.delta_l},
        {"delta_u_dec", r.delta_u_dec},
        {"region", to_string(r.region)},
        {"on_border", r.on_border},
    });
  }
  return ordered_json{{"meta", std::move(meta)}, {"rows", std::move(rows)}}.dump(2) + '\n';
}

SharingReport parse_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed JSON report: ") + e.what());
  }
  try {
    SharingReport report;
    const auto& jm = doc.at("meta");
    auto& m = report.meta;
    m.p = jm.at("p").get<unsigned>();
    m.sigma = jm.at("sigma").get<std::string>();
    if (!jm.at("n").is_null()) m.n = jm.at("n").get<unsigned>();
    m.bound = jm.at("bound").get<std::string>();
    m.convention = jm.at("convention").get<std::string>();
    m.generator_version = jm.at("generator_version").get<std::string>();
    m.k_min = jm.at("k_min").get<unsigned>();
    m.k_max = jm.at("k_max").get<unsigned>();
    m.precision = jm.at("precision").get<int>();
    for (const auto& jr : doc.at("rows")) {
      ReportRow r;
      r.k = jr.at("k").get<unsigned>();
      r.f_exact = jr.at("f_exact").get<std::string>();
      r.f_dec = jr.at("f_dec").get<std::string>();
      r.delta_exact = jr.at("delta_exact").get<std::string>();
      r.delta_dec = jr.at("delta_dec").get<std::string>();
      r.delta_l = jr.at("delta_l_exact_or_dec").get<std::string>();
      r.delta_u_dec = jr.at("delta_u_dec").get<std::string>();
      r.region = parse_region(jr.at("region").get<std::string>());
      r.on_border = jr.at("on_border").get<bool>();
      report.rows.push_back(std::move(r));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("JSON report is missing fields: ") + e.what());
  }
}

Figure parse_figure(std::string_view text) {
  if (text == "fig2") return Figure::fig2;
  if (text == "fig3") return Figure::fig3;
  throw DomainError("unknown figure '" + std::string(text) + "' (expected fig2 or fig3)");
}

std::string to_string(Figure f) { return f == Figure::fig2 ? "fig2" : "fig3"; }

Rational weak_spin_sigma() { return Rational(4, 125); }

namespace {

FigureSeries curve(std::string name, unsigned p, const Rational& sigma, BoundFamily bound, unsigned k_min,
                   unsigned k_max, int precision) {
  FigureSeries s{std::move(name), "curve", p, to_exact_string(sigma), bound, {}};
  const unsigned n = std::max(k_max, p);
  for (unsigned k = k_min; k <= k_max; ++k) {
    const ReportRow row = compute_row(n, p, sigma, k, bound, precision);
    s.points.push_back({k, row.delta_exact, row.delta_dec, row.region, row.on_border});
  }
  return s;
}

FigureSeries boundary(std::string name, Bound::Kind kind, unsigned k_min, unsigned k_max, int precision) {
  FigureSeries s{std::move(name), "boundary", std::nullopt, {}, std::nullopt, {}};
  for (unsigned k = k_min; k <= k_max; ++k) {
    const Bound b(kind, k);
    const auto exact = b.exact_value();
    s.points.push_back({k, exact ? to_exact_string(*exact) : std::string(), b.decimal(precision), std::nullopt, false});
  }
  return s;
}

}  // namespace

FigureData build_figure(Figure figure, int precision) {
  FigureData d;
  d.figure = figure;
  const unsigned lo = d.k_min;
  const unsigned hi = d.k_max;
  if (figure == Figure::fig2) {
    d.title = "Sharing the polarization of 2 and 4 pure spins";
    d.series.push_back(curve("p=2", 2, 1, BoundFamily::gurvits_barnum, lo, hi, precision));
    d.series.push_back(curve("p=4", 4, 1, BoundFamily::gurvits_barnum, lo, hi, precision));
  } else {
    d.title = "Sharing the polarization of impure spins";
    d.note = "reconstruction: weak-spin polarization is unknown; sigma = 0.032 "
             "(4/125) is chosen and classified against the Braunstein lower bound";
    d.series.push_back(curve("p=5 pure", 5, 1, BoundFamily::gurvits_barnum, lo, hi, precision));
    d.series.push_back(curve("p=5 sigma=1/2", 5, Rational(1, 2), BoundFamily::gurvits_barnum, lo, hi, precision));
    d.series.push_back(curve("p=1 weak", 1, weak_spin_sigma(), BoundFamily::braunstein, lo, hi, precision));
  }
  d.series.push_back(boundary("delta_l_braunstein", Bound::Kind::lower_braunstein, lo, hi, precision));
  d.series.push_back(boundary("delta_l_gb", Bound::Kind::lower_gurvits_barnum, lo, hi, precision));
  d.series.push_back(boundary("delta_u", Bound::Kind::upper, lo, hi, precision));
  return d;
}

std::string figure_csv(const FigureData& data) {
  std::ostringstream out;
  out << "# figure=" << to_string(data.figure) << '\n'
      << "# title=" << data.title << '\n'
      << "# generator=" << kGeneratorVersion << '\n';
  if (!data.note.empty()) out << "# note=" << data.note << '\n';
  out << "series,kind,p,sigma,bound,k,exact,decimal,region,on_border\n";
  for (const auto& s : data.series) {
    for (const auto& pt : s.points) {
      out << s.name << ',' << s.kind << ',' << (s.p ? std::to_string(*s.p) : std::string()) << ',' << s.sigma << ','
          << (s.bound ? to_string(*s.bound) : std::string()) << ',' << pt.k << ',' << pt.exact << ',' << pt.decimal
          << ',' << (pt.region ? to_string(*pt.region) : std::string()) << ','
          << (pt.region ? (pt.on_border ? "true" : "false") : "") << '\n';
    }
  }
  return out.str();
}

std::string figure_json(const FigureData& data) {
  ordered_json series = ordered_json::array();
  for (const auto& s : data.series) {
    ordered_json points = ordered_json::array();
    for (const auto& pt : s.points) {
      ordered_json jp = {{"k", pt.k},
                         {"exact", pt.exact.empty() ? ordered_json(nullptr) : ordered_json(pt.exact)},
                         {"decimal", pt.decimal}};
      if (pt.region) {
        jp["region"] = to_string(*pt.region);
        jp["on_border"] = pt.on_border;
      }
      points.push_back(std::move(jp));
    }
    ordered_json js = {{"name", s.name}, {"kind", s.kind}};
    if (s.p) js["p"] = *s.p;
    if (!s.sigma.empty()) js["sigma"] = s.sigma;
    if (s.bound) js["bound"] = to_string(*s.bound);
    js["points"] = std::move(points);
    series.push_back(std::move(js));
  }
  ordered_json meta = {{"figure", to_string(data.figure)},
                       {"title", data.title},
                       {"generator_version", std::string(kGeneratorVersion)},
                       {"k_min", data.k_min},
                       {"k_max", data.k_max}};
  if (!data.note.empty()) meta["note"] = data.note;
  return ordered_json{{"meta", std::move(meta)}, {"series", std::move(series)}}.dump(2) + '\n';
}

}  // namespace polshare
