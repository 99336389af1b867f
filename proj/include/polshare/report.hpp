#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polshare/bounds.hpp"
#include "polshare/scalar.hpp"

namespace polshare {

inline constexpr std::string_view kGeneratorVersion = "polshare 1.0.0";

struct ShareRequest {
  /// Total qubits; defaults to max(k_max, p). Only matters for k < p rows.
  std::optional<unsigned> n;
  unsigned p = 0;
  Rational sigma = 1;
  unsigned k_min = 2;
  unsigned k_max = 16;
  BoundFamily bound = BoundFamily::gurvits_barnum;
  int precision = 15;

  /// Throws DomainError for inconsistent ranges.
  void validate() const;
};

struct ReportRow {
  unsigned k = 0;
  std::string f_exact;
  std::string f_dec;
  std::string delta_exact;
  std::string delta_dec;
  std::string delta_l;  // exact when rational, decimal otherwise
  std::string delta_u_dec;
  Region region = Region::S;
  bool on_border = false;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ReportMeta {
  unsigned p = 0;
  std::string sigma;  // exact "num/den"
  std::optional<unsigned> n;
  std::string bound;
  std::string convention = "none";
  std::string generator_version{kGeneratorVersion};
  unsigned k_min = 2;
  unsigned k_max = 16;
  int precision = 15;

  friend bool operator==(const ReportMeta&, const ReportMeta&) = default;
};

struct SharingReport {
  ReportMeta meta;
  std::vector<ReportRow> rows;

  friend bool operator==(const SharingReport&, const SharingReport&) = default;
};

/// One row: closed forms for k >= p, spectral overlap on n qubits for k < p.
ReportRow compute_row(unsigned n, unsigned p, const Rational& sigma, unsigned k, BoundFamily bound, int precision);

SharingReport build_share_report(const ShareRequest& request);

/// Inverse of the meta block, for recomputing a parsed report.
ShareRequest request_from_meta(const ReportMeta& meta);

std::string to_csv(const SharingReport& report);
std::string to_json(const SharingReport& report);
SharingReport parse_csv(std::string_view text);
SharingReport parse_json(std::string_view text);

enum class Figure { fig2, fig3 };

Figure parse_figure(std::string_view text);
std::string to_string(Figure f);

struct FigurePoint {
  unsigned k = 0;
  std::string exact;  // empty when the value is irrational
  std::string decimal;
  std::optional<Region> region;
  bool on_border = false;
};

struct FigureSeries {
  std::string name;
  std::string kind;  // "curve" or "boundary"
  std::optional<unsigned> p;
  std::string sigma;
  std::optional<BoundFamily> bound;
  std::vector<FigurePoint> points;
};

struct FigureData {
  Figure figure = Figure::fig2;
  std::string title;
  std::string note;
  unsigned k_min = 2;
  unsigned k_max = 16;
  std::vector<FigureSeries> series;
};

/// Polarization used for the single weakly polarized spin of fig3.
Rational weak_spin_sigma();

FigureData build_figure(Figure figure, int precision = 15);
std::string figure_csv(const FigureData& data);
std::string figure_json(const FigureData& data);

}  // namespace polshare
