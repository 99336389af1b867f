#include <doctest.h>

#include <json.hpp>

#include "polshare/errors.hpp"
#include "polshare/report.hpp"
#include "test_support.hpp"

using namespace polshare;
using polshare::test::q;

namespace {

ShareRequest pure_p2() {
  ShareRequest r;
  r.p = 2;
  r.sigma = 1;
  r.k_min = 2;
  r.k_max = 6;
  return r;
}

}  // namespace

TEST_CASE("share report for two pure spins") {
  const SharingReport report = build_share_report(pure_p2());
  REQUIRE(report.rows.size() == 5);
  const char* deltas[] = {"1", "3/7", "1/5", "3/31", "1/21"};
  const Region regions[] = {Region::E, Region::E, Region::ES, Region::ES, Region::ES};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(report.rows[i].k == i + 2);
    CHECK(report.rows[i].delta_exact == deltas[i]);
    CHECK(report.rows[i].region == regions[i]);
  }
  CHECK(report.rows[2].on_border);
  CHECK(report.rows[2].delta_u_dec == "0.2");
  CHECK(report.rows[1].delta_dec == "0.428571428571429");
}

TEST_CASE("share report rows") {
  SUBCASE("partial polarization at k=3") {
    ShareRequest r;
    r.p = 2;
    r.sigma = q("1/2");
    r.k_min = r.k_max = 3;
    const auto row = build_share_report(r).rows.at(0);
    CHECK(row.f_exact == "9/32");
    CHECK(row.delta_exact == "5/28");
  }
  SUBCASE("no polarized spins") {
    ShareRequest r;
    r.p = 0;
    r.sigma = q("0.7");
    for (const auto& row : build_share_report(r).rows) {
      CHECK(row.delta_exact == "0");
      CHECK(row.region == Region::S);
    }
  }
  SUBCASE("concentration rows use the spectral path") {
    ShareRequest r;
    r.n = 3;
    r.p = 3;
    r.sigma = q("1/2");
    r.k_min = 2;
    r.k_max = 3;
    const auto rows = build_share_report(r).rows;
    // top two of 27,9,9,9,3,3,3,1 over 64
    CHECK(rows[0].f_exact == "9/16");
    CHECK(rows[1].f_exact == "27/64");
  }
  SUBCASE("Braunstein lower bound is exact") {
    ShareRequest r = pure_p2();
    r.bound = BoundFamily::braunstein;
    CHECK(build_share_report(r).rows[1].delta_l == "1/33");
  }
}

TEST_CASE("share request validation") {
  ShareRequest r = pure_p2();
  r.k_min = 1;
  CHECK_THROWS_AS(build_share_report(r), DomainError);
  r = pure_p2();
  r.k_max = 1;
  CHECK_THROWS_AS(build_share_report(r), DomainError);
  r = pure_p2();
  r.n = 4;
  CHECK_THROWS_AS(build_share_report(r), DomainError);
  r = pure_p2();
  r.sigma = 2;
  CHECK_THROWS_AS(build_share_report(r), DomainError);
}

TEST_CASE("CSV and JSON re-parse to the same exact values") {
  for (const char* sigma : {"1", "1/2", "0.032", "3/4"}) {
    for (unsigned p : {0U, 1U, 3U, 5U}) {
      ShareRequest r;
      r.p = p;
      r.sigma = q(sigma);
      r.k_min = 2;
      r.k_max = 12;
      r.bound = p % 2 ? BoundFamily::braunstein : BoundFamily::gurvits_barnum;
      const SharingReport report = build_share_report(r);

      const SharingReport from_csv = parse_csv(to_csv(report));
      const SharingReport from_json = parse_json(to_json(report));
      CHECK(from_csv == report);
      CHECK(from_json == report);
      // Recomputing from the parsed metadata reproduces identical rows.
      CHECK(build_share_report(request_from_meta(from_csv.meta)) == report);
      CHECK(to_csv(from_csv) == to_csv(report));
      CHECK(to_json(from_json) == to_json(report));
    }
  }
}

TEST_CASE("parsers reject damaged input") {
  const std::string csv = to_csv(build_share_report(pure_p2()));
  CHECK_THROWS_AS(parse_csv("k,f\n1,2\n"), DomainError);
  std::string missing_meta = csv.substr(csv.find("# p="));
  CHECK_THROWS_AS(parse_csv(missing_meta), DomainError);
  std::string bad_region = csv;
  bad_region.replace(bad_region.rfind(",ES,"), 4, ",XX,");
  CHECK_THROWS_AS(parse_csv(bad_region), DomainError);
  CHECK_THROWS_AS(parse_json("{"), DomainError);
  CHECK_THROWS_AS(parse_json(R"({"meta": {}})"), DomainError);
}

TEST_CASE("outputs are deterministic") {
  CHECK(to_csv(build_share_report(pure_p2())) == to_csv(build_share_report(pure_p2())));
  CHECK(figure_json(build_figure(Figure::fig3)) == figure_json(build_figure(Figure::fig3)));
}

TEST_CASE("figure data") {
  auto find = [](const FigureData& d, const std::string& name) -> const FigureSeries& {
    for (const auto& s : d.series) {
      if (s.name == name) return s;
    }
    throw std::runtime_error("missing series " + name);
  };
  auto at = [](const FigureSeries& s, unsigned k) -> const FigurePoint& {
    for (const auto& p : s.points) {
      if (p.k == k) return p;
    }
    throw std::runtime_error("missing k");
  };

  const FigureData fig2 = build_figure(Figure::fig2);
  CHECK(at(find(fig2, "p=2"), 3).exact == "3/7");
  CHECK(at(find(fig2, "p=4"), 8).exact == "1/17");
  CHECK(at(find(fig2, "p=4"), 8).on_border);
  CHECK(at(find(fig2, "delta_u"), 4).decimal == "0.2");
  CHECK(at(find(fig2, "delta_u"), 3).exact.empty());
  CHECK(find(fig2, "delta_u").points.size() == 15);

  const FigureData fig3 = build_figure(Figure::fig3);
  const FigureSeries& weak = find(fig3, "p=1 weak");
  CHECK(weak.sigma == "4/125");
  CHECK(weak.bound == BoundFamily::braunstein);
  CHECK(at(weak, 5).region == Region::S);
  CHECK(at(weak, 6).region == Region::ES);
  CHECK(fig3.note.find("reconstruction") != std::string::npos);
  CHECK(find(fig3, "p=5 sigma=1/2").points.size() == 15);

  const auto doc = nlohmann::json::parse(figure_json(fig3));
  CHECK(doc["meta"]["note"].get<std::string>().find("reconstruction") != std::string::npos);
  CHECK(doc["series"].size() == 6);
  const std::string csv = figure_csv(fig2);
  CHECK(csv.find("p=2,curve,2,1,gb,3,3/7,0.428571428571429,E,false\n") != std::string::npos);
  CHECK(csv.find("delta_u,boundary,,,,4,1/5,0.2,,\n") != std::string::npos);
}
