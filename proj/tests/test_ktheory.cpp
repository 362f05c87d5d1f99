#include <doctest.h>

#include "battery.hpp"
#include "gkz/bundled.hpp"
#include "gkz/ktheory.hpp"

using namespace gkz;

namespace {

double max_abs(const CMat& M) { return M.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("unit roots") {
  CHECK(std::abs(unit_root(Rat(0)) - cplx(1)) < 1e-15);
  CHECK(std::abs(unit_root(rat(1, 2)) - cplx(-1)) < 1e-15);
  CHECK(std::abs(unit_root(rat(1, 4)) - cplx(0, 1)) < 1e-15);
  CHECK(std::abs(unit_root(rat(5, 2)) - cplx(-1)) < 1e-15);  // reduced mod 1
  CHECK(std::abs(unit_root(rat(-1, 3)) - std::polar(1.0, -2.0943951023931953)) < 1e-14);
}

TEST_CASE("k ring construction") {
  auto a1 = bundled_a1();
  SUBCASE("a1 fine: one unipotent sector of dimension 2") {
    auto T = bundled_triangulation(a1, "fine");
    auto K = build_kring(T);
    REQUIRE(K.sectors.size() == 1);
    CHECK(K.total_dim == 2);
    auto& s = K.sectors[0];
    CHECK(is_zero(s.box.v));
    for (size_t j = 0; j < 3; ++j) CHECK(std::abs(s.y[j] - cplx(1)) < 1e-15);
    // R_2 = exp(D_2), nilpotency 2, so exactly I + D_2
    CMat I = CMat::Identity(2, 2);
    CHECK(max_abs(s.R[1] - (I + s.D[1])) < 1e-14);
    CHECK(max_abs(s.D[1]) > 0);
  }
  SUBCASE("a1 coarse: two one dimensional sectors with a twisted eigenangle") {
    auto T = bundled_triangulation(a1, "coarse");
    auto K = build_kring(T);
    REQUIRE(K.sectors.size() == 2);
    CHECK(K.total_dim == 2);
    // sectors sorted by box point: (0,0) then (1,1)
    auto& tw = K.sectors[1];
    CHECK(tw.box.v == ivec({1, 1}));
    CHECK(std::abs(tw.y[0] - cplx(-1)) < 1e-14);
    CHECK(std::abs(tw.y[1] - cplx(1)) < 1e-14);
    CHECK(std::abs(tw.y[2] - cplx(-1)) < 1e-14);
    CHECK(tw.dim == 1);
  }
  SUBCASE("conifold and simplex") {
    auto con = bundled_conifold();
    for (const char* name : {"plus", "minus"}) {
      auto T = bundled_triangulation(con, name);
      auto K = build_kring(T);
      CHECK(K.total_dim == 2);
      CHECK(K.sectors.size() == 1);
    }
    auto s3 = bundled_simplex(3);
    auto T = bundled_triangulation(s3, "only");
    auto K = build_kring(T);
    CHECK(K.total_dim == 1);
    for (auto& R : K.sectors[0].R) CHECK(max_abs(R - CMat::Identity(1, 1)) < 1e-14);
  }
  SUBCASE("a2 fans") {
    auto a2 = bundled_a2();
    for (const char* name : {"fine", "coarse", "mid"}) {
      auto T = bundled_triangulation(a2, name);
      CHECK(build_kring(T).total_dim == 3);
    }
  }
}

TEST_CASE("functional calculus by jets") {
  auto a1 = bundled_a1();
  auto T = bundled_triangulation(a1, "fine");
  auto K = build_kring(T);
  auto fs = function_battery(3);

  SUBCASE("coordinate functions reproduce the generators") {
    auto blocks = apply_function(K, fs[1]);  // r0
    CHECK(max_abs(blocks[0] - K.sectors[0].R[0]) < 1e-14);
    auto last = apply_function(K, fs[2]);  // r_{n-1}
    CHECK(max_abs(last[0] - K.sectors[0].R[2]) < 1e-14);
  }
  SUBCASE("constant gives the identity") {
    auto blocks = apply_function(K, fs[0]);
    CHECK(max_abs(blocks[0] - CMat::Identity(2, 2)) < 1e-15);
  }
  SUBCASE("product function equals the matrix product") {
    auto blocks = apply_function(K, fs[3]);
    CMat want = K.sectors[0].R[0] * K.sectors[0].R[1] * K.sectors[0].R[2];
    CHECK(max_abs(blocks[0] - want) < 1e-13);
  }
  SUBCASE("an inconsistent jet is rejected") {
    JetFunction bad = fs[1];
    bad.eval = [](const std::vector<cplx>& r) { return r[0] * 2.0; };
    CHECK_THROWS_WITH_AS(apply_function(K, bad), doctest::Contains("finite difference"),
                         gkz_error);
  }
}

TEST_CASE("jet and contour evaluation agree") {
  auto check_battery = [](const Triangulation& T, size_t n, double delta, int N,
                          size_t limit) {
    auto K = build_kring(T);
    auto fs = function_battery(n);
    for (size_t i = 0; i < std::min(limit, fs.size()); ++i) {
      auto jet_blocks = apply_function(K, fs[i]);
      auto cau_blocks = cauchy_function(K, fs[i], delta, N);
      for (size_t b = 0; b < jet_blocks.size(); ++b) {
        CAPTURE(fs[i].name);
        CHECK(max_abs(jet_blocks[b] - cau_blocks[b]) < 1e-10);
      }
    }
  };
  SUBCASE("a1 fine, full battery") {
    auto a1 = bundled_a1();
    auto T = bundled_triangulation(a1, "fine");
    check_battery(T, 3, 0.5, 32, 12);
  }
  SUBCASE("a1 coarse, twisted sectors included") {
    auto a1 = bundled_a1();
    auto T = bundled_triangulation(a1, "coarse");
    check_battery(T, 3, 0.5, 32, 12);
  }
  SUBCASE("conifold, subset for speed") {
    auto con = bundled_conifold();
    auto T = bundled_triangulation(con, "plus");
    check_battery(T, 4, 0.5, 24, 5);
  }
  SUBCASE("node doubling is converged") {
    auto a1 = bundled_a1();
    auto T = bundled_triangulation(a1, "fine");
    auto K = build_kring(T);
    auto fs = function_battery(3);
    auto c32 = cauchy_function(K, fs[7], 0.5, 32);
    auto c64 = cauchy_function(K, fs[7], 0.5, 64);
    CHECK(max_abs(c32[0] - c64[0]) < 1e-12);
  }
  SUBCASE("overlapping contours are rejected") {
    auto a1 = bundled_a1();
    auto T = bundled_triangulation(a1, "coarse");
    auto K = build_kring(T);
    auto fs = function_battery(3);
    CHECK_THROWS_WITH_AS(cauchy_function(K, fs[0], 2.5, 16),
                         doctest::Contains("foreign eigenvalue"), gkz_error);
  }
}

TEST_CASE("chern character identification") {
  std::vector<std::pair<BundledConfig, std::string>> cases = {
      {bundled_a1(), "fine"},        {bundled_a1(), "coarse"},
      {bundled_a2(), "fine"},        {bundled_a2(), "mid"},
      {bundled_conifold(), "plus"},  {bundled_conifold(), "minus"},
      {bundled_simplex(3), "only"}};
  for (auto& [b, name] : cases) {
    CAPTURE(b.name);
    CAPTURE(name);
    auto T = bundled_triangulation(b, name);
    auto K = build_kring(T);
    auto S = quotient_basis(T);
    auto ch = ch_isomorphism(K, S);  // intertwining verified inside
    // stacked map is a vector space isomorphism
    CMat full(S.dim, K.total_dim);
    size_t col = 0;
    for (auto& C : ch.C) {
      full.block(0, col, S.dim, C.cols()) = C;
      col += C.cols();
    }
    REQUIRE(S.dim == K.total_dim);
    Eigen::JacobiSVD<CMat> svd(full);
    CHECK(svd.singularValues()(S.dim - 1) > 1e-10);
  }
}
