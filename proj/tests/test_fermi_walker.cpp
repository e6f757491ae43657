#include "gal3/fermi_walker.hpp"

#include "doctest.h"
#include "gal3/errors.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace gal3;

namespace {

Curve cubic_curve() {
  return make_curve(sf_poly({0.0, 0.0, 1.0}), sf_poly({0.0, 0.0, 0.0, 1.0}), 0.0, 1.0);
}

Curve helix_curve() {
  ScalarFunction y, z;
  y.trig.push_back({-2.0 / 9.0, 0.0, 3.0});
  z.trig.push_back({0.0, -2.0 / 9.0, 3.0});
  return make_curve(y, z, 0.0, std::acos(-1.0) / 3.0);
}

Curve line_curve() {
  return make_curve(sf_poly({1.0, 2.0}), sf_poly({0.0, -1.0}), 0.0, 1.0);
}

FrameVectorField unit_field(FrameBasis basis, int axis) {
  ScalarFunction one = sf_constant(1.0);
  ScalarFunction zero;
  return make_field(basis, axis == 1 ? one : zero, axis == 2 ? one : zero,
                    axis == 3 ? one : zero);
}

ScalarFunction random_sf(std::mt19937& rng) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  return sf_poly({d(rng), d(rng), d(rng)});
}

}  // namespace

TEST_CASE("field isotropy is structural") {
  ScalarFunction zero;
  CHECK(field_isotropic(make_field(FrameBasis::Frenet, zero, sf_constant(1.0), zero)));
  CHECK_FALSE(field_isotropic(make_field(FrameBasis::Frenet, sf_constant(1.0), zero, zero)));
  CHECK(field_isotropic(make_field(FrameBasis::Frenet, sf_constant(0.0), zero, zero)));
}

TEST_CASE("the isotropy dichotomy is enforced globally") {
  // l1 = x - 0.5 crosses the cutoff inside the domain
  FrameVectorField X = make_field(FrameBasis::Frenet, sf_poly({-0.5, 1.0}),
                                  sf_constant(1.0), ScalarFunction{});
  CHECK_THROWS_AS(lambdas_at(X, 0.5), ValidationError);
  LambdaAt ok = lambdas_at(X, 0.0);
  CHECK(ok.l1 == -0.5);
  CHECK(ok.d1 == 1.0);
}

TEST_CASE("frame_at in the Frenet basis") {
  Curve c = cubic_curve();
  FrameAt fr = frame_at(c, FrameBasis::Frenet, nullptr, 0.0);
  CHECK_FALSE(fr.line);
  CHECK(fr.k1 == 2.0);
  CHECK(fr.k2 == 0.0);
  CHECK(fr.twist == 3.0);
  CHECK(e_norm(fr.de1 - fr.k1 * fr.e2) <= 1e-12);
  CHECK(e_norm(fr.de2 - fr.twist * fr.e3) <= 1e-12);
  CHECK(e_norm(fr.de3 + fr.twist * fr.e2) <= 1e-12);
}

TEST_CASE("frame_at on a line uses the constant completion") {
  Curve c = line_curve();
  FrameAt fr = frame_at(c, FrameBasis::Frenet, nullptr, 0.5);
  CHECK(fr.line);
  CHECK(fr.e1.v1 == 1.0);
  CHECK(fr.e1.v2 == 2.0);
  CHECK(fr.e1.v3 == -1.0);
  CHECK(e_norm(fr.e2 - GVec3{0.0, 1.0, 0.0}) == 0.0);
  CHECK(e_norm(fr.e3 - GVec3{0.0, 0.0, 1.0}) == 0.0);
  CHECK(fr.k1 == 0.0);
  CHECK(fr.k2 == 0.0);
  CHECK(fr.twist == 0.0);
  CHECK(e_norm(fr.de1) == 0.0);
  // attachment is ignored on a line
  SurfaceAttachment att = make_attachment(sf_poly({0.0, 5.0}));
  FrameAt fd = frame_at(c, FrameBasis::Darboux, &att, 0.5);
  CHECK(fd.line);
  CHECK(fd.twist == 0.0);
}

TEST_CASE("darboux basis needs an attachment off lines") {
  Curve c = cubic_curve();
  CHECK_THROWS_AS(frame_at(c, FrameBasis::Darboux, nullptr, 0.5), ValidationError);
}

TEST_CASE("fermi-walker derivative of the tangent vanishes") {
  Curve c = cubic_curve();
  FrameVectorField T = unit_field(FrameBasis::Frenet, 1);
  for (double x : sample_grid(c, 21)) {
    CHECK(e_norm(fw_derivative_definition(c, T, x)) <= 1e-12);
    CHECK(e_norm(fw_derivative_frenet(c, T, x)) <= 1e-12);
  }
}

TEST_CASE("fermi-walker derivative of the principal normal") {
  Curve c = cubic_curve();
  FrameVectorField N = unit_field(FrameBasis::Frenet, 2);
  GVec3 v = fw_derivative_definition(c, N, 0.0);
  // N' = tau B and the correction adds kappa T
  CHECK(v.v1 == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(v.v2) <= 1e-14);
  CHECK(v.v3 == doctest::Approx(3.0).epsilon(1e-14));
  // so it differs from the plain derivative by exactly kappa T
  FrameAt fr = frame_at(c, FrameBasis::Frenet, nullptr, 0.0);
  LambdaAt lam = lambdas_at(N, 0.0);
  GVec3 plain = ambient_derivative(fr, lam);
  CHECK(e_norm(v - plain - fr.k1 * fr.e1) <= 1e-12);
}

TEST_CASE("fermi-walker derivative of the binormal is minus tau N") {
  Curve c = cubic_curve();
  FrameVectorField B = unit_field(FrameBasis::Frenet, 3);
  for (double x : {0.0, 0.3, 0.8}) {
    GVec3 v = fw_derivative_definition(c, B, x);
    FrenetSample s = frenet_frame(c, x);
    CHECK(e_norm(v + s.tau * s.N) <= 1e-12);
  }
}

TEST_CASE("mixed non-isotropic field keeps only the rotation part") {
  Curve c = cubic_curve();
  ScalarFunction one = sf_constant(1.0);
  FrameVectorField X = make_field(FrameBasis::Frenet, one, ScalarFunction{}, one);  // T + B
  GVec3 v = fw_derivative_definition(c, X, 0.0);
  // T' contributes kappa N, the correction removes it, B' = -tau N stays
  CHECK(std::abs(v.v1) <= 1e-14);
  CHECK(v.v2 == doctest::Approx(-3.0).epsilon(1e-14));
  CHECK(std::abs(v.v3) <= 1e-14);
}

TEST_CASE("branch forms match the definition everywhere") {
  std::mt19937 rng(4242);
  Curve cubic = cubic_curve();
  Curve helix = helix_curve();
  SurfaceAttachment att = make_attachment(sf_poly({0.2, 0.6}));
  for (int i = 0; i < 200; ++i) {
    const Curve& c = (i % 2 == 0) ? cubic : helix;
    std::uniform_real_distribution<double> dx(c.x_min, c.x_max);
    double x = dx(rng);
    bool iso = (i % 4 < 2);

    ScalarFunction l1 = iso ? ScalarFunction{} : sf_sum(random_sf(rng), sf_constant(3.0));
    FrameVectorField Xf = make_field(FrameBasis::Frenet, l1, random_sf(rng), random_sf(rng));
    GVec3 def = fw_derivative_definition(c, Xf, x);
    GVec3 branch = fw_derivative_frenet(c, Xf, x);
    CHECK(e_norm(def - branch) <= 1e-12 * (1.0 + e_norm_inf(def)));

    FrameVectorField Xd = make_field(FrameBasis::Darboux, l1, random_sf(rng), random_sf(rng));
    GVec3 defd = fw_derivative_definition(c, Xd, x, &att);
    GVec3 branchd = fw_derivative_darboux(c, att, Xd, x);
    CHECK(e_norm(defd - branchd) <= 1e-12 * (1.0 + e_norm_inf(defd)));
  }
}

TEST_CASE("darboux branch with zero angle equals the frenet branch") {
  Curve c = cubic_curve();
  SurfaceAttachment att = make_attachment(sf_constant(0.0));
  ScalarFunction l2 = sf_poly({1.0, -0.5});
  ScalarFunction l3 = sf_poly({0.0, 2.0});
  FrameVectorField Xf = make_field(FrameBasis::Frenet, ScalarFunction{}, l2, l3);
  FrameVectorField Xd = make_field(FrameBasis::Darboux, ScalarFunction{}, l2, l3);
  for (double x : sample_grid(c, 11)) {
    GVec3 f = fw_derivative_frenet(c, Xf, x);
    GVec3 d = fw_derivative_darboux(c, att, Xd, x);
    CHECK(e_norm(f - d) <= 1e-13);
  }
}

TEST_CASE("on a line the fermi-walker derivative is the plain derivative") {
  Curve c = line_curve();
  std::mt19937 rng(17);
  for (int i = 0; i < 20; ++i) {
    FrameVectorField X = make_field(FrameBasis::Frenet, sf_sum(random_sf(rng), sf_constant(3.0)),
                                    random_sf(rng), random_sf(rng));
    for (double x : sample_grid(c, 7)) {
      FrameAt fr = frame_at(c, FrameBasis::Frenet, nullptr, x);
      LambdaAt lam = lambdas_at(X, x);
      GVec3 plain = ambient_derivative(fr, lam);
      GVec3 fw = fw_derivative_definition(c, X, x);
      CHECK(e_norm(fw - plain) == 0.0);
    }
  }
}

TEST_CASE("coincidence classification") {
  Curve line = line_curve();
  Curve cubic = cubic_curve();
  std::vector<double> xs_line = sample_grid(line, 21);
  std::vector<double> xs_cubic = sample_grid(cubic, 21);
  ScalarFunction zero;

  // any field on a line coincides
  FrameVectorField any = make_field(FrameBasis::Frenet, sf_constant(2.0), sf_constant(1.0),
                                    sf_poly({0.5, 1.0}));
  CheckReport r1 = coincidence_classify(line, nullptr, any, xs_line);
  REQUIRE(r1.entries.size() == 1);
  CHECK(r1.entries[0].name == "fw_coincides_with_plain_derivative");
  CHECK(r1.entries[0].pass);
  CHECK(r1.entries[0].note.find("line") != std::string::npos);

  // isotropic field along the binormal coincides on any curve
  FrameVectorField bfield = make_field(FrameBasis::Frenet, zero, zero, sf_poly({1.0, 2.0}));
  CheckReport r2 = coincidence_classify(cubic, nullptr, bfield, xs_cubic);
  CHECK(r2.entries[0].pass);

  // an isotropic field with a normal component does not coincide
  FrameVectorField nfield = make_field(FrameBasis::Frenet, zero, sf_constant(1.0), zero);
  CheckReport r3 = coincidence_classify(cubic, nullptr, nfield, xs_cubic);
  CHECK(r3.entries[0].pass);
  CHECK(r3.entries[0].note.find("differ") != std::string::npos);

  // a non-isotropic field does not coincide on a curved curve
  FrameVectorField tfield = make_field(FrameBasis::Frenet, sf_constant(1.0), zero, zero);
  CheckReport r4 = coincidence_classify(cubic, nullptr, tfield, xs_cubic);
  CHECK(r4.entries[0].pass);
  CHECK(r4.entries[0].note.find("differ") != std::string::npos);
}

TEST_CASE("non-rotating verdicts") {
  Curve line = line_curve();
  Curve cubic = cubic_curve();
  CheckReport rl = non_rotating_check(line, nullptr, FrameBasis::Frenet, sample_grid(line, 21));
  REQUIRE(rl.entries.size() == 1);
  CHECK(rl.entries[0].name == "frenet_non_rotating");
  CHECK(rl.entries[0].pass);
  CHECK(rl.entries[0].value == 0.0);

  CheckReport rc = non_rotating_check(cubic, nullptr, FrameBasis::Frenet, sample_grid(cubic, 21));
  CHECK_FALSE(rc.entries[0].pass);
  // the rotation residual is dominated by kappa, which reaches sqrt(40)
  CHECK(rc.entries[0].value >= 0.9 * std::sqrt(40.0));

  SurfaceAttachment att = make_attachment(sf_constant(0.0));
  CheckReport rd = non_rotating_check(cubic, &att, FrameBasis::Darboux, sample_grid(cubic, 21));
  CHECK(rd.entries[0].name == "darboux_non_rotating");
  CHECK(rd.entries[0].pass == rc.entries[0].pass);
}
