#include <doctest.h>

#include "varcap/linalg_exact.hpp"
#include "varcap/ordered_basis.hpp"
#include "varcap/poly_text.hpp"

using namespace varcap;

namespace {

struct Bundle {
  VarietySpec spec;
  GroebnerContext ctx;
  NoetherData noether;
  std::vector<PointAtInfinity> points;
  InterpolantSet interp;
  std::vector<LiftedInterpolant> lifted;
};

Bundle prepare(const std::string& json) {
  Bundle b;
  b.spec = parse_variety_json(json);
  b.ctx = groebner(b.spec.generators, b.spec.n);
  auto ver = noether_verify(b.ctx, b.spec.m);
  REQUIRE(ver.ok());
  b.noether = *ver.data;
  b.points = points_at_infinity(b.spec, b.ctx, b.noether);
  b.interp = interpolants(b.points, b.spec, b.ctx, b.noether);
  b.lifted = lift_and_witness(b.interp, b.ctx, b.noether);
  return b;
}

const char* kSphere = R"({"label":"sphere","n":3,"m":2,"generators":["z1^2+z2^2+z3^2-1"]})";
const char* kLine = R"({"label":"line","n":2,"m":1,"generators":["z2"]})";
const char* kHyperbola = R"({"label":"hyperbola","n":2,"m":1,"generators":["z2^2-z1^2-1"]})";
const char* kCircle3d = R"({"label":"circle3d","n":3,"m":1,
  "generators":["z3","z1^2+z2^2-1"],
  "points_at_infinity":["[0:1:i:0]","[0:1:-i:0]"]})";
const char* kCubicCurve = R"({"label":"cubic","n":2,"m":1,"generators":["z2^3-z1^3-1"]})";

GaussRational gr(long n, long d = 1) { return GaussRational(Rational(n, d)); }
GaussRational gri(long n, long d = 1) { return GaussRational(Rational(0), Rational(n, d)); }

}  // namespace

TEST_CASE("sphere points at infinity are [0:0:1:-i], [0:0:1:i]") {
  Bundle b = prepare(kSphere);
  REQUIRE(b.points.size() == 2);
  REQUIRE(b.points[0].exact.has_value());
  const auto& p1 = *b.points[0].exact;
  const auto& p2 = *b.points[1].exact;
  CHECK(p1 == std::vector<GaussRational>{gr(0), gr(0), gr(1), gri(-1)});
  CHECK(p2 == std::vector<GaussRational>{gr(0), gr(0), gr(1), gri(1)});
}

TEST_CASE("hyperbola roots are +-1") {
  Bundle b = prepare(kHyperbola);
  REQUIRE(b.points.size() == 2);
  CHECK(*b.points[0].exact == std::vector<GaussRational>{gr(0), gr(1), gr(-1)});
  CHECK(*b.points[1].exact == std::vector<GaussRational>{gr(0), gr(1), gr(1)});
}

TEST_CASE("parabola has a double point at infinity") {
  VarietySpec v = parse_variety_json(R"({"label":"parabola","n":2,"m":1,"generators":["z2^2-z1"]})");
  auto ctx = groebner(v.generators, 2);
  auto ver = noether_verify(ctx, 1);
  REQUIRE(ver.ok());
  CHECK_THROWS_AS(points_at_infinity(v, ctx, *ver.data), StructureError);
}

TEST_CASE("line variety: single point, t = 0, v = bv = 1") {
  Bundle b = prepare(kLine);
  REQUIRE(b.points.size() == 1);
  CHECK(*b.points[0].exact == std::vector<GaussRational>{gr(0), gr(1), gr(0)});
  CHECK(b.interp.t == 0);
  CHECK(b.interp.v_exact[0].poly == parse_poly("1", 3, 0));
  CHECK(*b.lifted[0].bv_exact == parse_poly("1", 2));
  for (const auto& h : b.lifted[0].self_h_exact) CHECK(h->is_zero());
}

TEST_CASE("sphere interpolants and lifted elements") {
  Bundle b = prepare(kSphere);
  CHECK(b.interp.t == 1);
  CHECK(b.interp.exact);
  CHECK(b.interp.v_exact[0].poly == parse_poly("(1/2)*z2 + (1/2i)*z3", 4, 0));
  CHECK(b.interp.v_exact[1].poly == parse_poly("(1/2)*z2 - (1/2i)*z3", 4, 0));

  // bv_i = v_i (already normal forms)
  CHECK(*b.lifted[0].bv_exact == parse_poly("(1/2)*z2 + (1/2i)*z3", 3));
  CHECK(*b.lifted[1].bv_exact == parse_poly("(1/2)*z2 - (1/2i)*z3", 3));

  // nf(bv1^2) = z2 bv1 + (1/4) z1^2 - 1/4, so h_1 = z1/4 and h_0 = -1/4.
  const auto& li = b.lifted[0];
  CHECK(*li.self_h_exact[1] == parse_poly("(1/4)*z1", 3));
  CHECK(*li.self_h_exact[0] == parse_poly("-(1/4)", 3));
  PolyQ bv1 = *li.bv_exact;
  PolyQ lhs = normal_form(bv1 * bv1, b.ctx);
  PolyQ rhs = normal_form(PolyQ::monomial(MultiIndex({0, 1, 0}), GaussRational::one()) * bv1,
                          b.ctx) +
              parse_poly("(1/4)*z1^2 - (1/4)", 3);
  CHECK(lhs == rhs);

  // cross witness: nf(bv1 bv2) = (1 - z1^2)/4; the strict bound fails at the
  // degree-(2t-1) coefficient, the weak bound holds.
  REQUIRE(li.cross.size() == 1);
  CHECK_FALSE(li.cross[0].strict);
  PolyQ cross = normal_form(bv1 * *b.lifted[1].bv_exact, b.ctx);
  CHECK(cross == parse_poly("(1/4) - (1/4)*z1^2", 3));
}

TEST_CASE("hyperbola interpolant pairs with its root") {
  Bundle b = prepare(kHyperbola);
  CHECK(b.interp.t == 1);
  // root +1 is the second point; its interpolant is (z1+z2)/2
  CHECK(b.interp.v_exact[1].poly == parse_poly("(1/2)*z1 + (1/2)*z2", 3, 0));
  CHECK(b.interp.v_exact[0].poly == parse_poly("(1/2)*z1 - (1/2)*z2", 3, 0));
  // local evaluations
  HomogPolyC v2 = to_float(b.interp.v_exact[1]);
  CHECK(std::abs(local_evaluate(v2, {{0, 0}, {1, 0}, {1, 0}}, 1) - 1.0) < 1e-14);
  CHECK(std::abs(local_evaluate(v2, {{0, 0}, {1, 0}, {-1, 0}}, 1)) < 1e-14);
}

TEST_CASE("general route (circle in C^3) with supplied points") {
  Bundle b = prepare(kCircle3d);
  CHECK(b.interp.t == 1);
  CHECK(b.interp.exact);
  // v for [0:1:i:0] is (z1 - i z2)/2
  CHECK(b.interp.v_exact[0].poly == parse_poly("(1/2)*z1 - (1/2i)*z2", 4, 0));
  auto basis = build_basis(b.spec, b.ctx, b.noether, b.interp, b.lifted, 6);
  for (int s = 0; s <= 6; ++s) CHECK(basis.m_s[s] == hilbert_dim(b.ctx, s));
  CHECK(basis.h_s[3] == 2);
}

TEST_CASE("general route rejects wrong point counts and off-variety points") {
  auto v = parse_variety_json(R"({"label":"bad","n":3,"m":1,
    "generators":["z3","z1^2+z2^2-1"],
    "points_at_infinity":["[0:1:i:0]"]})");
  auto ctx = groebner(v.generators, 3);
  auto ver = noether_verify(ctx, 1);
  REQUIRE(ver.ok());
  CHECK_THROWS_AS(points_at_infinity(v, ctx, *ver.data), StructureError);

  auto v2 = parse_variety_json(R"({"label":"bad2","n":3,"m":1,
    "generators":["z3","z1^2+z2^2-1"],
    "points_at_infinity":["[0:1:1:0]","[0:1:-i:0]"]})");
  CHECK_THROWS_AS(points_at_infinity(v2, ctx, *ver.data), StructureError);
}

TEST_CASE("sphere ordered basis prefix matches the paper listing") {
  Bundle b = prepare(kSphere);
  auto basis = build_basis(b.spec, b.ctx, b.noether, b.interp, b.lifted, 3);
  REQUIRE(basis.elements.size() >= 10);

  auto is_star_mono = [&](int k, const std::string& mono3) {
    return basis.elements[k].is_star() &&
           *basis.elements[k].nf_exact == parse_poly(mono3, 3);
  };
  auto is_bv = [&](int k, const std::string& alpha_mono, int i) {
    const auto& e = basis.elements[k];
    if (e.kind != BasisElement::Kind::StarStar || e.bv_index != i) return false;
    PolyQ expect = normal_form(
        parse_poly(alpha_mono, 3) * *b.lifted[i - 1].bv_exact, b.ctx);
    return *e.nf_exact == expect;
  };
  CHECK(is_star_mono(0, "1"));
  CHECK(is_star_mono(1, "z1"));
  CHECK(is_bv(2, "1", 1));
  CHECK(is_bv(3, "1", 2));
  CHECK(is_star_mono(4, "z1^2"));
  CHECK(is_bv(5, "z1", 1));
  CHECK(is_bv(6, "z1", 2));
  CHECK(is_bv(7, "z2", 1));
  CHECK(is_bv(8, "z2", 2));
  CHECK(is_star_mono(9, "z1^3"));

  // counts: m_s = (s+1)^2, StarStar degree-s count = d h_m(s-t), a_s = 1
  for (int s = 0; s <= 3; ++s) {
    CHECK(basis.m_s[s] == (s + 1) * (s + 1));
    CHECK(basis.a_s[s] == 1);
    long long ss = 0;
    for (const auto& e : basis.elements)
      if (e.degree == s && !e.is_star()) ++ss;
    CHECK(ss == 2 * h_m(2, s - 1));
  }
  // calB = {1} (t - 1 = 0)
  REQUIRE(basis.calB.size() == 1);
  CHECK(basis.calB[0].is_zero());
}

TEST_CASE("line variety basis is the monomials z1^k, all StarStar") {
  Bundle b = prepare(kLine);
  auto basis = build_basis(b.spec, b.ctx, b.noether, b.interp, b.lifted, 8);
  CHECK(basis.calB.empty());
  REQUIRE(basis.elements.size() == 9);
  for (int k = 0; k <= 8; ++k) {
    const auto& e = basis.elements[k];
    CHECK(e.kind == BasisElement::Kind::StarStar);
    CHECK(*e.nf_exact == PolyQ::monomial(MultiIndex({k, 0}), GaussRational::one()));
  }
  for (int s = 0; s <= 8; ++s) CHECK(basis.m_s[s] == s + 1);
}

TEST_CASE("hypersurface Star set needs no filtering (degree-3 curve, float mode)") {
  Bundle b = prepare(kCubicCurve);
  CHECK(b.interp.t == 2);
  CHECK_FALSE(b.interp.exact);  // roots are cube roots of unity, not in Q(i)
  auto basis = build_basis(b.spec, b.ctx, b.noether, b.interp, b.lifted, 6);
  for (int s = 0; s <= 6; ++s) CHECK(basis.m_s[s] == hilbert_dim(b.ctx, s));
  // Star elements: z1^l z2^b with l + b <= d-2 = 1 (every candidate kept)
  std::vector<MultiIndex> star;
  for (const auto& e : basis.elements)
    if (e.is_star()) star.push_back(e.monomial);
  REQUIRE(star.size() == 3);
  CHECK(star[0] == MultiIndex({0, 0}));
  CHECK(star[1] == MultiIndex({1, 0}));
  CHECK(star[2] == MultiIndex({0, 1}));
}

TEST_CASE("expand_in_bv on the sphere") {
  Bundle b = prepare(kSphere);
  auto basis = build_basis(b.spec, b.ctx, b.noether, b.interp, b.lifted, 3);

  auto e1 = expand_in_bv(MultiIndex(std::vector<int>{0}), basis, b.ctx);  // z2 = bv1 + bv2
  CHECK(e1.coeff[0] == gr(1));
  CHECK(e1.coeff[1] == gr(1));
  CHECK(e1.q.is_zero());

  auto e2 = expand_in_bv(MultiIndex(std::vector<int>{1}), basis, b.ctx);  // z3 = -i bv1 + i bv2
  CHECK(e2.coeff[0] == gri(-1));
  CHECK(e2.coeff[1] == gri(1));
  CHECK(e2.q.is_zero());
}

TEST_CASE("degree-2 sphere prefix homogenizes to the expected nine forms") {
  Bundle b = prepare(kSphere);
  auto basis = build_basis(b.spec, b.ctx, b.noether, b.interp, b.lifted, 2);
  REQUIRE(basis.m_s[2] == 9);

  // map p -> z0^{2-deg} p^h into C[X]_2
  auto lift2 = [](const PolyQ& p) {
    HomogPolyQ h = homogenize(p);
    PolyQ out = h.poly.times_monomial(MultiIndex::unit(4, 0, 2 - h.degree), GaussRational::one());
    return out;
  };
  PolyQ bv1h = parse_poly("(1/2)*z2 + (1/2i)*z3", 4, 0);
  PolyQ bv2h = parse_poly("(1/2)*z2 - (1/2i)*z3", 4, 0);
  auto z0 = [](const char* s) { return parse_poly(s, 4, 0); };
  std::vector<PolyQ> expected = {
      z0("z0^2"), z0("z0*z1"), z0("z0") * bv1h, z0("z0") * bv2h, z0("z1^2"),
      z0("z1") * bv1h, z0("z1") * bv2h, z0("z2") * bv1h, z0("z2") * bv2h};

  std::vector<PolyQ> got;
  for (int k = 0; k < 9; ++k) got.push_back(lift2(*basis.elements[k].nf_exact));
  for (const auto& e : expected) {
    bool found = false;
    for (const auto& g : got) found = found || (g == e);
    CHECK(found);
  }

  // the monic nine (with bv_i^2 instead of z2 bv_i) span the same space,
  // via the computed relations bv_i^2 = z2 bv_i + z1^2/4 - z0^2/4 mod I^h
  auto hctx = groebner({parse_poly("z1^2+z2^2+z3^2-z0^2", 4, 0)}, 4);
  CHECK(normal_form(bv1h * bv1h, hctx) ==
        normal_form(z0("z2") * bv1h + z0("(1/4)*z1^2 - (1/4)*z0^2"), hctx));
  CHECK(normal_form(bv2h * bv2h, hctx) ==
        normal_form(z0("z2") * bv2h + z0("(1/4)*z1^2 - (1/4)*z0^2"), hctx));

  std::vector<PolyQ> monic = {z0("z0^2"),      z0("z0*z1"),    z0("z1^2"),
                              z0("z0") * bv1h, z0("z1") * bv1h, bv1h * bv1h,
                              z0("z0") * bv2h, z0("z1") * bv2h, bv2h * bv2h};
  auto coords = standard_monomials(hctx, 2);
  std::map<MultiIndex, int, GrevlexLess> cidx;
  int dim = 0;
  for (const auto& miv : coords)
    if (miv.degree() == 2) cidx[miv] = dim++;
  auto rows_of = [&](const std::vector<PolyQ>& set) {
    std::vector<std::vector<GaussRational>> rows;
    for (const auto& p : set) {
      PolyQ nf = normal_form(p, hctx);
      std::vector<GaussRational> row(dim);
      for (const auto& [miv, c] : nf.terms()) row[cidx.at(miv)] = c;
      rows.push_back(std::move(row));
    }
    return rows;
  };
  auto ra = rows_of(got);
  auto rb = rows_of(monic);
  CHECK(exact_rank(ra) == 9);
  CHECK(exact_rank(rb) == 9);
  auto all = ra;
  for (auto& r : rb) all.push_back(r);
  CHECK(exact_rank(all) == 9);  // same span
}

TEST_CASE("corrupted module data trips the free-module guard") {
  Bundle b = prepare(kSphere);
  auto broken = b.lifted;
  broken[1] = broken[0];  // duplicate bv_1
  CHECK_THROWS_AS(build_basis(b.spec, b.ctx, b.noether, b.interp, broken, 2), StructureError);
}

TEST_CASE("basis dump is one line per element") {
  Bundle b = prepare(kSphere);
  auto basis = build_basis(b.spec, b.ctx, b.noether, b.interp, b.lifted, 2);
  std::string dump = dump_basis(basis);
  int lines = 0;
  for (char c : dump)
    if (c == '\n') ++lines;
  CHECK(lines == 9);
  CHECK(dump.substr(0, 1) == "*");
  CHECK(dump.find("**\t1\talpha=(0,0)\ti=1\t(1/2i)*z3 + (1/2)*z2") != std::string::npos);
}
