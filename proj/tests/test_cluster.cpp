#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "jetample/germ.hpp"
#include "jetample/unipoly.hpp"

using namespace jetample;

namespace {

Int clen(const char* f, const char* g) { return colength(GermIdeal(f, g)); }

}  // namespace

TEST_CASE("univariate utilities") {
  // (y-1)(y-2) = 2 - 3y + y^2
  UniPoly p{Rational(2), Rational(-3), Rational(1)};
  auto roots = uni_rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first == 1);
  CHECK(roots[1].first == 2);

  // y^2(2y-3): roots 0 (twice) and 3/2
  UniPoly q{Rational(0), Rational(0), Rational(-3), Rational(2)};
  UniPoly residual;
  roots = uni_rational_roots(q, &residual);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == std::pair{Rational(0), 2});
  CHECK(roots[1] == std::pair{Rational(3, 2), 1});
  CHECK(uni_degree(residual) == 0);

  // y^2 - 2 has no rational roots
  UniPoly irr{Rational(-2), Rational(0), Rational(1)};
  roots = uni_rational_roots(irr, &residual);
  CHECK(roots.empty());
  CHECK(uni_degree(residual) == 2);

  CHECK(uni_gcd(p, UniPoly{Rational(-1), Rational(1)}) == UniPoly{Rational(-1), Rational(1)});
  CHECK(uni_gcd(UniPoly{}, UniPoly{}).empty());
}

TEST_CASE("bivariate gcd") {
  QPoly f = parse_germ_poly("x^2 + x");      // x(x+1)
  QPoly g = parse_germ_poly("x*y + y");      // y(x+1)
  QPoly h = bivariate_gcd(f, g);             // x+1 up to a unit
  REQUIRE(h.degree() == 1);
  CHECK(h.eval({Rational(-1), Rational(7)}) == 0);
  CHECK(h.eval({Rational(0), Rational(0)}) != 0);

  // coprime pair
  CHECK(bivariate_gcd(parse_germ_poly("y^2-x^3"), parse_germ_poly("x")).degree() == 0);
  // common factor through the origin
  QPoly c = bivariate_gcd(parse_germ_poly("x*y"), parse_germ_poly("x*y + x^2"));
  CHECK(c.degree() >= 1);
  CHECK(c.eval({Rational(0), Rational(0)}) == 0);
  // pure-x content meets y-dependent factor
  QPoly d = bivariate_gcd(parse_germ_poly("x^2*y - x^2"), parse_germ_poly("x*y^2 - x"));
  // gcd is x*(y-1)
  CHECK(d.degree() == 2);
  CHECK(d.eval({Rational(0), Rational(5)}) == 0);
  CHECK(d.eval({Rational(3), Rational(1)}) == 0);
}

TEST_CASE("colength frozen values") {
  CHECK(clen("x", "y") == 1);
  CHECK(clen("x^2", "y^3") == 6);
  CHECK(clen("y - x^2", "y^2") == 4);
  CHECK(clen("y", "x^3") == 3);
  CHECK(clen("y^2 - x^3", "x") == 2);
  CHECK(clen("y^2 - x^3", "y") == 3);
  CHECK(clen("y^2 - x^4", "y") == 4);
  CHECK(clen("x*y", "x + y") == 2);
  CHECK(clen("y^2 - x^3", "y^2 - x^5") == 6);
  CHECK(clen("x^2 - y^3", "x") == 3);
  CHECK(clen("y^2 - 2*x^2", "y^2 - 2*x^2 + x^3") == 6);
  // generators that only become transverse after clearing a unit factor
  CHECK(clen("x^2 + x", "x*y + y") == 1);
}

TEST_CASE("infinite colength is certified") {
  try {
    clen("x*y", "x*y + x^2");  // common factor x
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InfiniteColength);
  }
  try {
    clen("x", "x + x^2");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InfiniteColength);
  }
  // cap too small for the initial truncation
  try {
    colength(GermIdeal("x^40", "y^40"), 16);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ExceededCap);
  }
}

TEST_CASE("power containment") {
  GermIdeal m("x", "y");
  CHECK(contains_power(m, 0));
  GermIdeal sq("x^2", "y^2");
  CHECK(contains_power(sq, 2));
  CHECK_FALSE(contains_power(sq, 1));  // xy is not in (x^2, y^2)
  GermIdeal cusp("y^2 - x^3", "x");    // = (x, y^2)
  CHECK_FALSE(contains_power(cusp, 0));
  CHECK(contains_power(cusp, 1));
  CHECK(contains_power(cusp, 2));  // monotone
  CHECK(contains_power(cusp, 7));
}

TEST_CASE("blow-up trees, frozen") {
  auto r = noether_degree(GermIdeal("y", "x^3"));
  CHECK(r.degree == 3);
  CHECK(r.node_count == 1);
  CHECK(r.tree.e1 == 1);
  CHECK(r.tree.e2 == 3);
  CHECK(r.tree.children.empty());

  r = noether_degree(GermIdeal("y^2 - x^3", "x"));
  CHECK(r.degree == 2);
  CHECK(r.node_count == 1);
  CHECK(r.tree.e1 == 2);
  CHECK(r.tree.e2 == 1);

  r = noether_degree(GermIdeal("x", "y"));
  CHECK(r.degree == 1);
  CHECK(r.node_count == 1);

  // cusp with its tangent line: contribution 2*1 at the origin, 1*1 above
  r = noether_degree(GermIdeal("y^2 - x^3", "y"));
  CHECK(r.degree == 3);
  CHECK(r.node_count == 2);
  REQUIRE(r.tree.children.size() == 1);
  CHECK(r.tree.children[0].label == "t=0");
  CHECK(r.tree.children[0].e1 == 1);
  CHECK(r.tree.children[0].e2 == 1);
  CHECK(r.multiplicity_sum == 5);

  // tacnode with its tangent line: (2,1) twice
  r = noether_degree(GermIdeal("y^2 - x^4", "y"));
  CHECK(r.degree == 4);
  CHECK(r.node_count == 2);
  CHECK(r.tree.children[0].e1 == 2);
  CHECK(r.tree.children[0].e2 == 1);

  // vertical-direction recursion
  r = noether_degree(GermIdeal("x^2 - y^3", "x"));
  CHECK(r.degree == 3);
  CHECK(r.node_count == 2);
  REQUIRE(r.tree.children.size() == 1);
  CHECK(r.tree.children[0].label == "vertical");

  // center away from the chart origin: roots of (y-1)(y-2) against (y-1)(y+1)
  r = noether_degree(GermIdeal("y^2 - 3*x*y + 2*x^2", "y^2 - x^2 + x^3"));
  CHECK(r.degree == 5);
  CHECK(r.node_count == 2);
  REQUIRE(r.tree.children.size() == 1);
  CHECK(r.tree.children[0].label == "t=1");
  CHECK(clen("y^2 - 3*x*y + 2*x^2", "y^2 - x^2 + x^3") == 5);
}

TEST_CASE("blow-up error paths") {
  try {
    noether_degree(GermIdeal("x*y", "x*y + x^2"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InfiniteColength);
  }
  try {
    noether_degree(GermIdeal("y^2 - 2*x^2", "y^2 - 2*x^2 + x^3"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonRationalCenter);
  }
}

TEST_CASE("tree agrees with the linear-algebra oracle (seeded)") {
  std::mt19937_64 rng(0x5eed0050);
  auto pick = [&](long lo, long hi) { return lo + static_cast<long>(rng() % std::uint64_t(hi - lo + 1)); };
  const long coeffs[5] = {-2, -1, 1, 2, 3};
  auto rand_germ = [&]() {
    QPoly p(2);
    while (p.is_zero() || p.order() < 1) {
      p = QPoly(2);
      for (int a = 0; a <= 4; ++a) {
        for (int b = 0; a + b <= 4; ++b) {
          if (a + b == 0) continue;
          if (pick(0, 2) == 0) p.add_term({a, b}, Rational(coeffs[pick(0, 4)]));
        }
      }
    }
    return p;
  };
  int compared = 0;
  for (int iter = 0; iter < 60 && compared < 40; ++iter) {
    QPoly f = rand_germ(), g = rand_germ();
    GermIdeal I{CurveGerm(f), CurveGerm(g)};
    Int via_tree, via_rank;
    try {
      via_rank = colength(I);
      via_tree = noether_degree(I).degree;
    } catch (const Error&) {
      continue;  // infinite colength or an irrational center: not comparable
    }
    ++compared;
    CHECK(via_tree == via_rank);
  }
  CHECK(compared >= 30);
}

TEST_CASE("containment bounds the multiplicities at the origin") {
  // if m^{n+1} lies in (f,g) then e0(f)+e0(g) <= n+2: the lowest forms must
  // generate all degree-(n+1) forms, so (n+2-e1) + (n+2-e2) >= n+2.
  auto minimal_n = [](const GermIdeal& I) {
    for (long n = 0; n <= 16; ++n) {
      if (contains_power(I, n)) return n;
    }
    return -1L;
  };
  for (const char* pair : {"x|y", "x^2|y^2", "y^2 - x^3|y", "y^2 - x^4|y", "y|x^3", "x^3|y^3"}) {
    std::string s(pair);
    auto bar = s.find('|');
    GermIdeal I(s.substr(0, bar), s.substr(bar + 1));
    long n = minimal_n(I);
    REQUIRE(n >= 0);
    CHECK(I.f.order() + I.g.order() <= n + 2);
  }
  // the analogous bound with multiplicities summed over the whole tree fails
  // on tangential pairs: (y^2-x^3, y) has tree sum 5 yet m^3 = m^{2+1} fits
  GermIdeal tangent("y^2 - x^3", "y");
  CHECK(contains_power(tangent, 2));
  CHECK(noether_degree(tangent).multiplicity_sum - 2 > 2);
}

TEST_CASE("largest cluster degree for fixed jet order") {
  long frozen[7] = {1, 2, 4, 6, 9, 12, 16};
  for (long n = 0; n <= 6; ++n) CHECK(l_n(n) == frozen[n]);
  for (long k = 0; k <= 50; ++k) {
    CHECK(l_n(2 * k) == Int(k + 1) * (k + 1));
    if (k >= 1) CHECK(l_n(2 * k - 1) == Int(k) * (k + 1));
  }
  CHECK_THROWS_AS(l_n(-1), Error);
}

TEST_CASE("extremal witnesses") {
  for (long n = 0; n <= 6; ++n) {
    GermIdeal w = l_n_witness(n);
    CHECK(colength(w) == l_n(n));
    CHECK(contains_power(w, n));
    if (n >= 1) CHECK_FALSE(contains_power(w, n - 1));
  }
  CHECK(l_n_witness(4).f.str() == "x^3");
  CHECK(l_n_witness(3).f.str() == "x^2");
  CHECK(l_n_witness(3).g.str() == "y^3");
}

TEST_CASE("certification report") {
  SearchSpec spec;
  spec.samples = 60;
  spec.seed = 0x5eed0051;
  LnReport rep = l_n_certify(2, spec);
  CHECK(rep.ok);
  CHECK(rep.witness_ok);
  CHECK(rep.monomial_ok);
  CHECK(rep.random_ok);
  CHECK(rep.monomial_max == 4);
  CHECK(rep.samples_accepted == 60);
  CHECK(rep.counterexamples.empty());

  // n=1: monomial pairs containing m^2 are (x,y), (x,y^2), (x^2,y)
  LnReport r1 = l_n_certify(1, spec);
  CHECK(r1.monomial_count == 3);
  CHECK(r1.monomial_max == 2);
  CHECK(r1.ok);
}

TEST_CASE("partition inequality") {
  for (int k = 1; k <= 12; ++k) {
    StarReport rep = star_inequality(k);
    CHECK(rep.nonstrict_ok);
    if (k == 1) {
      REQUIRE(rep.equality_cases.size() == 1);
      CHECK(rep.equality_cases[0] == std::vector<int>{1, 1});
    } else {
      CHECK(rep.equality_cases.empty());
    }
  }
  StarReport r3 = star_inequality(3);
  CHECK(r3.partitions_checked == 5);  // partitions of 4
}

TEST_CASE("very-ampleness order for jet generation") {
  CHECK(very_ample_order_for_jets(0) == 0);
  CHECK(very_ample_order_for_jets(1) == 1);
  CHECK(very_ample_order_for_jets(4) == 8);
  for (long k = 0; k <= 50; ++k) {
    CHECK(very_ample_order_for_jets(k) == Int(k) * (k + 4) / 4);
  }
}
