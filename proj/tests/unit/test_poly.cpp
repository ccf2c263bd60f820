#include <doctest.h>

#include <random>

#include "axkatz/poly.hpp"

using namespace axkatz;

TEST_CASE("parser: spec examples") {
    MultiPoly fermat = parse_poly("x0^3 + x1^3 + x2^3 + x3^3", 4);
    CHECK(fermat.terms().size() == 4);
    CHECK(fermat.homogeneous_degree() == 3u);

    MultiPoly collapsed = parse_poly("(x0 + x1)^2 - x0^2 - 2*x0*x1", 2);
    REQUIRE(collapsed.terms().size() == 1);
    CHECK(collapsed.terms()[0].coeff == 1);
    CHECK(collapsed.terms()[0].exps == std::vector<unsigned>{0, 2}); // x1^2

    MultiPoly quadric = parse_poly("x0*x3 - x1*x2", 4);
    CHECK(quadric.terms().size() == 2);
    CHECK(quadric.homogeneous_degree() == 2u);
}

TEST_CASE("parser: precedence and unary minus") {
    // '^' binds tighter than unary '-'
    CHECK(parse_poly("-x0^2", 1) == parse_poly("0 - x0^2", 1));
    CHECK(parse_poly("-x0*x1", 2) == parse_poly("(0 - x0)*x1", 2));
    CHECK(parse_poly("2^3", 1) == MultiPoly::constant(1, 8));
    CHECK(parse_poly("x0 - - x0", 1) == parse_poly("2*x0", 1));
}

TEST_CASE("parser: errors carry positions") {
    CHECK_THROWS_AS(parse_poly("x0 + ", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("x0 x1", 2), ParseError); // no implicit multiplication
    CHECK_THROWS_AS(parse_poly("x0^x1", 2), ParseError); // exponent must be a literal
    CHECK_THROWS_AS(parse_poly("x0^-2", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("(x0 + x1", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("x5", 3), UnknownVariable);
    try {
        parse_poly("x0 + $", 2);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
    try {
        parse_poly("x0 + x9^2", 3);
        CHECK(false);
    } catch (const UnknownVariable& e) {
        CHECK(e.index == 9);
        CHECK(e.position == 5);
    }
}

TEST_CASE("homogeneity detection") {
    CHECK(parse_poly("x0^2 + x1*x2", 3).homogeneous_degree() == 2u);
    CHECK(!parse_poly("x0 + x1*x2", 3).homogeneous_degree().has_value());
    CHECK(parse_poly("x0^3", 1).homogeneous_degree() == 3u);
    CHECK_THROWS_AS(parse_poly("x0 - x0", 1).homogeneous_degree(), ZeroPolynomial);
}

TEST_CASE("kernels reduce coefficients into the field") {
    auto f5 = build_field(5, 1);
    EvaluationKernel zero_kernel = reduce_and_compile(parse_poly("5*x0^2", 1), f5);
    CHECK(zero_kernel.is_identically_zero());
    CHECK(f5->is_zero(zero_kernel.evaluate({f5->from_integer(3)})));

    auto f3 = build_field(3, 1);
    EvaluationKernel q = reduce_and_compile(parse_poly("x0*x3 - x1*x2", 4), f3);
    std::vector<FieldElement> pt{f3->one(), f3->zero(), f3->zero(), f3->one()};
    CHECK(q.evaluate(pt) == f3->one());

    auto f2 = build_field(2, 1);
    EvaluationKernel fermat = reduce_and_compile(parse_poly("x0^3 + x1^3 + x2^3 + x3^3", 4), f2);
    std::vector<FieldElement> pt2{f2->one(), f2->one(), f2->one(), f2->zero()};
    CHECK(fermat.evaluate(pt2) == f2->one());
}

namespace {

MultiPoly random_poly(std::mt19937_64& rng, unsigned nvars) {
    std::vector<MultiPoly::Term> terms;
    unsigned nterms = 1 + rng() % 6;
    for (unsigned t = 0; t < nterms; ++t) {
        MultiPoly::Term term;
        long c = static_cast<long>(rng() % 19) - 9;
        term.coeff = c == 0 ? 1 : c;
        term.exps.resize(nvars);
        for (unsigned i = 0; i < nvars; ++i) term.exps[i] = rng() % 4;
        terms.push_back(std::move(term));
    }
    return MultiPoly::from_terms(nvars, std::move(terms));
}

} // namespace

TEST_CASE("render/parse round trip on a random corpus") {
    std::mt19937_64 rng(77);
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
        unsigned nvars = 1 + rng() % 4;
        MultiPoly p = random_poly(rng, nvars);
        if (p.is_zero()) continue;
        MultiPoly back = parse_poly(p.render(), nvars);
        CHECK(back == p);
        ++checked;
    }
    CHECK(checked >= 50);

    for (const char* text : {"x0^3 + x1^3 + x2^3 + x3^3", "x0*x3 - x1*x2", "-x0 + 2*x1",
                             "7", "x0^2*x1 - 3*x1^2*x0"}) {
        MultiPoly p = parse_poly(text, 4);
        CHECK(parse_poly(p.render(), 4) == p);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(31);
    auto F = build_field(7, 1);
    for (int i = 0; i < 20; ++i) {
        MultiPoly f = random_poly(rng, 3);
        MultiPoly g = random_poly(rng, 3);
        std::vector<FieldElement> pt{F->decode(rng() % 7), F->decode(rng() % 7),
                                     F->decode(rng() % 7)};
        auto ev = [&](const MultiPoly& h) { return reduce_and_compile(h, F).evaluate(pt); };
        CHECK(ev(f.mul(g)) == F->mul(ev(f), ev(g)));
        CHECK(ev(f.add(g)) == F->add(ev(f), ev(g)));
    }
}

TEST_CASE("homogeneous scaling eval(f, lambda P) = lambda^d eval(f, P)") {
    std::mt19937_64 rng(93);
    auto F = build_field(5, 2);
    MultiPoly f = parse_poly("x0^2*x1 + 2*x1^3 - x0*x1*x2", 3);
    REQUIRE(f.homogeneous_degree() == 3u);
    EvaluationKernel k = reduce_and_compile(f, F);
    for (int i = 0; i < 20; ++i) {
        std::vector<FieldElement> pt{F->decode(rng() % 25), F->decode(rng() % 25),
                                     F->decode(rng() % 25)};
        FieldElement lambda = F->decode(1 + rng() % 24);
        std::vector<FieldElement> scaled;
        for (const auto& x : pt) scaled.push_back(F->mul(lambda, x));
        CHECK(k.evaluate(scaled) == F->mul(F->pow(lambda, 3ull), k.evaluate(pt)));
    }
}

TEST_CASE("polynomial systems validate members") {
    CHECK_THROWS_AS(PolynomialSystem(2, {parse_poly("x0 + x1*x2", 3)}), InvalidInput);
    PolynomialSystem sys(3, {parse_poly("x0*x3 - x1*x2", 4), parse_poly("x0^3 + x1^3", 4)});
    CHECK(sys.degrees() == std::vector<unsigned>{3, 2}); // sorted descending
}
