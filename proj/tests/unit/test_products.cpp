#include "doctest.h"

#include "bqr/catalog.hpp"
#include "bqr/duality.hpp"
#include "bqr/products.hpp"

#include <chrono>

using namespace bqr;

TEST_CASE("square: dimensions multiply") {
    const char* names[] = {"associative", "dendriform", "trialgebra", "ns", "dipterous", "anti_dipterous"};
    for (const char* a : names)
        for (const char* b : names) {
            CAPTURE(a);
            CAPTURE(b);
            TypePresentation ta = catalog_get(a), tb = catalog_get(b);
            TypePresentation s = square(ta, tb);
            CHECK(s.dim() == ta.dim() * tb.dim());
            CHECK(s.relation_space().dim() == ta.relations().size() * tb.relations().size());
            CHECK(validate(s).valid);
        }
}

TEST_CASE("square: labels and star") {
    TypePresentation q = square(catalog_get("dendriform"), catalog_get("dendriform"));
    CHECK(q.generators() == std::vector<std::string>{"(lt|lt)", "(lt|gt)", "(gt|lt)", "(gt|gt)"});
    for (const auto& c : *q.star()) CHECK(c == Scalar(1));
    TypePresentation m2 = catalog_get("m2");
    // star (st|st) sits at index 0
    CHECK((*m2.star())[0] == Scalar(1));
    CHECK((*m2.star())[1].is_zero());
}

TEST_CASE("square with the associative type is the identity up to labels") {
    TypePresentation d = catalog_get("dendriform");
    TypePresentation s = square(catalog_get("associative"), d);
    CHECK(s.relation_space() == d.relation_space());
}

TEST_CASE("power(D,3) equals the iterated square") {
    TypePresentation d = catalog_get("dendriform");
    TypePresentation p = power(d, 3);
    TypePresentation s = square(square(d, d), d);
    CHECK(p.relation_space() == s.relation_space());
    CHECK(p.generators()[1] == "(lt|lt|gt)");
    CHECK(power(d, 4).generators()[1] == "(lt|lt|lt|gt)");
    CHECK(power(d, 1) == d);
    CHECK_THROWS_AS(power(d, 0), MathError);
}

TEST_CASE("transpose swap and reassociation are isomorphisms") {
    TypePresentation t = catalog_get("trialgebra"), n = catalog_get("ns"), d = catalog_get("dendriform");
    CHECK(check_isomorphism(transpose_swap(t, n)));
    CHECK(check_isomorphism(transpose_swap(d, d)));
    CHECK(check_isomorphism(reassociation(d, t, n)));
}

TEST_CASE("tensor model") {
    TypePresentation d = catalog_get("dendriform"), t = catalog_get("trialgebra"), n = catalog_get("ns");
    CHECK(verify_tensor_model(d, d).ok());
    CHECK(verify_tensor_model(t, t).ok());
    auto rep = verify_tensor_model(t, n);
    CHECK(rep.ok());
    CHECK(rep.relations == 28);
}

TEST_CASE("maltese contains square") {
    TypePresentation d = catalog_get("dendriform");
    TypePresentation s = square(d, d), x = maltese(d, d);
    CHECK(s.relation_space().leq(x.relation_space()));
    // The L and R blocks decouple. In each block the factor relations span a
    // 3-dimensional W inside the 4-dimensional Omega(x)Omega, and
    // dim(W(x)U + U(x)W) = 16 - (4 - 3)^2.
    CHECK(x.relation_space().dim() == 2 * (16 - 1));
}

TEST_CASE("box of isomorphisms is an isomorphism") {
    for (const auto& tab : literature_tables()) {
        if (tab.product != "quadri" && tab.product != "m2") continue;
        TypeMorphism f = table_morphism(tab);
        TypeMorphism ff = box(f, f);
        CHECK(check_isomorphism(ff));
    }
}

TEST_CASE("duality: dimensions and double dual") {
    for (const auto& n : catalog_names()) {
        CAPTURE(n);
        TypePresentation t = catalog_get(n);
        TypePresentation d = dual(t);
        CHECK(d.relation_space().dim() + t.relation_space().dim() == t.flat_dim());
        CHECK(double_dual_check(t));
    }
    CHECK(dual(catalog_get("trialgebra")).relations().size() == 11);
}

TEST_CASE("duality: labels and star choice") {
    TypePresentation d = dual(catalog_get("dendriform"));
    CHECK(d.generators() == std::vector<std::string>{"lv", "rv"});
    REQUIRE(d.star());
    CHECK((*d.star()) == Vector{Scalar(1), Scalar(0)});
    CHECK(dual_label("(lt|gt)") == "(lv|rv)");
    CHECK(dual_label("m") == "m^");
}

TEST_CASE("duality: pairing of the explicit quadri witness") {
    auto rep = non_duality_witness(catalog_get("dendriform"));
    CHECK(rep.pairing == Scalar(-1));
    CHECK(rep.primal_in_rq);
    CHECK(rep.witness_in_maltese);
    CHECK_FALSE(rep.witness_in_aq);
    CHECK_FALSE(rep.inclusion_holds);
}

TEST_CASE("automorphisms: dendriform and quadri") {
    // the swap lt <-> gt reverses arguments, so it is not a strict automorphism
    auto gd = monomial_automorphisms(catalog_get("dendriform"));
    CHECK(gd.order() == 1);
    auto gq = monomial_automorphisms(catalog_get("quadri"));
    CHECK(gq.closed);
    SignedPermutation transpose{{0, 2, 1, 3}, {1, 1, 1, 1}};
    CHECK(gq.contains(transpose));
    MESSAGE("quadri monomial automorphism group order " << gq.order());
}

TEST_CASE("anti-automorphisms: opposites") {
    AutomorphismOptions opt;
    opt.include_reversal = true;
    auto gd = monomial_automorphisms(catalog_get("dendriform"), opt);
    CHECK(gd.order() == 2);
    SignedPermutation op{{1, 0}, {1, 1}, true};
    CHECK(gd.contains(op));
    CHECK(gd.closed);
    auto gq = monomial_automorphisms(catalog_get("quadri"), opt);
    CHECK(gq.closed);
    SignedPermutation both{{3, 2, 1, 0}, {1, 1, 1, 1}, true};
    CHECK(gq.contains(both));
    MESSAGE("quadri order with reversal " << gq.order());
}

TEST_CASE("automorphisms: octo") {
    auto t0 = std::chrono::steady_clock::now();
    TypePresentation o = catalog_get("octo");
    auto g = monomial_automorphisms(o);
    AutomorphismOptions opt;
    opt.include_reversal = true;
    auto ga = monomial_automorphisms(o, opt);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(g.closed);
    CHECK(ga.closed);
    MESSAGE("octo orders " << g.order() << " / " << ga.order() << " in " << secs << " s, "
                           << g.candidates_examined << " candidates");
}

TEST_CASE("square: rank of the boxed relations") {
    // direct row reduction of every f (.) g against the closed formula
    const char* names[] = {"dendriform", "ns", "dipterous", "assoc_dialgebra", "assoc_trialgebra"};
    for (const char* a : names)
        for (const char* b : names) {
            CAPTURE(a);
            CAPTURE(b);
            TypePresentation ta = catalog_get(a), tb = catalog_get(b);
            std::vector<std::vector<Scalar>> rows;
            for (const auto& f : ta.relations())
                for (const auto& g : tb.relations()) rows.push_back(box(f, g).flatten());
            std::size_t direct = Subspace::span(rows, 2 * ta.dim() * ta.dim() * tb.dim() * tb.dim()).dim();
            CHECK(square_relation_rank(ta, tb) == direct);
            if (direct == ta.relations().size() * tb.relations().size())
                CHECK_NOTHROW(square(ta, tb));
            else
                CHECK_THROWS_AS(square(ta, tb), MathError);
        }
    // (lv.lv | 0)-type relations on both sides cancel in the box
    TypePresentation ad = catalog_get("assoc_dialgebra");
    CHECK(square_relation_rank(ad, ad) == 23);
}
