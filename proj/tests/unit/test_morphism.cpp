#include "doctest.h"

#include "bqr/catalog.hpp"
#include "bqr/products.hpp"

using namespace bqr;

namespace {

Matrix mat(std::vector<std::vector<long>> rows) {
    std::vector<std::vector<Scalar>> out;
    for (auto& r : rows) {
        out.emplace_back();
        for (long x : r) out.back().emplace_back(x);
    }
    return Matrix::from_rows(out, rows.front().size());
}

}  // namespace

TEST_CASE("morphism: identity and collapse on the dendriform dialgebra") {
    TypePresentation d = catalog_get("dendriform");
    CHECK(check_morphism(identity_morphism(d)));
    CHECK(check_isomorphism(identity_morphism(d)));
    // lt -> lt, gt -> lt: (gt.lt | gt.lt) goes to (lt.lt | lt.lt), not in R,
    // and the star lt + gt goes to 2 lt
    TypeMorphism collapse(d, d, mat({{1, 1}, {0, 0}}));
    CHECK_FALSE(check_morphism(collapse));
}

TEST_CASE("morphism: the collapse fails on relations as well") {
    // drop the star so only the relation condition is tested
    TypePresentation d = catalog_get("dendriform");
    TypePresentation nostar(d.name(), d.generators(), std::nullopt, d.relations());
    TypeMorphism collapse(nostar, nostar, mat({{1, 1}, {0, 0}}));
    CHECK_FALSE(check_morphism(collapse));
    RelationElement r2 = push_forward(d.relations()[1], collapse.matrix());
    CHECK_FALSE(d.relation_space().contains(r2.flatten()));
}

TEST_CASE("morphism: the swap onto the opposite type") {
    TypePresentation d = catalog_get("dendriform");
    TypeMorphism swap(d, opposite(d), mat({{0, 1}, {1, 0}}));
    CHECK(check_isomorphism(swap));
    // without argument reversal the swap is not an automorphism
    CHECK_FALSE(check_morphism(TypeMorphism(d, d, mat({{0, 1}, {1, 0}}))));
    CHECK(opposite(opposite(d)).relation_space() == d.relation_space());
}

TEST_CASE("morphism: compose and invert") {
    TypePresentation q = catalog_get("quadri");
    TypeMorphism t = transpose_swap(catalog_get("dendriform"), catalog_get("dendriform"));
    TypeMorphism tt = compose(t, t);
    CHECK(tt.matrix() == Matrix::identity(4));
    for (const auto& tab : literature_tables()) {
        TypeMorphism f = table_morphism(tab);
        TypeMorphism g = invert(f);
        CHECK(check_isomorphism(g));
        CHECK(compose(g, f).matrix() == Matrix::identity(f.source().dim()));
    }
    TypeMorphism singular(q, q, Matrix(4, 4));
    CHECK_THROWS_AS(invert(singular), MathError);
    CHECK_FALSE(check_isomorphism(singular));
    CHECK_THROWS_AS(compose(identity_morphism(catalog_get("dendriform")), identity_morphism(q)), MathError);
}

TEST_CASE("morphism: shape errors") {
    TypePresentation d = catalog_get("dendriform");
    CHECK_THROWS_AS(TypeMorphism(d, d, Matrix(3, 2)), MathError);
}

TEST_CASE("morphism: isomorphism implies morphism both ways") {
    for (const auto& tab : literature_tables()) {
        TypeMorphism f = table_morphism(tab);
        REQUIRE(check_isomorphism(f));
        CHECK(check_morphism(f));
        CHECK(check_morphism(invert(f)));
    }
}

TEST_CASE("morphism: box of table maps between squares") {
    LiteratureTable quadri = literature_tables().front();
    TypeMorphism f = table_morphism(quadri);
    TypeMorphism id = identity_morphism(catalog_get("associative"));
    CHECK(check_isomorphism(box(f, id)));
}

TEST_CASE("automorphisms: associative type and guard") {
    TypePresentation a = catalog_get("associative");
    auto g = monomial_automorphisms(a);
    CHECK(g.order() == 1);
    CHECK(g.elements[0].is_identity());
    AutomorphismOptions opt;
    opt.allow_signs = false;
    CHECK(monomial_automorphisms(a, opt).order() == 1);
    opt.max_dim = 2;
    CHECK_THROWS_AS(monomial_automorphisms(catalog_get("trialgebra"), opt), MathError);
    opt.override_guard = true;
    CHECK_NOTHROW(monomial_automorphisms(catalog_get("trialgebra"), opt));
}

TEST_CASE("automorphisms: dual types without a star allow signs") {
    // on the associative dual the star is found, so only the identity
    TypePresentation ad = catalog_get("assoc_dialgebra");
    auto g = monomial_automorphisms(ad);
    CHECK(g.closed);
    for (const auto& p : g.elements) CHECK(is_monomial_automorphism(ad, p));
}

TEST_CASE("signed permutations: group laws") {
    SignedPermutation a{{1, 2, 0}, {1, -1, 1}};
    SignedPermutation b{{0, 2, 1}, {-1, 1, 1}};
    CHECK(a.after(a.inverse()).is_identity());
    CHECK(a.inverse().after(a).is_identity());
    CHECK((a.after(b)).matrix() == a.matrix() * b.matrix());
}
