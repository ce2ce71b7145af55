#include "doctest.h"

#include "bqr/type.hpp"

using namespace bqr;

namespace {

// term list entries are (i, j, coefficient)
RelationElement rel(std::size_t m, std::vector<std::tuple<int, int, long>> left,
                    std::vector<std::tuple<int, int, long>> right) {
    RelationElement r = RelationElement::zero(m);
    for (auto [i, j, c] : left) r.left(i, j) += Scalar(c);
    for (auto [i, j, c] : right) r.right(i, j) += Scalar(c);
    return r;
}

Vector v(std::vector<long> x) {
    Vector out;
    for (long c : x) out.emplace_back(c);
    return out;
}

TypePresentation dendriform(Vector star = v({1, 1})) {
    return TypePresentation("dendriform", {"lt", "gt"}, star,
                            {rel(2, {{0, 0, 1}}, {{0, 0, 1}, {0, 1, 1}}),
                             rel(2, {{1, 0, 1}}, {{1, 0, 1}}),
                             rel(2, {{0, 1, 1}, {1, 1, 1}}, {{1, 1, 1}})});
}

TypePresentation trialgebra() {
    // lt, gt, cir
    return TypePresentation(
        "trialgebra", {"lt", "gt", "cir"}, v({1, 1, 1}),
        {rel(3, {{0, 0, 1}}, {{0, 0, 1}, {0, 1, 1}, {0, 2, 1}}),
         rel(3, {{1, 0, 1}}, {{1, 0, 1}}),
         rel(3, {{0, 1, 1}, {1, 1, 1}, {2, 1, 1}}, {{1, 1, 1}}),
         rel(3, {{1, 2, 1}}, {{1, 2, 1}}),
         rel(3, {{0, 2, 1}}, {{2, 1, 1}}),
         rel(3, {{2, 0, 1}}, {{2, 0, 1}}),
         rel(3, {{2, 2, 1}}, {{2, 2, 1}})});
}

}  // namespace

TEST_CASE("flatten round trip") {
    RelationElement r = rel(2, {{0, 1, 3}}, {{1, 0, -2}});
    Vector f = r.flatten();
    CHECK(f.size() == 8);
    CHECK(f[1] == Scalar(3));
    CHECK(f[4 + 2] == Scalar(-2));
    CHECK(RelationElement::unflatten(f, 2) == r);
}

TEST_CASE("dendriform validates; dendriform relation matrix has rank 3") {
    auto t = dendriform();
    auto rep = validate(t);
    CHECK(rep.valid);
    CHECK(rep.relation_rank == 3);
    // hand reduction: the three flattened vectors have distinct leading
    // L-entries (0,0), (0,1), (1,0), so they are independent
    CHECK(rref(t.relation_matrix()).rank == 3);
}

TEST_CASE("dendriform with star lt is invalid") {
    auto rep = validate(dendriform(v({1, 0})));
    CHECK_FALSE(rep.valid);
    CHECK(rep.independent);
    CHECK_FALSE(rep.star_associative);
}

TEST_CASE("structural errors") {
    CHECK_THROWS_AS(TypePresentation("x", {}, std::nullopt, {}), MathError);
    CHECK_THROWS_AS(TypePresentation("x", {"a", "a"}, std::nullopt, {}), MathError);
    CHECK_THROWS_AS(TypePresentation("x", {"a"}, v({1, 1}), {}), MathError);
}

TEST_CASE("empty relation list is invalid") {
    TypePresentation t("free", {"a"}, v({1}), {});
    CHECK_FALSE(validate(t).valid);
}

TEST_CASE("arity-3 dimensions") {
    TypePresentation assoc("associative", {"m"}, v({1}), {rel(1, {{0, 0, 1}}, {{0, 0, 1}})});
    CHECK(arity3_dimension(assoc) == 1);
    CHECK(arity3_dimension(dendriform()) == 5);
    CHECK(arity3_dimension(trialgebra()) == 11);
}

TEST_CASE("splitting basis of dendriform keeps the presentation") {
    auto sb = splitting_basis(dendriform());
    CHECK(sb.generators[0] == v({1, 0}));
    CHECK(sb.generators[1] == v({0, 1}));
    CHECK(sb.relations == dendriform().relations());
}

TEST_CASE("splitting basis in the basis {star, gt}") {
    // Re-express dendriform with generators s = lt + gt and gt: lt = s - gt.
    Matrix f(2, 2);
    f(0, 0) = Scalar(1);
    f(0, 1) = Scalar(0);
    f(1, 0) = Scalar(-1);
    f(1, 1) = Scalar(1);
    // new coords: s-coord = lt-coord, gt'-coord = gt - lt ... columns map old basis to new
    TypePresentation t = relabel(dendriform(), f);
    CHECK(validate(t).valid);
    CHECK(*t.star() == v({1, 0}));
    auto sb = splitting_basis(t);
    Vector sum(2);
    for (const auto& g : sb.generators)
        for (std::size_t i = 0; i < 2; ++i) sum[i] += g[i];
    CHECK(sum == *t.star());
    CHECK(sb.generators[0] == v({1, -1}));
    RelationElement rsum = RelationElement::zero(2);
    for (const auto& r : sb.relations) rsum += r;
    CHECK(rsum.flatten() == associativity_vector(*t.star()));
}

TEST_CASE("relabel: opposite types and inverse maps") {
    auto op = relabel(dendriform(), std::map<std::string, std::string>{{"lt", "gt"}, {"gt", "lt"}});
    CHECK(validate(op).valid);
    CHECK_FALSE(op.relation_space() == dendriform().relation_space());
    auto back = relabel(op, std::map<std::string, std::string>{{"lt", "gt"}, {"gt", "lt"}});
    CHECK(back.relation_space() == dendriform().relation_space());
    CHECK(relabel(dendriform(), Matrix::identity(2)) == dendriform());

    auto top = relabel(trialgebra(), std::map<std::string, std::string>{{"lt", "gt"}, {"gt", "lt"}});
    CHECK(validate(top).valid);
    CHECK(arity3_dimension(top) == 11);

    Matrix sing(2, 2, Scalar(1));
    CHECK_THROWS_AS(relabel(dendriform(), sing), MathError);
}

TEST_CASE("relation space ignores basis order") {
    auto t = trialgebra();
    auto rels = t.relations();
    std::reverse(rels.begin(), rels.end());
    TypePresentation r(t.name(), t.generators(), t.star(), rels);
    CHECK(r.relation_space() == t.relation_space());
}
