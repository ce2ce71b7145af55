#include "bqr/products.hpp"

namespace bqr {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const Scalar& x = a(i1, j1);
            if (x.is_zero()) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    if (!b(i2, j2).is_zero()) out(i1 * b.rows() + i2, j1 * b.cols() + j2) = x * b(i2, j2);
        }
    return out;
}

std::vector<std::string> pair_labels(const TypePresentation& t1, const TypePresentation& t2) {
    std::vector<std::string> out;
    for (const auto& a : t1.generators())
        for (const auto& b : t2.generators()) out.push_back(pair_label(a, b));
    return out;
}

std::optional<Vector> product_star(const TypePresentation& t1, const TypePresentation& t2) {
    if (!t1.star() || !t2.star()) return std::nullopt;
    return kron(*t1.star(), *t2.star());
}

}  // namespace

Vector kron(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!a[i].is_zero() && !b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

RelationElement box(const RelationElement& f, const RelationElement& g) {
    return {kron(f.left, g.left), kron(f.right, g.right)};
}

std::string pair_label(const std::string& a, const std::string& b) { return "(" + a + "|" + b + ")"; }

namespace {

std::size_t rels_count(const TypePresentation& t) { return t.relations().size(); }

// dimension of the relations with vanishing left (or right) block
std::size_t one_sided(const TypePresentation& t, bool left_zero) {
    const std::size_t m = t.dim();
    Matrix rows(0, m * m);
    for (const auto& r : t.relations()) {
        const Matrix& block = left_zero ? r.left : r.right;
        Vector v;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) v.push_back(block(i, j));
        rows.append_row(v);
    }
    return t.relation_space().dim() - rref(rows).rank;
}

}  // namespace

std::size_t square_relation_rank(const TypePresentation& t1, const TypePresentation& t2) {
    // The box map sends R1 (x) R2 to pairs of blocks; its kernel is
    // (KL1 (x) R2 + R1 (x) KL2) meet (KR1 (x) R2 + R1 (x) KR2), with KL the
    // relations whose left block vanishes and KR likewise. KL and KR meet in
    // zero, so in an adapted basis the kernel is KL1 (x) KR2 + KR1 (x) KL2.
    const std::size_t s1 = t1.relation_space().dim(), s2 = t2.relation_space().dim();
    const std::size_t a1 = one_sided(t1, true), b1 = one_sided(t1, false);
    const std::size_t a2 = one_sided(t2, true), b2 = one_sided(t2, false);
    return s1 * s2 - a1 * b2 - b1 * a2;
}

TypePresentation square(const TypePresentation& t1, const TypePresentation& t2) {
    std::vector<RelationElement> rels;
    rels.reserve(t1.relations().size() * t2.relations().size());
    for (const auto& f : t1.relations())
        for (const auto& g : t2.relations()) rels.push_back(box(f, g));
    TypePresentation out("square(" + t1.name() + "," + t2.name() + ")", pair_labels(t1, t2),
                         product_star(t1, t2), std::move(rels));
    out.set_dual(t1.is_dual() || t2.is_dual());

    if (t1.relation_space().dim() != t1.relations().size() || t2.relation_space().dim() != t2.relations().size())
        throw MathError("internal inconsistency: square of a dependent relation basis");
    const std::size_t rank = square_relation_rank(t1, t2);
    if (rank != rels_count(out))
        throw MathError("square product relations of " + t1.name() + " and " + t2.name() + " are dependent: rank " +
                        std::to_string(rank) + " of " + std::to_string(rels_count(out)));
    if (out.star()) {
        // assoc(s1 (x) s2) = assoc(s1) (.) assoc(s2) = sum c1_j c2_k r1_j (.) r2_k
        auto c1 = relation_coordinates(t1, associativity_vector(*t1.star()));
        auto c2 = relation_coordinates(t2, associativity_vector(*t2.star()));
        if (!c1 || !c2) throw MathError("internal inconsistency: factor star is not associative");
        RelationElement sum = RelationElement::zero(out.dim());
        std::size_t k = 0;
        for (std::size_t a = 0; a < c1->size(); ++a)
            for (std::size_t b = 0; b < c2->size(); ++b, ++k) {
                Scalar c = (*c1)[a] * (*c2)[b];
                if (!c.is_zero()) sum += c * out.relations()[k];
            }
        if (!(sum.flatten() == associativity_vector(*out.star())))
            throw MathError("internal inconsistency: product star is not associative");
    }
    return out;
}

TypePresentation maltese(const TypePresentation& t1, const TypePresentation& t2) {
    const std::size_t n1 = t1.flat_dim(), n2 = t2.flat_dim();
    const std::size_t m = t1.dim() * t2.dim();
    Matrix span(0, 2 * m * m);
    for (const auto& f : t1.relations())
        for (std::size_t k = 0; k < n2; ++k)
            span.append_row(box(f, RelationElement::unflatten(unit_vector(n2, k), t2.dim())).flatten());
    for (std::size_t k = 0; k < n1; ++k)
        for (const auto& g : t2.relations())
            span.append_row(box(RelationElement::unflatten(unit_vector(n1, k), t1.dim()), g).flatten());
    Subspace s = Subspace::span(span);
    std::vector<RelationElement> rels;
    for (std::size_t i = 0; i < s.dim(); ++i) rels.push_back(RelationElement::unflatten(s.basis().row(i), m));
    TypePresentation out("maltese(" + t1.name() + "," + t2.name() + ")", pair_labels(t1, t2),
                         product_star(t1, t2), std::move(rels));
    out.set_dual(t1.is_dual() || t2.is_dual());
    return out;
}

TypePresentation power(const TypePresentation& t, int n) {
    if (n < 1) throw MathError("power needs n >= 1");
    if (n == 1) return t;
    TypePresentation acc = square(t, t);
    for (int k = 3; k <= n; ++k) {
        TypePresentation next = square(acc, t);
        // ((a|b)|c) -> (a|b|c); acc labels are already flat tuples
        std::vector<std::string> labels;
        for (const auto& a : acc.generators())
            for (const auto& c : t.generators()) labels.push_back(a.substr(0, a.size() - 1) + "|" + c + ")");
        acc = TypePresentation(next.name(), labels, next.star(), next.relations());
        acc.set_dual(next.is_dual());
    }
    acc.set_name(t.name() + "^" + std::to_string(n));
    return acc;
}

TypeMorphism transpose_swap(const TypePresentation& t1, const TypePresentation& t2) {
    TypePresentation a = square(t1, t2), b = square(t2, t1);
    const std::size_t m1 = t1.dim(), m2 = t2.dim();
    Matrix f(m1 * m2, m1 * m2);
    for (std::size_t i = 0; i < m1; ++i)
        for (std::size_t j = 0; j < m2; ++j) f(j * m1 + i, i * m2 + j) = Scalar(1);
    return TypeMorphism(a, b, f);
}

TypeMorphism box(const TypeMorphism& f, const TypeMorphism& g) {
    return TypeMorphism(square(f.source(), g.source()), square(f.target(), g.target()),
                        kron(f.matrix(), g.matrix()));
}

TypeMorphism reassociation(const TypePresentation& t1, const TypePresentation& t2,
                           const TypePresentation& t3) {
    TypePresentation right = square(t1, square(t2, t3));
    TypePresentation left = square(square(t1, t2), t3);
    return TypeMorphism(right, left, Matrix::identity(right.dim()));
}

TensorModelReport verify_tensor_model(const TypePresentation& t1, const TypePresentation& t2) {
    // Free arity-3 space V_i: m_i^2 left trees ((x a y) b z) then m_i^2 right
    // trees (x a (y b z)). A relation (L, R) is the kernel vector (L, -R).
    auto kernel_vector = [](const RelationElement& r) {
        Vector v = r.flatten();
        const std::size_t half = v.size() / 2;
        for (std::size_t i = half; i < v.size(); ++i) v[i] = -v[i];
        return v;
    };
    const std::size_t n1 = t1.flat_dim(), n2 = t2.flat_dim();
    Matrix gens(0, n1 * n2);
    for (const auto& f : t1.relations()) {
        Vector kf = kernel_vector(f);
        for (std::size_t k = 0; k < n2; ++k) gens.append_row(kron(kf, unit_vector(n2, k)));
    }
    for (std::size_t k = 0; k < n1; ++k)
        for (const auto& g : t2.relations()) gens.append_row(kron(unit_vector(n1, k), kernel_vector(g)));
    Subspace kernel = Subspace::span(gens);

    // Tree index of ((x (a1|a2) y) (b1|b2) z) on elementary tensors splits
    // into the pair of factor trees.
    const std::size_t m1 = t1.dim(), m2 = t2.dim();
    auto tree = [](std::size_t m, bool right, std::size_t a, std::size_t b) {
        return (right ? m * m : 0) + a * m + b;
    };
    TensorModelReport rep;
    TypePresentation sq = square(t1, t2);
    for (std::size_t idx = 0; idx < sq.relations().size(); ++idx) {
        const auto& r = sq.relations()[idx];
        Vector d(n1 * n2);
        for (std::size_t i = 0; i < m1 * m2; ++i)
            for (std::size_t j = 0; j < m1 * m2; ++j) {
                const std::size_t a1 = i / m2, a2 = i % m2, b1 = j / m2, b2 = j % m2;
                if (!r.left(i, j).is_zero())
                    d[tree(m1, false, a1, b1) * n2 + tree(m2, false, a2, b2)] += r.left(i, j);
                if (!r.right(i, j).is_zero())
                    d[tree(m1, true, a1, b1) * n2 + tree(m2, true, a2, b2)] -= r.right(i, j);
            }
        ++rep.relations;
        if (kernel.contains(d))
            ++rep.factored;
        else
            rep.failures.push_back(idx);
    }
    return rep;
}

}  // namespace bqr
