#include "bqr/morphism.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bqr {

TypeMorphism::TypeMorphism(TypePresentation source, TypePresentation target, Matrix f)
    : source_(std::move(source)), target_(std::move(target)), f_(std::move(f)) {
    if (f_.rows() != target_.dim() || f_.cols() != source_.dim())
        throw MathError("morphism matrix has wrong shape");
}

std::optional<Vector> TypeMorphism::star_image() const {
    if (!source_.star()) return std::nullopt;
    const Vector& s = *source_.star();
    Vector out(f_.rows());
    for (std::size_t i = 0; i < f_.rows(); ++i)
        for (std::size_t j = 0; j < f_.cols(); ++j)
            if (!f_(i, j).is_zero() && !s[j].is_zero()) out[i] += f_(i, j) * s[j];
    return out;
}

bool TypeMorphism::preserves_star() const {
    // Duals may come without a star; two missing stars impose nothing.
    if (!source_.star() && !target_.star()) return true;
    if (!source_.star() || !target_.star()) return false;
    return *star_image() == *target_.star();
}

bool check_morphism(const TypeMorphism& f) {
    if (!f.preserves_star()) return false;
    const Subspace& target = f.target().relation_space();
    for (const auto& r : f.source().relations())
        if (!target.contains(push_forward(r, f.matrix()).flatten())) return false;
    return true;
}

bool check_isomorphism(const TypeMorphism& f) {
    if (f.source().dim() != f.target().dim()) return false;
    try {
        (void)f.matrix().inverse();
    } catch (const MathError&) {
        return false;
    }
    if (!check_morphism(f)) return false;
    Matrix pushed(0, f.target().flat_dim());
    for (const auto& r : f.source().relations()) pushed.append_row(push_forward(r, f.matrix()).flatten());
    return Subspace::span(pushed) == f.target().relation_space();
}

TypeMorphism compose(const TypeMorphism& g, const TypeMorphism& f) {
    if (g.source().dim() != f.target().dim()) throw MathError("morphisms are not composable");
    return TypeMorphism(f.source(), g.target(), g.matrix() * f.matrix());
}

TypeMorphism invert(const TypeMorphism& f) {
    return TypeMorphism(f.target(), f.source(), f.matrix().inverse());
}

TypeMorphism identity_morphism(const TypePresentation& t) {
    return TypeMorphism(t, t, Matrix::identity(t.dim()));
}

TypeMorphism morphism_from_table(const TypePresentation& source, const TypePresentation& target,
                                 const std::vector<std::pair<std::string, Vector>>& table) {
    Matrix f(target.dim(), source.dim());
    std::vector<bool> seen(source.dim(), false);
    for (const auto& [label, image] : table) {
        int i = source.index_of(label);
        if (i < 0) throw MathError("unknown source generator '" + label + "'");
        if (image.size() != target.dim()) throw MathError("image of '" + label + "' has wrong length");
        if (seen[i]) throw MathError("generator '" + label + "' mapped twice");
        seen[i] = true;
        for (std::size_t k = 0; k < image.size(); ++k) f(k, i) = image[k];
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw MathError("generator '" + source.generators()[i] + "' has no image");
    return TypeMorphism(source, target, f);
}

// ---------------------------------------------------------------- signed permutations

Matrix SignedPermutation::matrix() const {
    Matrix f(image.size(), image.size());
    for (std::size_t i = 0; i < image.size(); ++i) f(image[i], i) = Scalar(sign[i]);
    return f;
}

SignedPermutation SignedPermutation::after(const SignedPermutation& first) const {
    SignedPermutation out;
    for (std::size_t i = 0; i < first.image.size(); ++i) {
        out.image.push_back(image[first.image[i]]);
        out.sign.push_back(sign[first.image[i]] * first.sign[i]);
    }
    out.reverses = reverses != first.reverses;
    return out;
}

SignedPermutation SignedPermutation::inverse() const {
    SignedPermutation out;
    out.image.resize(image.size());
    out.sign.resize(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) {
        out.image[image[i]] = static_cast<std::uint32_t>(i);
        out.sign[image[i]] = sign[i];
    }
    out.reverses = reverses;
    return out;
}

bool SignedPermutation::is_identity() const {
    for (std::size_t i = 0; i < image.size(); ++i)
        if (image[i] != i || sign[i] != 1) return false;
    return !reverses;
}

bool AutomorphismGroup::contains(const SignedPermutation& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

bool is_monomial_automorphism(const TypePresentation& t, const SignedPermutation& p) {
    const std::size_t m = t.dim();
    if (t.star()) {
        const Vector& s = *t.star();
        for (std::size_t i = 0; i < m; ++i)
            if (!(Scalar(p.sign[i]) * s[i] == s[p.image[i]])) return false;
    }
    const Subspace& space = t.relation_space();
    Vector v(t.flat_dim());
    for (const auto& r : t.relations()) {
        std::fill(v.begin(), v.end(), Scalar());
        // Reading every operation with its arguments swapped turns (L, R)
        // into (R^T, L^T).
        const Matrix& left = p.reverses ? r.right : r.left;
        const Matrix& right = p.reverses ? r.left : r.right;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                const std::size_t a = p.reverses ? j : i, b = p.reverses ? i : j;
                const std::size_t at = p.image[a] * m + p.image[b];
                const int sg = p.sign[i] * p.sign[j];
                if (!left(i, j).is_zero()) v[at] = Scalar(sg) * left(i, j);
                if (!right(i, j).is_zero()) v[m * m + at] = Scalar(sg) * right(i, j);
            }
        if (!space.contains(v)) return false;
    }
    return true;
}

namespace {

// Sign choices allowed for generator i mapped to slot j.
std::vector<int> allowed_signs(const std::optional<Vector>& star, std::size_t i, std::size_t j, bool allow_signs) {
    std::vector<int> out;
    for (int s : {1, -1}) {
        if (s == -1 && !allow_signs) continue;
        if (star && !(Scalar(s) * (*star)[i] == (*star)[j])) continue;
        out.push_back(s);
    }
    return out;
}

}  // namespace

AutomorphismGroup monomial_automorphisms(const TypePresentation& t, const AutomorphismOptions& opt) {
    const std::size_t m = t.dim();
    if (m > opt.max_dim && !opt.override_guard)
        throw MathError("monomial search over " + std::to_string(m) +
                        " generators exceeds the guard; pass the override flag");
    (void)t.relation_space();

    AutomorphismGroup group;
    // The star fixes most signs; only generators with a zero star coefficient
    // branch over both.
    auto search = [&](bool rev) {
        std::vector<std::uint32_t> perm(m);
        std::iota(perm.begin(), perm.end(), 0u);
        do {
            std::vector<std::vector<int>> choices(m);
            bool feasible = true;
            for (std::size_t i = 0; i < m && feasible; ++i) {
                choices[i] = allowed_signs(t.star(), i, perm[i], opt.allow_signs);
                feasible = !choices[i].empty();
            }
            if (!feasible) continue;
            std::vector<std::size_t> at(m, 0);
            while (true) {
                SignedPermutation p;
                p.image = perm;
                p.reverses = rev;
                for (std::size_t i = 0; i < m; ++i) p.sign.push_back(choices[i][at[i]]);
                ++group.candidates_examined;
                if (is_monomial_automorphism(t, p)) group.elements.push_back(p);
                std::size_t k = 0;
                while (k < m && ++at[k] == choices[k].size()) at[k++] = 0;
                if (k == m) break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    search(false);
    if (opt.include_reversal) search(true);

    std::sort(group.elements.begin(), group.elements.end());
    bool closed = std::any_of(group.elements.begin(), group.elements.end(),
                              [](const SignedPermutation& p) { return p.is_identity(); });
    for (const auto& a : group.elements) {
        if (!closed) break;
        if (!group.contains(a.inverse())) closed = false;
        for (const auto& b : group.elements)
            if (!group.contains(a.after(b))) {
                closed = false;
                break;
            }
    }
    group.closed = closed;
    return group;
}

}  // namespace bqr
