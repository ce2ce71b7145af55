#include "bqr/duality.hpp"

#include "bqr/products.hpp"

#include <algorithm>
#include <map>

namespace bqr {

Scalar pair2(const RelationElement& u, const RelationElement& v) {
    const std::size_t m = u.dim();
    if (v.dim() != m) throw MathError("pairing of relations over different dimensions");
    Scalar acc;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (!u.left(i, j).is_zero() && !v.left(i, j).is_zero()) acc += u.left(i, j) * v.left(i, j);
            if (!u.right(i, j).is_zero() && !v.right(i, j).is_zero()) acc -= u.right(i, j) * v.right(i, j);
        }
    return acc;
}

std::string dual_label(const std::string& label) {
    static const std::map<std::string, std::string> overrides = {
        {"lt", "lv"}, {"gt", "rv"}, {"bul", "cir"}};
    if (label.size() >= 2 && label.front() == '(' && label.back() == ')') {
        // split the top-level components of a tuple label
        std::vector<std::string> parts;
        int depth = 0;
        std::string cur;
        for (std::size_t i = 1; i + 1 < label.size(); ++i) {
            char c = label[i];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == '|' && depth == 0) {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        parts.push_back(cur);
        if (parts.size() > 1) {
            std::string out = "(";
            for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "|" : "") + dual_label(parts[i]);
            return out + ")";
        }
    }
    auto it = overrides.find(label);
    return it == overrides.end() ? label + "^" : it->second;
}

std::vector<Vector> find_star(const TypePresentation& t, const StarSearchOptions& opt) {
    const std::size_t m = t.dim();
    const int b = opt.bound;
    std::vector<Vector> out;
    const Subspace& space = t.relation_space();
    std::vector<int> c(m, -b);
    while (true) {
        if (std::any_of(c.begin(), c.end(), [](int x) { return x != 0; })) {
            Vector s;
            for (int x : c) s.emplace_back(static_cast<long>(x));
            if (space.contains(associativity_vector(s))) out.push_back(s);
        }
        std::size_t k = m;
        while (k > 0 && c[k - 1] == b) c[--k] = -b;
        if (k == 0) break;
        ++c[k - 1];
    }
    return out;
}

TypePresentation dual(const TypePresentation& t) {
    const std::size_t m = t.dim(), half = m * m;
    Matrix signed_rows(0, t.flat_dim());
    for (const auto& r : t.relations()) {
        Vector v = r.flatten();
        for (std::size_t i = half; i < v.size(); ++i) v[i] = -v[i];
        signed_rows.append_row(v);
    }
    Subspace ann = nullspace(signed_rows);
    std::vector<RelationElement> rels;
    for (std::size_t i = 0; i < ann.dim(); ++i) rels.push_back(RelationElement::unflatten(ann.basis().row(i), m));
    std::vector<std::string> labels;
    for (const auto& g : t.generators()) labels.push_back(dual_label(g));

    TypePresentation bare(t.name() + "!", labels, std::nullopt, rels);
    bare.set_dual(true);
    std::vector<Vector> stars = find_star(bare);
    std::optional<Vector> star;
    Vector ones(m, Scalar(1));
    if (std::find(stars.begin(), stars.end(), ones) != stars.end()) {
        star = ones;
    } else if (!stars.empty()) {
        auto support = [](const Vector& v) {
            return std::count_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
        };
        // smallest support; among those the lexicographically greatest, so lv beats -lv
        auto best = stars.begin();
        for (auto it = stars.begin(); it != stars.end(); ++it)
            if (support(*it) <= support(*best)) best = it;
        star = *best;
    }
    TypePresentation out(t.name() + "!", labels, star, std::move(rels));
    out.set_dual(true);
    return out;
}

bool double_dual_check(const TypePresentation& t) {
    return dual(dual(t)).relation_space() == t.relation_space();
}

NonDualityReport non_duality_witness(const TypePresentation& d) {
    NonDualityReport rep;
    TypePresentation q = square(d, d);
    TypePresentation aq = dual(q);
    TypePresentation ad = dual(d);
    TypePresentation mal = maltese(ad, ad);
    rep.aq_dim = aq.relation_space().dim();
    rep.maltese_dim = mal.relation_space().dim();
    rep.inclusion_holds = mal.relation_space().leq(aq.relation_space());

    auto idx = [&](const TypePresentation& t, const std::string& a) {
        int i = t.index_of(a);
        if (i < 0) throw MathError("missing generator '" + a + "'");
        return static_cast<std::size_t>(i);
    };
    const std::size_t m = q.dim();
    // ((gt|gt)(lt|lt), (gt|gt)(lt|lt)) in R_Q
    rep.primal = RelationElement::zero(m);
    rep.primal.left(idx(q, "(gt|gt)"), idx(q, "(lt|lt)")) = Scalar(1);
    rep.primal.right(idx(q, "(gt|gt)"), idx(q, "(lt|lt)")) = Scalar(1);
    // ((rv|rv)(lv|rv), (rv|rv)(lv|lv)) = (rv lv, rv lv) (.) (rv rv, rv lv)
    rep.witness = RelationElement::zero(m);
    rep.witness.left(idx(aq, "(rv|rv)"), idx(aq, "(lv|rv)")) = Scalar(1);
    rep.witness.right(idx(aq, "(rv|rv)"), idx(aq, "(lv|lv)")) = Scalar(1);
    rep.pairing = pair2(rep.primal, rep.witness);
    rep.primal_in_rq = q.relation_space().contains(rep.primal.flatten());
    rep.witness_in_maltese = mal.relation_space().contains(rep.witness.flatten());
    rep.witness_in_aq = aq.relation_space().contains(rep.witness.flatten());

    RelationElement sym = RelationElement::zero(m);
    sym.left(idx(aq, "(rv|rv)"), idx(aq, "(lv|lv)")) = Scalar(1);
    sym.right(idx(aq, "(rv|rv)"), idx(aq, "(lv|lv)")) = Scalar(1);
    rep.symmetric_element_annihilates =
        std::all_of(q.relations().begin(), q.relations().end(),
                    [&](const RelationElement& r) { return pair2(r, sym).is_zero(); });
    return rep;
}

}  // namespace bqr
