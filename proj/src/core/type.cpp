#include "bqr/type.hpp"

#include <mutex>
#include <set>

namespace bqr {

// ---------------------------------------------------------------- RelationElement

RelationElement RelationElement::zero(std::size_t m) { return {Matrix(m, m), Matrix(m, m)}; }

RelationElement RelationElement::pure(const Vector& a, const Vector& b, const Vector& c,
                                      const Vector& d) {
    const std::size_t m = a.size();
    RelationElement r = zero(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (!a[i].is_zero() && !b[j].is_zero()) r.left(i, j) = a[i] * b[j];
            if (!c[i].is_zero() && !d[j].is_zero()) r.right(i, j) = c[i] * d[j];
        }
    return r;
}

RelationElement RelationElement::unflatten(std::span<const Scalar> v, std::size_t m) {
    if (v.size() != 2 * m * m) throw MathError("flattened relation has wrong length");
    RelationElement r = zero(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            r.left(i, j) = v[i * m + j];
            r.right(i, j) = v[m * m + i * m + j];
        }
    return r;
}

Vector RelationElement::flatten() const {
    const std::size_t m = dim();
    Vector v(2 * m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            v[i * m + j] = left(i, j);
            v[m * m + i * m + j] = right(i, j);
        }
    return v;
}

RelationElement& RelationElement::operator+=(const RelationElement& o) {
    const std::size_t m = dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            left(i, j) += o.left(i, j);
            right(i, j) += o.right(i, j);
        }
    return *this;
}

RelationElement operator*(const Scalar& c, const RelationElement& r) {
    RelationElement out = r;
    const std::size_t m = r.dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            out.left(i, j) *= c;
            out.right(i, j) *= c;
        }
    return out;
}

// ---------------------------------------------------------------- TypePresentation

struct TypePresentation::Cache {
    std::once_flag once;
    Subspace space;
};

TypePresentation::TypePresentation(std::string name, std::vector<std::string> generators,
                                   std::optional<Vector> star,
                                   std::vector<RelationElement> relations,
                                   std::vector<AuxOperation> aux)
    : name_(std::move(name)),
      generators_(std::move(generators)),
      star_(std::move(star)),
      relations_(std::move(relations)),
      aux_(std::move(aux)),
      cache_(std::make_shared<Cache>()) {
    if (generators_.empty()) throw MathError("a type needs at least one generator");
    std::set<std::string> seen;
    for (const auto& g : generators_) {
        if (g.empty()) throw MathError("empty generator label");
        if (!seen.insert(g).second) throw MathError("duplicate generator '" + g + "'");
    }
    const std::size_t m = generators_.size();
    if (star_ && star_->size() != m) throw MathError("star has wrong length");
    for (const auto& r : relations_)
        if (r.left.rows() != m || r.left.cols() != m || r.right.rows() != m || r.right.cols() != m)
            throw MathError("relation matrix has wrong shape");
    for (const auto& a : aux_) {
        if (a.coeffs.size() != m) throw MathError("auxiliary operation '" + a.name + "' has wrong length");
        if (seen.count(a.name)) throw MathError("auxiliary name '" + a.name + "' shadows a generator");
    }
}

int TypePresentation::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i] == label) return static_cast<int>(i);
    return -1;
}

Matrix TypePresentation::relation_matrix() const {
    Matrix m(0, flat_dim());
    for (const auto& r : relations_) m.append_row(r.flatten());
    return m;
}

const Subspace& TypePresentation::relation_space() const {
    std::call_once(cache_->once, [this] { cache_->space = Subspace::span(relation_matrix()); });
    return cache_->space;
}

bool operator==(const TypePresentation& a, const TypePresentation& b) {
    return a.name_ == b.name_ && a.generators_ == b.generators_ && a.star_ == b.star_ &&
           a.relations_ == b.relations_ && a.aux_ == b.aux_;
}

// ---------------------------------------------------------------- operations

Vector unit_vector(std::size_t m, std::size_t i) {
    Vector v(m);
    v[i] = Scalar(1);
    return v;
}

Vector associativity_vector(const Vector& s) {
    return RelationElement::pure(s, s, s, s).flatten();
}

ValidationReport validate(const TypePresentation& t) {
    ValidationReport rep;
    rep.relation_count = t.relations().size();
    rep.relation_rank = t.relation_space().dim();
    rep.independent = rep.relation_rank == rep.relation_count;
    if (!rep.independent)
        rep.notes.push_back("relation basis is dependent: rank " + std::to_string(rep.relation_rank) +
                            " < " + std::to_string(rep.relation_count));
    rep.star_present = t.star().has_value();
    if (rep.star_present) {
        const Vector& s = *t.star();
        rep.star_nonzero = std::any_of(s.begin(), s.end(), [](const Scalar& c) { return !c.is_zero(); });
        if (!rep.star_nonzero) rep.notes.push_back("star is zero");
        rep.star_associative = rep.star_nonzero && t.relation_space().contains(associativity_vector(s));
        if (rep.star_nonzero && !rep.star_associative)
            rep.notes.push_back("associativity vector of the star is not in the relation space");
        rep.valid = rep.independent && rep.star_nonzero && rep.star_associative;
    } else if (t.is_dual()) {
        rep.star_unresolved = true;
        rep.notes.push_back("dual presentation, star unresolved");
        rep.valid = rep.independent;
    } else {
        rep.notes.push_back("no star given");
    }
    return rep;
}

SplittingBasis splitting_basis(const TypePresentation& t) {
    ValidationReport rep = validate(t);
    if (!rep.valid || !t.star()) throw MathError("no splitting associativity");
    const std::size_t m = t.dim();
    const Vector& star = *t.star();

    // Complete the star with the standard vectors e_j (j != k) where star_k != 0,
    // then replace the slot k by star - sum of the others.
    SplittingBasis out;
    std::size_t k = 0;
    while (star[k].is_zero()) ++k;
    for (std::size_t j = 0; j < m; ++j) out.generators.push_back(unit_vector(m, j));
    Vector first = star;
    for (std::size_t j = 0; j < m; ++j)
        if (j != k) first[j] -= Scalar(1);
    out.generators[k] = first;

    // Same procedure for the associativity element inside the relation basis.
    const auto& rels = t.relations();
    Vector assoc = associativity_vector(star);
    auto found = relation_coordinates(t, assoc);
    if (!found) throw MathError("no splitting associativity");
    const Vector& coeffs = *found;
    std::size_t kr = 0;
    while (kr < coeffs.size() && coeffs[kr].is_zero()) ++kr;
    if (kr == coeffs.size()) throw MathError("no splitting associativity");
    out.relations = rels;
    const std::size_t mm = t.dim();
    RelationElement replaced = RelationElement::unflatten(assoc, mm);
    for (std::size_t j = 0; j < rels.size(); ++j)
        if (j != kr) replaced += Scalar(-1) * rels[j];
    out.relations[kr] = replaced;
    return out;
}

std::optional<Vector> relation_coordinates(const TypePresentation& t, const Vector& v) {
    const auto& rels = t.relations();
    const std::size_t n = t.flat_dim(), s = rels.size();
    if (v.size() != n) throw MathError("vector has wrong length");
    // Columns are the flattened relations, last column is v.
    Matrix aug(n, s + 1);
    for (std::size_t j = 0; j < s; ++j) {
        Vector f = rels[j].flatten();
        for (std::size_t i = 0; i < n; ++i) aug(i, j) = f[i];
    }
    for (std::size_t i = 0; i < n; ++i) aug(i, s) = v[i];
    RrefResult r = rref(aug);
    Vector coeffs(s);
    for (std::size_t i = 0; i < r.rank; ++i) {
        if (r.pivots[i] == s) return std::nullopt;
        coeffs[r.pivots[i]] = r.reduced(i, s);
    }
    return coeffs;
}

long arity3_dimension(const TypePresentation& t) {
    long d = static_cast<long>(t.flat_dim()) - static_cast<long>(t.relation_space().dim());
    if (d < 0) throw MathError("relation space larger than ambient space");
    return d;
}

RelationElement push_forward(const RelationElement& r, const Matrix& f) {
    Matrix ft = f.transpose();
    return {f * r.left * ft, f * r.right * ft};
}

namespace {

Vector apply(const Matrix& f, const Vector& v) {
    Vector out(f.rows());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j)
            if (!f(i, j).is_zero() && !v[j].is_zero()) out[i] += f(i, j) * v[j];
    return out;
}

}  // namespace

TypePresentation relabel(const TypePresentation& t, const Matrix& f) {
    const std::size_t m = t.dim();
    if (f.rows() != m || f.cols() != m) throw MathError("relabel map has wrong shape");
    (void)f.inverse();  // throws when singular
    std::vector<RelationElement> rels;
    for (const auto& r : t.relations()) rels.push_back(push_forward(r, f));
    std::optional<Vector> star;
    if (t.star()) star = apply(f, *t.star());
    std::vector<AuxOperation> aux;
    for (const auto& a : t.aux()) aux.push_back({a.name, apply(f, a.coeffs)});
    TypePresentation out(t.name(), t.generators(), star, rels, aux);
    out.set_dual(t.is_dual());
    return out;
}

TypePresentation relabel(const TypePresentation& t, const std::map<std::string, std::string>& perm) {
    const std::size_t m = t.dim();
    Matrix f(m, m);
    std::set<int> targets;
    for (std::size_t i = 0; i < m; ++i) {
        const std::string& from = t.generators()[i];
        auto it = perm.find(from);
        int to = it == perm.end() ? static_cast<int>(i) : t.index_of(it->second);
        if (to < 0) throw MathError("unknown label in relabeling");
        if (!targets.insert(to).second) throw MathError("relabeling is not a bijection");
        f(static_cast<std::size_t>(to), i) = Scalar(1);
    }
    return relabel(t, f);
}

TypePresentation opposite(const TypePresentation& t) {
    std::vector<RelationElement> rels;
    for (const auto& r : t.relations()) rels.push_back({r.right.transpose(), r.left.transpose()});
    TypePresentation out(t.name() + "^op", t.generators(), t.star(), std::move(rels), t.aux());
    out.set_dual(t.is_dual());
    return out;
}

}  // namespace bqr
