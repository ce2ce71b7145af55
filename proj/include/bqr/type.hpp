#ifndef BQR_TYPE_HPP
#define BQR_TYPE_HPP

// Presentations (generators, relations, star) of binary quadratic regular
// operads.
//
// A relation element is a pair (L, R) of m x m coefficient matrices. Entry
// L(i, j) is the coefficient of (x e_i y) e_j z and R(i, j) the coefficient of
// x e_i (y e_j z); the element stands for the identity
//     sum L(i,j) (x e_i y) e_j z  =  sum R(i,j) x e_i (y e_j z).
//
// Flattening convention, used everywhere a relation becomes a vector of
// length 2 m^2: L row-major, then R row-major.

#include "bqr/exact.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bqr {

using Vector = std::vector<Scalar>;

struct RelationElement {
    Matrix left;
    Matrix right;

    static RelationElement zero(std::size_t m);
    // (a (x) b, c (x) d) for generator coordinate vectors a, b, c, d.
    static RelationElement pure(const Vector& a, const Vector& b, const Vector& c, const Vector& d);
    static RelationElement unflatten(std::span<const Scalar> v, std::size_t m);

    std::size_t dim() const { return left.rows(); }
    Vector flatten() const;
    bool is_zero() const { return left.is_zero() && right.is_zero(); }

    RelationElement& operator+=(const RelationElement& o);
    friend RelationElement operator*(const Scalar& c, const RelationElement& r);
    friend bool operator==(const RelationElement& a, const RelationElement& b) {
        return a.left == b.left && a.right == b.right;
    }
};

// Named linear combination of generators (e.g. wedge = ne + nw).
struct AuxOperation {
    std::string name;
    Vector coeffs;
    friend bool operator==(const AuxOperation&, const AuxOperation&) = default;
};

class TypePresentation {
public:
    // Throws MathError on structural problems: empty or duplicate generator
    // labels, wrong matrix shapes, wrong star length.
    TypePresentation(std::string name, std::vector<std::string> generators,
                     std::optional<Vector> star, std::vector<RelationElement> relations,
                     std::vector<AuxOperation> aux = {});

    const std::string& name() const { return name_; }
    const std::vector<std::string>& generators() const { return generators_; }
    std::size_t dim() const { return generators_.size(); }
    std::size_t flat_dim() const { return 2 * dim() * dim(); }
    const std::optional<Vector>& star() const { return star_; }
    const std::vector<RelationElement>& relations() const { return relations_; }
    const std::vector<AuxOperation>& aux() const { return aux_; }

    // Set on presentations obtained by dualizing.
    bool is_dual() const { return dual_; }
    void set_dual(bool d) { dual_ = d; }
    void set_name(std::string n) { name_ = std::move(n); }

    // Index of a generator label, or -1.
    int index_of(const std::string& label) const;

    // Row-reduced span of the flattened relation basis; computed on first use
    // and shared between copies.
    const Subspace& relation_space() const;
    // Flattened relation basis as rows (not reduced).
    Matrix relation_matrix() const;

    friend bool operator==(const TypePresentation& a, const TypePresentation& b);

private:
    struct Cache;
    std::string name_;
    std::vector<std::string> generators_;
    std::optional<Vector> star_;
    std::vector<RelationElement> relations_;
    std::vector<AuxOperation> aux_;
    bool dual_ = false;
    std::shared_ptr<Cache> cache_;
};

// flatten(s (x) s, s (x) s)
Vector associativity_vector(const Vector& s);

struct ValidationReport {
    std::size_t relation_count = 0;
    std::size_t relation_rank = 0;
    bool independent = false;
    bool star_present = false;
    bool star_nonzero = false;
    bool star_associative = false;
    // Dual presentations without a known associative element are accepted
    // with this flag instead of failing.
    bool star_unresolved = false;
    bool valid = false;
    std::vector<std::string> notes;
};

ValidationReport validate(const TypePresentation& t);

struct SplittingBasis {
    std::vector<Vector> generators;          // sums to the star
    std::vector<RelationElement> relations;  // sums to the associativity element
};

// Throws MathError("no splitting associativity") for invalid input.
SplittingBasis splitting_basis(const TypePresentation& t);

// Coefficients c with sum c_j r_j = v over the stored relation basis, if any.
std::optional<Vector> relation_coordinates(const TypePresentation& t, const Vector& v);

// 2 m^2 - dim R
long arity3_dimension(const TypePresentation& t);

// Push a relation forward along the generator map F (target coords = F * source coords).
RelationElement push_forward(const RelationElement& r, const Matrix& f);

// Apply an invertible generator map to the whole presentation. Labels are
// kept; relations, star and auxiliary operations are transported.
TypePresentation relabel(const TypePresentation& t, const Matrix& f);
// Permutation given as a label bijection.
TypePresentation relabel(const TypePresentation& t, const std::map<std::string, std::string>& perm);

// The type of opposite algebras, x op y := y x, in the same labels:
// (L, R) becomes (R^T, L^T).
TypePresentation opposite(const TypePresentation& t);

Vector unit_vector(std::size_t m, std::size_t i);

}  // namespace bqr

#endif
