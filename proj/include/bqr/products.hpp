#ifndef BQR_PRODUCTS_HPP
#define BQR_PRODUCTS_HPP

// Square and maltese products of types, powers, the factor swap and the
// tensor-model check.
//
// Product generators are the pairs (a|b) in lexicographic order, so the
// generator (i1, i2) sits at index i1 * m2 + i2.

#include "bqr/morphism.hpp"
#include "bqr/type.hpp"

namespace bqr {

// f (.) g: the relation whose L and R blocks are the Kronecker products of
// the factor blocks.
RelationElement box(const RelationElement& f, const RelationElement& g);
Vector kron(const Vector& a, const Vector& b);

std::string pair_label(const std::string& a, const std::string& b);

// Relation basis ordered f-major: f1_0 (.) f2_0, f1_0 (.) f2_1, ...
// The result is checked: independence (see square_relation_rank) and star
// associativity by the explicit coordinate identity assoc1 (.) assoc2.
TypePresentation square(const TypePresentation& t1, const TypePresentation& t2);

// Dimension of the span of the boxed relations f1 (.) f2. Equals s1 * s2
// unless both factors have relations with a vanishing left block and
// relations with a vanishing right block; square() rejects that case.
std::size_t square_relation_rank(const TypePresentation& t1, const TypePresentation& t2);

// Canonical (row-reduced) basis of the span of f (.) e and e (.) g.
TypePresentation maltese(const TypePresentation& t1, const TypePresentation& t2);

// Left-associated iterated square with flat tuple labels "(a|b|c)".
TypePresentation power(const TypePresentation& t, int n);

// (a|b) -> (b|a) from square(t1, t2) to square(t2, t1).
TypeMorphism transpose_swap(const TypePresentation& t1, const TypePresentation& t2);

// f (.) g between squares of the sources and targets.
TypeMorphism box(const TypeMorphism& f, const TypeMorphism& g);

// Identity on generators, square(t1, square(t2, t3)) -> square(square(t1, t2), t3).
TypeMorphism reassociation(const TypePresentation& t1, const TypePresentation& t2,
                           const TypePresentation& t3);

struct TensorModelReport {
    std::size_t relations = 0;
    std::size_t factored = 0;
    std::vector<std::size_t> failures;
    bool ok() const { return relations == factored; }
};

// Each relation of square(t1, t2), read on elementary tensors
// (x1 (x) x2)(a|b)(y1 (x) y2) = (x1 a y1) (x) (x2 b y2), must vanish in
// D1 (x) D2, i.e. lie in R1 (x) V2 + V1 (x) R2 inside the tensor product of
// the free arity-3 spaces.
TensorModelReport verify_tensor_model(const TypePresentation& t1, const TypePresentation& t2);

}  // namespace bqr

#endif
