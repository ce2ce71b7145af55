#ifndef BQR_MORPHISM_HPP
#define BQR_MORPHISM_HPP

// Morphisms of types: linear maps of generator spaces carrying the star to the
// star and relations into relations.

#include "bqr/type.hpp"

#include <cstdint>

namespace bqr {

class TypeMorphism {
public:
    // f is target.dim() x source.dim(); column i is the image of source generator i.
    // Only shapes are checked here, the star and relation conditions belong to
    // check_morphism.
    TypeMorphism(TypePresentation source, TypePresentation target, Matrix f);

    const TypePresentation& source() const { return source_; }
    const TypePresentation& target() const { return target_; }
    const Matrix& matrix() const { return f_; }

    // Image of the source star (empty when the source has none).
    std::optional<Vector> star_image() const;
    bool preserves_star() const;

private:
    TypePresentation source_;
    TypePresentation target_;
    Matrix f_;
};

bool check_morphism(const TypeMorphism& f);
// Invertible, a morphism, and pushes R onto R' exactly.
bool check_isomorphism(const TypeMorphism& f);

// g after f
TypeMorphism compose(const TypeMorphism& g, const TypeMorphism& f);
TypeMorphism invert(const TypeMorphism& f);
TypeMorphism identity_morphism(const TypePresentation& t);

// Builds F from a table source-label -> linear combination of target labels.
TypeMorphism morphism_from_table(const TypePresentation& source, const TypePresentation& target,
                                 const std::vector<std::pair<std::string, Vector>>& table);

// Signed permutation: image[i] is the target index of generator i, sign[i] in {+1,-1}.
struct SignedPermutation {
    std::vector<std::uint32_t> image;
    std::vector<int> sign;
    // Also read every operation with its arguments swapped (an
    // anti-automorphism, as for passing to the opposite algebra).
    bool reverses = false;
    Matrix matrix() const;
    SignedPermutation after(const SignedPermutation& first) const;
    SignedPermutation inverse() const;
    bool is_identity() const;
    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
};

struct AutomorphismGroup {
    std::vector<SignedPermutation> elements;  // sorted
    std::size_t candidates_examined = 0;
    bool closed = false;                      // closure under composition and inverse checked
    std::size_t order() const { return elements.size(); }
    bool contains(const SignedPermutation& p) const;
};

struct AutomorphismOptions {
    bool allow_signs = true;   // entry set {+1,-1}; otherwise {+1}
    std::size_t max_dim = 9;
    bool override_guard = false;
    bool include_reversal = false;  // also search anti-automorphisms
};

// Exhaustive search over monomial matrices. Throws MathError when m exceeds
// the guard and no override is given.
AutomorphismGroup monomial_automorphisms(const TypePresentation& t, const AutomorphismOptions& opt = {});

// True iff the signed permutation (after argument reversal, if set) maps
// every relation of t into R(t) and fixes the star.
bool is_monomial_automorphism(const TypePresentation& t, const SignedPermutation& p);

}  // namespace bqr

#endif
