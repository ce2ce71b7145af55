#ifndef BQR_DUALITY_HPP
#define BQR_DUALITY_HPP

// The signed pairing <(a,b),(c,d)> = <a,c> - <b,d>, dual types as
// annihilators, and the quadri non-duality witness.

#include "bqr/type.hpp"

namespace bqr {

// u over Omega, v over the dual basis (coordinate-wise identification).
Scalar pair2(const RelationElement& u, const RelationElement& v);

// "lt" -> "lv", "gt" -> "rv", "bul" -> "cir", tuples component-wise,
// anything else gets a "^" suffix.
std::string dual_label(const std::string& label);

struct StarSearchOptions {
    int bound = 1;  // coefficients range over [-bound, bound]
};

// All nonzero s with integer entries in the bound whose associativity
// vector lies in R, in lexicographic order of the coefficient tuples.
std::vector<Vector> find_star(const TypePresentation& t, const StarSearchOptions& opt = {});

// Annihilator of R under pair2, with a star picked from find_star when one
// exists (all-ones first, else the smallest support).
TypePresentation dual(const TypePresentation& t);

bool double_dual_check(const TypePresentation& t);

struct NonDualityReport {
    std::size_t aq_dim = 0;       // dim dual(square(D, D))
    std::size_t maltese_dim = 0;  // dim maltese(dual D, dual D)
    bool inclusion_holds = true;  // maltese <= AQ ?
    RelationElement primal;       // element of R_Q
    RelationElement witness;      // element of the maltese product
    Scalar pairing;
    bool primal_in_rq = false;
    bool witness_in_maltese = false;
    bool witness_in_aq = true;
    // Recorded, not asserted: does ((rv|rv)(lv|lv), (rv|rv)(lv|lv)) pair to
    // zero with every basis relation of square(D, D)?
    bool symmetric_element_annihilates = false;
};

NonDualityReport non_duality_witness(const TypePresentation& dendriform);

}  // namespace bqr

#endif
