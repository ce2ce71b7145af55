#ifndef BQR_OPERATORVER_HPP
#define BQR_OPERATORVER_HPP

// Symbolic verification of operator constructions: given an algebra of some
// type with one or more commuting linear operators obeying a Rota-Baxter or
// Nijenhuis type law, check that the derived operations satisfy the
// relations of the predicted product type.
//
// Terms are binary trees over the variables x, y, z (kept in that order)
// whose nodes carry an operator word. Words are multisets over at most
// kMaxSymbols operator symbols, so commuting operators are sorted by
// construction.

#include "bqr/type.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bqr {

// Raised when normalization exceeds its step guard or nesting cap.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr std::size_t kMaxSymbols = 4;
using Word = std::array<std::uint8_t, kMaxSymbols>;  // multiplicity of each symbol

std::size_t word_length(const Word& w);
std::string word_text(const Word& w, const std::vector<std::string>& symbols);

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
public:
    static TermPtr leaf(char var, Word word = {});
    static TermPtr product(int gen, TermPtr left, TermPtr right, Word word = {});

    bool is_leaf() const { return gen_ < 0; }
    int gen() const { return gen_; }
    char var() const { return var_; }
    const Word& word() const { return word_; }
    const TermPtr& left() const { return left_; }
    const TermPtr& right() const { return right_; }
    // Canonical key; equal terms have equal keys.
    const std::string& key() const { return key_; }

    TermPtr with_word(Word w) const;
    TermPtr with_children(TermPtr l, TermPtr r) const;

    // Human-readable form, e.g. "P(x lt P(y))".
    std::string str(const std::vector<std::string>& gens, const std::vector<std::string>& symbols) const;

private:
    Term() = default;
    int gen_ = -1;
    char var_ = 0;
    Word word_{};
    TermPtr left_, right_;
    std::string key_;
};

// Finite linear combination of terms, ordered by key.
class Combination {
public:
    Combination() = default;
    explicit Combination(TermPtr t, Scalar c = Scalar(1));

    void add(const TermPtr& t, const Scalar& c);
    void add(const Combination& o, const Scalar& c = Scalar(1));
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<std::string, std::pair<TermPtr, Scalar>>& terms() const { return terms_; }
    Combination scaled(const Scalar& c) const;
    // l := value in every coefficient
    Combination evaluated(const Rational& value) const;

    std::string str(const std::vector<std::string>& gens, const std::vector<std::string>& symbols) const;
    friend bool operator==(const Combination& a, const Combination& b);

private:
    std::map<std::string, std::pair<TermPtr, Scalar>> terms_;
};

enum class LawKind { rb, rb0, nijenhuis, left_rb, right_rb };

struct OperatorLaw {
    LawKind kind = LawKind::rb;
    // Weight of a Rota-Baxter law; empty means the formal weight l.
    std::optional<Rational> weight;

    Scalar weight_scalar() const;
    std::string str() const;
};

// "rb", "rb0", "nijenhuis", "leftrb" (or "left_rb"), "rightrb"; the weight is
// "formal" or a rational "p/q". Throws MathError on unknown names.
OperatorLaw parse_law(const std::string& name, const std::string& weight = "formal");

// Catalog name of the factor type a law predicts.
std::string predicted_factor(LawKind kind);

enum class Strategy { innermost_leftmost, outermost_rightmost };

struct RewriteOptions {
    Strategy strategy = Strategy::innermost_leftmost;
    std::size_t nesting_cap = 6;
    std::size_t step_guard = 100000;
};

// The operator with symbol index s obeys laws[s]. Rewrites to a fixpoint;
// throws BudgetError("rewrite budget exhausted") past the step guard.
Combination normalize(const Combination& c, const std::vector<OperatorLaw>& laws,
                      const RewriteOptions& opt = {}, std::size_t* steps = nullptr);

// Wrap every term of c in one more copy of symbol s.
Combination apply_operator(const Combination& c, std::size_t s, std::size_t nesting_cap = 6);

// One relation instance C[f(u, v, w)]: relation f of the base type, words on
// the three leaves and on the whole term.
struct Instance {
    std::size_t relation = 0;
    Word x{}, y{}, z{}, wrap{};
};

Combination instance_combination(const TypePresentation& base, const Instance& inst,
                                 std::size_t nesting_cap = 6);

struct CertificateEntry {
    Instance instance;
    Scalar coefficient;
};

struct RelationVerdict {
    std::size_t index = 0;
    bool verified = false;
    Combination residual;                    // normalized LHS - RHS
    std::vector<CertificateEntry> certificate;
    bool certificate_checked = false;        // re-evaluated to the residual exactly
};

struct VerificationReport {
    std::string type;      // base type
    std::string law;       // e.g. "rb(l)" or "[rb0, rb0]"
    std::string product;   // predicted product type
    std::vector<std::string> generators;  // of the base type, for printing
    std::vector<std::string> symbols;     // operator names
    std::vector<RelationVerdict> relations;
    std::size_t instances = 0;            // size of the instance family used

    bool ok() const;
    std::size_t verified_count() const;
    std::string to_json() const;
};

struct VerifyOptions {
    RewriteOptions rewrite;
    bool certificates = true;
};

VerificationReport verify_operator_theorem(const TypePresentation& t, const OperatorLaw& law,
                                           const VerifyOptions& opt = {});

// Left-associated ((t x X1) x X2) ... with one commuting operator per law
// (at most three).
VerificationReport verify_commuting_family(const TypePresentation& t, const std::vector<OperatorLaw>& laws,
                                           const VerifyOptions& opt = {});

// LHS - RHS of every relation of the predicted product, expanded through the
// derived operations but not normalized (used to compare strategies).
std::vector<Combination> expanded_relations(const TypePresentation& t, const std::vector<OperatorLaw>& laws);

// Writes a normalized combination as a combination of normalized relation
// instances of t, if it is one (searching one operator past its own degree).
std::optional<std::vector<CertificateEntry>> instance_certificate(const TypePresentation& t,
                                                                  const std::vector<OperatorLaw>& laws,
                                                                  const Combination& c,
                                                                  const VerifyOptions& opt = {});

struct LemmaItem {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct LemmaReport {
    std::vector<LemmaItem> items;
    bool ok() const;
    std::string to_json() const;
};

// (i) -l id - P is again Rota-Baxter of weight l; (ii) id - N is again
// Nijenhuis; (iii) x (w,lt) y = x w P(y), x (w,gt) y = l x w y + P(x) w y
// gives the relations of t x dendriform for the associative type and the
// trialgebra.
LemmaReport verify_operator_lemmas(const VerifyOptions& opt = {});

}  // namespace bqr

#endif
