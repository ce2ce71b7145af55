#include "bqr/operatorver.hpp"

#include "bqr/catalog.hpp"
#include "bqr/products.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

namespace bqr {

using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------- words

std::size_t word_length(const Word& w) {
    std::size_t n = 0;
    for (auto c : w) n += c;
    return n;
}

std::string word_text(const Word& w, const std::vector<std::string>& symbols) {
    std::string out;
    for (std::size_t s = 0; s < kMaxSymbols; ++s) {
        if (!w[s]) continue;
        std::string name = s < symbols.size() ? symbols[s] : "Op" + std::to_string(s);
        out += name;
        if (w[s] > 1) out += "^" + std::to_string(w[s]);
    }
    return out;
}

namespace {

std::string word_key(const Word& w) {
    std::string out;
    for (std::size_t s = 0; s < kMaxSymbols; ++s) out.append(w[s], static_cast<char>('A' + s));
    return out;
}

Word plus(Word w, std::size_t s, std::size_t cap) {
    ++w[s];
    if (word_length(w) > cap)
        throw BudgetError("nesting cap exceeded (" + std::to_string(cap) + " operators)");
    return w;
}

Word minus(Word w, std::size_t s) {
    --w[s];
    return w;
}

}  // namespace

// ---------------------------------------------------------------- terms

TermPtr Term::leaf(char var, Word word) {
    auto t = std::shared_ptr<Term>(new Term());
    t->var_ = var;
    t->word_ = word;
    t->key_ = word_key(word) + var;
    return t;
}

TermPtr Term::product(int gen, TermPtr left, TermPtr right, Word word) {
    auto t = std::shared_ptr<Term>(new Term());
    t->gen_ = gen;
    t->word_ = word;
    t->key_ = word_key(word) + "(" + left->key_ + " " + std::to_string(gen) + " " + right->key_ + ")";
    t->left_ = std::move(left);
    t->right_ = std::move(right);
    return t;
}

TermPtr Term::with_word(Word w) const {
    return is_leaf() ? leaf(var_, w) : product(gen_, left_, right_, w);
}

TermPtr Term::with_children(TermPtr l, TermPtr r) const { return product(gen_, std::move(l), std::move(r), word_); }

std::string Term::str(const std::vector<std::string>& gens, const std::vector<std::string>& symbols) const {
    std::string inner;
    if (is_leaf()) {
        inner = std::string(1, var_);
    } else {
        std::string g = gen_ < static_cast<int>(gens.size()) ? gens[gen_] : "g" + std::to_string(gen_);
        auto side = [&](const TermPtr& t) {
            std::string s = t->str(gens, symbols);
            return (!t->is_leaf() && word_length(t->word()) == 0) ? "(" + s + ")" : s;
        };
        inner = side(left_) + " " + g + " " + side(right_);
    }
    if (word_length(word_) == 0) return inner;
    return word_text(word_, symbols) + "(" + inner + ")";
}

// ---------------------------------------------------------------- combinations

Combination::Combination(TermPtr t, Scalar c) { add(t, c); }

void Combination::add(const TermPtr& t, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(t->key(), t, c);
    if (fresh) return;
    it->second.second += c;
    if (it->second.second.is_zero()) terms_.erase(it);
}

void Combination::add(const Combination& o, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [k, tc] : o.terms_) add(tc.first, tc.second * c);
}

Combination Combination::scaled(const Scalar& c) const {
    Combination out;
    out.add(*this, c);
    return out;
}

Combination Combination::evaluated(const Rational& value) const {
    Combination out;
    for (const auto& [k, tc] : terms_) out.add(tc.first, Scalar(tc.second.eval(value)));
    return out;
}

std::string Combination::str(const std::vector<std::string>& gens, const std::vector<std::string>& symbols) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, tc] : terms_) {
        const Scalar& c = tc.second;
        std::string body = tc.first->str(gens, symbols);
        if (c.is_one()) {
            out += out.empty() ? body : " + " + body;
        } else if ((-c).is_one()) {
            out += out.empty() ? "-" + body : " - " + body;
        } else {
            std::string cs = c.str();
            if (c.kind() == ScalarKind::ratfunc) cs = "(" + cs + ")";
            out += (out.empty() ? "" : " + ") + cs + "*" + body;
        }
    }
    return out;
}

bool operator==(const Combination& a, const Combination& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
        if (i->first != j->first || !(i->second.second == j->second.second)) return false;
    return true;
}

// ---------------------------------------------------------------- laws

Scalar OperatorLaw::weight_scalar() const {
    if (kind == LawKind::rb0) return Scalar(0);
    if (weight) return Scalar(*weight);
    return Scalar::weight();
}

std::string OperatorLaw::str() const {
    switch (kind) {
        case LawKind::rb:
            return "rb(" + (weight ? weight->str() : std::string("l")) + ")";
        case LawKind::rb0:
            return "rb0";
        case LawKind::nijenhuis:
            return "nijenhuis";
        case LawKind::left_rb:
            return "left_rb";
        case LawKind::right_rb:
            return "right_rb";
    }
    return "?";
}

OperatorLaw parse_law(const std::string& name, const std::string& weight) {
    OperatorLaw law;
    if (name == "rb") law.kind = LawKind::rb;
    else if (name == "rb0") law.kind = LawKind::rb0;
    else if (name == "nijenhuis") law.kind = LawKind::nijenhuis;
    else if (name == "leftrb" || name == "left_rb") law.kind = LawKind::left_rb;
    else if (name == "rightrb" || name == "right_rb") law.kind = LawKind::right_rb;
    else throw MathError("unknown law '" + name + "' (rb, rb0, nijenhuis, leftrb, rightrb)");
    if (law.kind == LawKind::rb && weight != "formal" && !weight.empty()) law.weight = Rational::parse(weight);
    return law;
}

std::string predicted_factor(LawKind kind) {
    switch (kind) {
        case LawKind::rb:
            return "trialgebra";
        case LawKind::rb0:
            return "dendriform";
        case LawKind::nijenhuis:
            return "ns";
        case LawKind::left_rb:
            return "dipterous";
        case LawKind::right_rb:
            return "anti_dipterous";
    }
    return "";
}

// ---------------------------------------------------------------- rewriting

namespace {

using Expansion = std::vector<std::pair<Scalar, TermPtr>>;

class Rewriter {
public:
    Rewriter(const std::vector<OperatorLaw>& laws, const RewriteOptions& opt) : laws_(laws), opt_(opt) {}

    bool step(const TermPtr& t, Expansion& out) const {
        if (t->is_leaf()) return false;
        if (opt_.strategy == Strategy::outermost_rightmost) {
            if (here(t, out)) return true;
            if (in_child(t, false, out)) return true;
            return in_child(t, true, out);
        }
        if (in_child(t, true, out)) return true;
        if (in_child(t, false, out)) return true;
        return here(t, out);
    }

private:
    bool in_child(const TermPtr& t, bool left, Expansion& out) const {
        Expansion sub;
        if (!step(left ? t->left() : t->right(), sub)) return false;
        for (auto& [c, n] : sub)
            out.emplace_back(c, left ? t->with_children(n, t->right()) : t->with_children(t->left(), n));
        return true;
    }

    bool here(const TermPtr& t, Expansion& out) const {
        const TermPtr& a = t->left();
        const TermPtr& b = t->right();
        const std::size_t n = laws_.size();
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t s = opt_.strategy == Strategy::outermost_rightmost ? n - 1 - k : k;
            if (!a->word()[s] || !b->word()[s]) continue;
            TermPtr u = a->with_word(minus(a->word(), s));
            TermPtr v = b->with_word(minus(b->word(), s));
            Word w1 = plus(t->word(), s, opt_.nesting_cap);
            auto prod = [&](const TermPtr& l, const TermPtr& r, const Word& w) {
                return Term::product(t->gen(), l, r, w);
            };
            switch (laws_[s].kind) {
                case LawKind::rb:
                case LawKind::rb0: {
                    // P(u) P(v) -> P(P(u) v) + P(u P(v)) + w P(u v)
                    out.emplace_back(Scalar(1), prod(a, v, w1));
                    out.emplace_back(Scalar(1), prod(u, b, w1));
                    Scalar w = laws_[s].weight_scalar();
                    if (!w.is_zero()) out.emplace_back(w, prod(u, v, w1));
                    break;
                }
                case LawKind::nijenhuis:
                    // N(u) N(v) -> N(N(u) v) + N(u N(v)) - N(N(u v))
                    out.emplace_back(Scalar(1), prod(a, v, w1));
                    out.emplace_back(Scalar(1), prod(u, b, w1));
                    out.emplace_back(Scalar(-1), prod(u, v, plus(w1, s, opt_.nesting_cap)));
                    break;
                case LawKind::left_rb:
                    out.emplace_back(Scalar(1), prod(u, b, w1));
                    break;
                case LawKind::right_rb:
                    out.emplace_back(Scalar(1), prod(a, v, w1));
                    break;
            }
            return true;
        }
        return false;
    }

    const std::vector<OperatorLaw>& laws_;
    RewriteOptions opt_;
};

}  // namespace

Combination normalize(const Combination& c, const std::vector<OperatorLaw>& laws, const RewriteOptions& opt,
                      std::size_t* steps) {
    if (laws.size() > kMaxSymbols) throw MathError("too many operator symbols");
    Rewriter rw(laws, opt);
    Combination done, current = c;
    std::size_t count = 0;
    while (!current.empty()) {
        Combination next;
        for (const auto& [k, tc] : current.terms()) {
            Expansion ex;
            if (!rw.step(tc.first, ex)) {
                done.add(tc.first, tc.second);
                continue;
            }
            if (++count > opt.step_guard) throw BudgetError("rewrite budget exhausted");
            for (const auto& [c2, t2] : ex) next.add(t2, tc.second * c2);
        }
        current = std::move(next);
    }
    if (steps) *steps = count;
    return done;
}

Combination apply_operator(const Combination& c, std::size_t s, std::size_t nesting_cap) {
    Combination out;
    for (const auto& [k, tc] : c.terms()) out.add(tc.first->with_word(plus(tc.first->word(), s, nesting_cap)), tc.second);
    return out;
}

// ---------------------------------------------------------------- derived operations

namespace {

Combination leaf(char v, Word w = {}) { return Combination(Term::leaf(v, w)); }

Combination prim(int gen, const Combination& a, const Combination& b) {
    Combination out;
    for (const auto& [ka, ta] : a.terms())
        for (const auto& [kb, tb] : b.terms()) out.add(Term::product(gen, ta.first, tb.first), ta.second * tb.second);
    return out;
}

Combination wrap_root(const Combination& c, const Word& w, std::size_t cap) {
    if (word_length(w) == 0) return c;
    Combination out;
    for (const auto& [k, tc] : c.terms()) {
        Word nw = tc.first->word();
        for (std::size_t s = 0; s < kMaxSymbols; ++s) nw[s] += w[s];
        if (word_length(nw) > cap) throw BudgetError("nesting cap exceeded (" + std::to_string(cap) + " operators)");
        out.add(tc.first->with_word(nw), tc.second);
    }
    return out;
}

// x (w|tau) y = sum coef * [outer]( [left]x  w  [right]y )
struct TemplateTerm {
    Scalar coef;
    bool left = false, right = false, outer = false;
};

using Templates = std::vector<std::vector<TemplateTerm>>;  // per factor generator

struct Level {
    TypePresentation factor;
    Templates templates;
    std::size_t symbol = 0;
};

Templates law_templates(const OperatorLaw& law, const TypePresentation& factor) {
    const TemplateTerm R{Scalar(1), false, true, false};  // x w P(y)
    const TemplateTerm L{Scalar(1), true, false, false};  // P(x) w y
    std::map<std::string, std::vector<TemplateTerm>> by_name;
    switch (law.kind) {
        case LawKind::rb:
            by_name = {{"lt", {R}}, {"gt", {L}}, {"cir", {TemplateTerm{law.weight_scalar(), false, false, false}}}};
            break;
        case LawKind::rb0:
            by_name = {{"lt", {R}}, {"gt", {L}}};
            break;
        case LawKind::nijenhuis:
            by_name = {{"lt", {R}}, {"gt", {L}}, {"bul", {TemplateTerm{Scalar(-1), false, false, true}}}};
            break;
        case LawKind::left_rb:
            by_name = {{"gt", {L}}, {"st", {R}}};
            break;
        case LawKind::right_rb:
            by_name = {{"lt", {R}}, {"st", {L}}};
            break;
    }
    Templates out;
    for (const auto& g : factor.generators()) {
        auto it = by_name.find(g);
        if (it == by_name.end()) throw MathError("no derived operation for generator '" + g + "'");
        out.push_back(it->second);
    }
    return out;
}

class Expander {
public:
    Expander(std::vector<Level> levels, std::size_t cap) : levels_(std::move(levels)), cap_(cap) {}

    Combination op(std::size_t level, std::size_t gen, const Combination& x, const Combination& y) const {
        if (level == 0) return prim(static_cast<int>(gen), x, y);
        const Level& lv = levels_[level - 1];
        const std::size_t m = lv.factor.dim();
        const std::size_t inner = gen / m, tau = gen % m;
        Combination out;
        for (const auto& tt : lv.templates[tau]) {
            Combination a = tt.left ? apply_operator(x, lv.symbol, cap_) : x;
            Combination b = tt.right ? apply_operator(y, lv.symbol, cap_) : y;
            Combination c = op(level - 1, inner, a, b);
            if (tt.outer) c = apply_operator(c, lv.symbol, cap_);
            out.add(c, tt.coef);
        }
        return out;
    }

    // LHS - RHS of a product relation over x, y, z.
    Combination relation(const RelationElement& r) const {
        const std::size_t top = levels_.size();
        const std::size_t m = r.dim();
        Combination x = leaf('x'), y = leaf('y'), z = leaf('z');
        std::vector<std::optional<Combination>> xy(m), yz(m);
        Combination out;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                if (!r.left(i, j).is_zero()) {
                    if (!xy[i]) xy[i] = op(top, i, x, y);
                    out.add(op(top, j, *xy[i], z), r.left(i, j));
                }
                if (!r.right(i, j).is_zero()) {
                    if (!yz[j]) yz[j] = op(top, j, y, z);
                    out.add(op(top, i, x, *yz[j]), -r.right(i, j));
                }
            }
        return out;
    }

private:
    std::vector<Level> levels_;
    std::size_t cap_;
};

// ---------------------------------------------------------------- membership

using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

// a -= c * b
void axpy(SparseVec& a, const Scalar& c, const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.push_back(std::move(*i++));
        } else if (i == a.end() || j->first < i->first) {
            out.emplace_back(j->first, -(c * j->second));
            ++j;
        } else {
            Scalar v = i->second - c * j->second;
            if (!v.is_zero()) out.emplace_back(i->first, std::move(v));
            ++i;
            ++j;
        }
    }
    a = std::move(out);
}

class InstanceSpace {
public:
    InstanceSpace(const TypePresentation& base, const std::vector<OperatorLaw>& laws, const RewriteOptions& opt)
        : base_(base), laws_(laws), opt_(opt) {}

    // Adds every instance whose per-symbol totals stay within the bounds.
    void extend(const std::vector<std::size_t>& bounds) {
        std::vector<std::array<Word, 4>> slots{{}};  // x, y, z, wrap
        for (std::size_t s = 0; s < laws_.size(); ++s) {
            std::vector<std::array<Word, 4>> next;
            for (const auto& base : slots)
                for (std::size_t a = 0; a <= bounds[s]; ++a)
                    for (std::size_t b = 0; a + b <= bounds[s]; ++b)
                        for (std::size_t c = 0; a + b + c <= bounds[s]; ++c)
                            for (std::size_t d = 0; a + b + c + d <= bounds[s]; ++d) {
                                auto w = base;
                                w[0][s] = a;
                                w[1][s] = b;
                                w[2][s] = c;
                                w[3][s] = d;
                                next.push_back(w);
                            }
            slots = std::move(next);
        }
        for (std::size_t k = 0; k < base_.relations().size(); ++k)
            for (const auto& w : slots) {
                Instance inst{k, w[0], w[1], w[2], w[3]};
                std::string key = std::to_string(k) + "/" + word_key(w[0]) + "/" + word_key(w[1]) + "/" +
                                  word_key(w[2]) + "/" + word_key(w[3]);
                if (!seen_.insert(key).second) continue;
                std::size_t total = 0;
                for (const auto& x : w) total += word_length(x);
                if (total > opt_.nesting_cap) continue;
                add(inst);
            }
    }

    std::size_t size() const { return instances_.size(); }
    const Instance& instance(std::size_t i) const { return instances_[i]; }

    // Coefficients over the instances reproducing c, if c lies in the span.
    std::optional<SparseVec> solve(const Combination& c) {
        SparseVec v;
        for (const auto& [k, tc] : c.terms()) {
            auto it = cols_.find(k);
            if (it == cols_.end()) return std::nullopt;
            v.emplace_back(it->second, tc.second);
        }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseVec origin;
        while (!v.empty()) {
            auto it = rows_.find(v.front().first);
            if (it == rows_.end()) return std::nullopt;
            Scalar f = v.front().second / it->second.v.front().second;
            axpy(v, f, it->second.v);
            axpy(origin, -f, it->second.origin);
        }
        return origin;
    }

private:
    struct Row {
        SparseVec v;
        SparseVec origin;
    };

    void add(const Instance& inst) {
        Combination c = normalize(instance_combination(base_, inst, opt_.nesting_cap), laws_, opt_);
        const auto id = static_cast<std::uint32_t>(instances_.size());
        instances_.push_back(inst);
        if (c.empty()) return;
        SparseVec v;
        for (const auto& [k, tc] : c.terms()) {
            auto [it, fresh] = cols_.try_emplace(k, static_cast<std::uint32_t>(cols_.size()));
            v.emplace_back(it->second, tc.second);
        }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseVec origin{{id, Scalar(1)}};
        while (!v.empty()) {
            auto it = rows_.find(v.front().first);
            if (it == rows_.end()) break;
            Scalar f = v.front().second / it->second.v.front().second;
            axpy(v, f, it->second.v);
            axpy(origin, f, it->second.origin);
        }
        if (v.empty()) return;
        const std::uint32_t lead = v.front().first;
        rows_.emplace(lead, Row{std::move(v), std::move(origin)});
    }

    const TypePresentation& base_;
    const std::vector<OperatorLaw>& laws_;
    RewriteOptions opt_;
    std::vector<Instance> instances_;
    std::set<std::string> seen_;
    std::unordered_map<std::string, std::uint32_t> cols_;
    std::map<std::uint32_t, Row> rows_;
};

void symbol_counts(const TermPtr& t, std::vector<std::size_t>& acc) {
    for (std::size_t s = 0; s < acc.size(); ++s) acc[s] += t->word()[s];
    if (!t->is_leaf()) {
        symbol_counts(t->left(), acc);
        symbol_counts(t->right(), acc);
    }
}

std::vector<std::string> symbol_names(const std::vector<OperatorLaw>& laws) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < laws.size(); ++i) {
        std::string base = laws[i].kind == LawKind::nijenhuis ? "N" : "P";
        out.push_back(laws.size() == 1 ? base : base + std::to_string(i + 1));
    }
    return out;
}

std::string laws_text(const std::vector<OperatorLaw>& laws) {
    if (laws.size() == 1) return laws[0].str();
    std::string out = "[";
    for (std::size_t i = 0; i < laws.size(); ++i) out += (i ? ", " : "") + laws[i].str();
    return out + "]";
}

VerificationReport verify_levels(const TypePresentation& t, std::vector<Level> levels,
                                 const std::vector<OperatorLaw>& laws, const std::string& law_name,
                                 const VerifyOptions& opt) {
    if (!validate(t).valid) throw MathError("type '" + t.name() + "' does not validate");
    TypePresentation product = t;
    for (const auto& lv : levels) product = square(product, lv.factor);

    VerificationReport rep;
    rep.type = t.name();
    rep.law = law_name;
    rep.product = product.name();
    rep.generators = t.generators();
    rep.symbols = symbol_names(laws);

    Expander ex(std::move(levels), opt.rewrite.nesting_cap);
    std::vector<std::size_t> bounds(laws.size(), 0);
    for (std::size_t i = 0; i < product.relations().size(); ++i) {
        RelationVerdict v;
        v.index = i;
        v.residual = normalize(ex.relation(product.relations()[i]), laws, opt.rewrite);
        for (const auto& [k, tc] : v.residual.terms()) {
            std::vector<std::size_t> acc(laws.size(), 0);
            symbol_counts(tc.first, acc);
            for (std::size_t s = 0; s < acc.size(); ++s) bounds[s] = std::max(bounds[s], acc[s]);
        }
        rep.relations.push_back(std::move(v));
    }

    InstanceSpace space(t, laws, opt.rewrite);
    space.extend(bounds);
    bool escalated = false;
    for (auto& v : rep.relations) {
        if (v.residual.empty()) {
            v.verified = true;
            v.certificate_checked = true;
            continue;
        }
        auto sol = space.solve(v.residual);
        if (!sol && !escalated) {
            // one more operator of each kind before giving up
            escalated = true;
            for (auto& b : bounds) ++b;
            space.extend(bounds);
            sol = space.solve(v.residual);
        }
        if (!sol) continue;
        v.verified = true;
        for (const auto& [id, c] : *sol) v.certificate.push_back({space.instance(id), c});
        if (opt.certificates) {
            Combination back;
            for (const auto& e : v.certificate)
                back.add(normalize(instance_combination(t, e.instance, opt.rewrite.nesting_cap), laws, opt.rewrite),
                         e.coefficient);
            v.certificate_checked = back == v.residual;
            v.verified = v.certificate_checked;
        }
    }
    rep.instances = space.size();
    return rep;
}

std::vector<Level> law_levels(const std::vector<OperatorLaw>& laws) {
    std::vector<Level> levels;
    for (std::size_t s = 0; s < laws.size(); ++s) {
        TypePresentation f = catalog_get(predicted_factor(laws[s].kind));
        Templates tpl = law_templates(laws[s], f);
        levels.push_back({std::move(f), std::move(tpl), s});
    }
    return levels;
}

}  // namespace

Combination instance_combination(const TypePresentation& base, const Instance& inst, std::size_t nesting_cap) {
    const RelationElement& r = base.relations().at(inst.relation);
    Combination x = leaf('x', inst.x), y = leaf('y', inst.y), z = leaf('z', inst.z);
    Combination out;
    const std::size_t m = r.dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (!r.left(i, j).is_zero()) out.add(prim(j, prim(i, x, y), z), r.left(i, j));
            if (!r.right(i, j).is_zero()) out.add(prim(i, x, prim(j, y, z)), -r.right(i, j));
        }
    return wrap_root(out, inst.wrap, nesting_cap);
}

bool VerificationReport::ok() const {
    return std::all_of(relations.begin(), relations.end(), [](const RelationVerdict& v) { return v.verified; });
}

std::size_t VerificationReport::verified_count() const {
    return std::count_if(relations.begin(), relations.end(), [](const RelationVerdict& v) { return v.verified; });
}

std::string VerificationReport::to_json() const {
    ojson j;
    j["type"] = type;
    j["law"] = law;
    j["product"] = product;
    j["instances"] = instances;
    ojson rels = ojson::array();
    for (const auto& v : relations) {
        ojson r;
        r["index"] = v.index;
        r["verdict"] = v.verified ? "verified" : "failed";
        if (v.verified) {
            ojson cert = ojson::array();
            for (const auto& e : v.certificate) {
                ojson c;
                c["relation"] = e.instance.relation;
                c["x"] = word_text(e.instance.x, symbols);
                c["y"] = word_text(e.instance.y, symbols);
                c["z"] = word_text(e.instance.z, symbols);
                c["wrap"] = word_text(e.instance.wrap, symbols);
                c["coefficient"] = e.coefficient.str();
                cert.push_back(c);
            }
            r["certificate"] = cert;
        } else {
            r["residual"] = v.residual.str(generators, symbols);
        }
        rels.push_back(r);
    }
    j["relations"] = rels;
    return j.dump(2);
}

VerificationReport verify_operator_theorem(const TypePresentation& t, const OperatorLaw& law,
                                           const VerifyOptions& opt) {
    std::vector<OperatorLaw> laws{law};
    return verify_levels(t, law_levels(laws), laws, law.str(), opt);
}

VerificationReport verify_commuting_family(const TypePresentation& t, const std::vector<OperatorLaw>& laws,
                                           const VerifyOptions& opt) {
    if (laws.empty()) throw MathError("empty operator family");
    if (laws.size() > 3) throw BudgetError("operator families are limited to three operators");
    return verify_levels(t, law_levels(laws), laws, laws_text(laws), opt);
}

std::vector<Combination> expanded_relations(const TypePresentation& t, const std::vector<OperatorLaw>& laws) {
    std::vector<Level> levels = law_levels(laws);
    TypePresentation product = t;
    for (const auto& lv : levels) product = square(product, lv.factor);
    Expander ex(std::move(levels), RewriteOptions{}.nesting_cap);
    std::vector<Combination> out;
    for (const auto& r : product.relations()) out.push_back(ex.relation(r));
    return out;
}

std::optional<std::vector<CertificateEntry>> instance_certificate(const TypePresentation& t,
                                                                  const std::vector<OperatorLaw>& laws,
                                                                  const Combination& c, const VerifyOptions& opt) {
    std::vector<std::size_t> bounds(laws.size(), 0);
    for (const auto& [k, tc] : c.terms()) {
        std::vector<std::size_t> acc(laws.size(), 0);
        symbol_counts(tc.first, acc);
        for (std::size_t s = 0; s < acc.size(); ++s) bounds[s] = std::max(bounds[s], acc[s] + 1);
    }
    InstanceSpace space(t, laws, opt.rewrite);
    space.extend(bounds);
    auto sol = space.solve(c);
    if (!sol) return std::nullopt;
    std::vector<CertificateEntry> out;
    for (const auto& [id, coef] : *sol) out.push_back({space.instance(id), coef});
    return out;
}

// ---------------------------------------------------------------- lemmas

bool LemmaReport::ok() const {
    return std::all_of(items.begin(), items.end(), [](const LemmaItem& i) { return i.ok; });
}

std::string LemmaReport::to_json() const {
    ojson j = ojson::array();
    for (const auto& i : items) j.push_back({{"name", i.name}, {"ok", i.ok}, {"detail", i.detail}});
    return j.dump(2);
}

LemmaReport verify_operator_lemmas(const VerifyOptions& opt) {
    LemmaReport rep;
    const std::vector<std::string> gens{"."};
    const Scalar l = Scalar::weight();
    const std::size_t cap = opt.rewrite.nesting_cap;
    Combination x = leaf('x'), y = leaf('y');

    {
        // Pt = -l id - P
        std::vector<OperatorLaw> laws{OperatorLaw{LawKind::rb, std::nullopt}};
        auto pt = [&](const Combination& c) {
            Combination out = c.scaled(-l);
            out.add(apply_operator(c, 0, cap), Scalar(-1));
            return out;
        };
        Combination inner = prim(0, pt(x), y);
        inner.add(prim(0, x, pt(y)));
        inner.add(prim(0, x, y), l);
        Combination diff = prim(0, pt(x), pt(y));
        diff.add(pt(inner), Scalar(-1));
        Combination res = normalize(diff, laws, opt.rewrite);
        rep.items.push_back({"rota_baxter_complement", res.empty(), "residual " + res.str(gens, {"P"})});
    }
    {
        // Nt = id - N
        std::vector<OperatorLaw> laws{OperatorLaw{LawKind::nijenhuis, std::nullopt}};
        auto nt = [&](const Combination& c) {
            Combination out = c;
            out.add(apply_operator(c, 0, cap), Scalar(-1));
            return out;
        };
        Combination inner = prim(0, nt(x), y);
        inner.add(prim(0, x, nt(y)));
        inner.add(nt(prim(0, x, y)), Scalar(-1));
        Combination diff = prim(0, nt(x), nt(y));
        diff.add(nt(inner), Scalar(-1));
        Combination res = normalize(diff, laws, opt.rewrite);
        rep.items.push_back({"nijenhuis_complement", res.empty(), "residual " + res.str(gens, {"N"})});
    }
    for (const char* name : {"associative", "trialgebra"}) {
        std::vector<OperatorLaw> laws{OperatorLaw{LawKind::rb, std::nullopt}};
        TypePresentation d = catalog_get("dendriform");
        Templates tpl(2);
        tpl[d.index_of("lt")] = {TemplateTerm{Scalar(1), false, true, false}};
        tpl[d.index_of("gt")] = {TemplateTerm{l, false, false, false}, TemplateTerm{Scalar(1), true, false, false}};
        std::vector<Level> levels{{d, tpl, 0}};
        VerificationReport v = verify_levels(catalog_get(name), std::move(levels), laws, "closing", opt);
        rep.items.push_back({std::string("closing_") + name, v.ok(),
                             std::to_string(v.verified_count()) + "/" + std::to_string(v.relations.size()) +
                                 " relations of " + v.product});
    }
    return rep;
}

}  // namespace bqr
