#include "bqr/bqr.h"

#include "bqr/catalog.hpp"
#include "bqr/dsl.hpp"
#include "bqr/duality.hpp"
#include "bqr/operatorver.hpp"
#include "bqr/products.hpp"
#include "bqr/suite.hpp"

#include "json.hpp"

#include <cstring>
#include <fstream>
#include <sstream>

using namespace bqr;
using ojson = nlohmann::ordered_json;

struct bqr_type {
    TypePresentation t;
};

struct bqr_morphism {
    TypeMorphism f;
};

namespace {

thread_local std::string last_error;

struct Failure {
    int code;
    std::string message;
};

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
int guard(F&& body) {
    last_error.clear();
    try {
        return body();
    } catch (const Failure& e) {
        last_error = e.message;
        return e.code;
    } catch (const DslError& e) {
        last_error = "line " + std::to_string(e.span().line) + ", column " + std::to_string(e.span().column) + ": " +
                     e.message();
        return BQR_EINVAL;
    } catch (const BudgetError& e) {
        last_error = e.what();
        return BQR_EBUDGET;
    } catch (const MathError& e) {
        last_error = e.what();
        return BQR_EINVAL;
    } catch (const nlohmann::json::exception& e) {
        last_error = std::string("json: ") + e.what();
        return BQR_EINVAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return BQR_EINTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return BQR_EINTERNAL;
    }
}

void need(const void* p, const char* what) {
    if (!p) throw Failure{BQR_EINVAL, std::string(what) + " is null"};
}

int emit(char** out, const std::string& text, bool verdict = true) {
    need(out, "output pointer");
    *out = dup(text);
    return verdict ? BQR_OK : BQR_FALSE;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

TypePresentation parse_text(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return type_from_json(text);
    return parse_type(text).type;
}

std::string matrix_text(const Matrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out += "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? " " : "") + m(i, j).str();
    }
    return out + "]";
}

std::string show_text(const TypePresentation& t, bool basis) {
    std::ostringstream os;
    os << "type " << t.name() << "\n";
    os << "generators: " << t.dim() << " (";
    for (std::size_t i = 0; i < t.dim(); ++i) os << (i ? ", " : "") << t.generators()[i];
    os << ")\n";
    os << "star: " << (t.star() ? combination_text(t, *t.star()) : std::string("none")) << "\n";
    for (const auto& a : t.aux()) os << "aux " << a.name << " = " << combination_text(t, a.coeffs) << "\n";
    os << "relations: " << t.relations().size() << "\n";
    for (std::size_t i = 0; i < t.relations().size(); ++i) {
        const auto& r = t.relations()[i];
        os << "  " << i + 1 << "  " << relation_text(t, r) << "\n";
        if (basis) os << "     L = " << matrix_text(r.left) << "\n     R = " << matrix_text(r.right) << "\n";
    }
    if (catalog_has(t.name())) os << "provenance: " << catalog_provenance(t.name()) << "\n";
    return os.str();
}

std::string show_json(const TypePresentation& t, bool basis) {
    ojson j = ojson::parse(serialize(t, Format::json));
    if (!basis) {
        ojson rel = ojson::array();
        for (const auto& r : t.relations()) rel.push_back(relation_text(t, r));
        j["relations"] = rel;
    }
    return j.dump(2) + "\n";
}

bqr_budget defaults(const bqr_budget* b) {
    bqr_budget out{0, 0};
    if (b) out = *b;
    return out;
}

VerifyOptions verify_options(const bqr_budget* b) {
    VerifyOptions opt;
    bqr_budget bb = defaults(b);
    if (bb.nesting_cap) opt.rewrite.nesting_cap = bb.nesting_cap;
    if (bb.steps) opt.rewrite.step_guard = bb.steps;
    return opt;
}

std::string report_text(const VerificationReport& r) {
    std::ostringstream os;
    os << r.type << " " << r.law << " -> " << r.product << ": " << r.verified_count() << "/" << r.relations.size()
       << " relations verified (" << r.instances << " relation instances)\n";
    for (const auto& v : r.relations) {
        os << "  relation " << v.index + 1 << ": ";
        if (!v.verified) {
            os << "FAILED, residual " << v.residual.str(r.generators, r.symbols) << "\n";
        } else if (v.residual.empty()) {
            os << "verified, residual 0\n";
        } else {
            os << "verified, certificate of " << v.certificate.size() << " instance"
               << (v.certificate.size() == 1 ? "" : "s") << "\n";
        }
    }
    return os.str();
}

std::vector<std::string> split_laws(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string perm_text(const TypePresentation& t, const SignedPermutation& p) {
    std::string out;
    for (std::size_t i = 0; i < p.image.size(); ++i) {
        if (i) out += ", ";
        out += t.generators()[i] + " -> " + (p.sign[i] < 0 ? "-" : "") + t.generators()[p.image[i]];
    }
    if (p.reverses) out += "  (reversing)";
    return out;
}

}  // namespace

extern "C" {

const char* bqr_version(void) { return "1.0.0"; }

const char* bqr_last_error(void) { return last_error.c_str(); }

void bqr_string_free(char* s) { std::free(s); }

int bqr_catalog_list(unsigned flags, char** out) {
    return guard([&] {
        if (flags & BQR_JSON) {
            ojson a = ojson::array();
            for (const auto& n : catalog_names()) {
                TypePresentation t = catalog_get(n);
                a.push_back({{"name", n},
                             {"generators", t.dim()},
                             {"relations", t.relations().size()},
                             {"provenance", catalog_provenance(n)}});
            }
            return emit(out, a.dump(2) + "\n");
        }
        std::ostringstream os;
        for (const auto& n : catalog_names()) {
            TypePresentation t = catalog_get(n);
            os << n << "  " << t.dim() << " generators, " << t.relations().size() << " relations  "
               << catalog_provenance(n) << "\n";
        }
        return emit(out, os.str());
    });
}

int bqr_type_load(const char* name_or_path, bqr_type** out) {
    return guard([&] {
        need(name_or_path, "name");
        need(out, "output pointer");
        std::string name(name_or_path);
        if (catalog_has(name)) {
            *out = new bqr_type{catalog_get(name)};
            return BQR_OK;
        }
        std::ifstream in(name, std::ios::binary);
        if (!in) throw Failure{BQR_EINVAL, "'" + name + "' is neither a catalog name nor a readable file"};
        std::stringstream ss;
        ss << in.rdbuf();
        *out = new bqr_type{parse_text(ss.str())};
        return BQR_OK;
    });
}

int bqr_type_parse(const char* text, bqr_type** out) {
    return guard([&] {
        need(text, "text");
        need(out, "output pointer");
        *out = new bqr_type{parse_text(text)};
        return BQR_OK;
    });
}

void bqr_type_free(bqr_type* t) { delete t; }

int bqr_type_name(const bqr_type* t, char** out) {
    return guard([&] {
        need(t, "type");
        return emit(out, t->t.name());
    });
}

int bqr_type_dim(const bqr_type* t, size_t* out) {
    return guard([&] {
        need(t, "type");
        need(out, "output pointer");
        *out = t->t.dim();
        return BQR_OK;
    });
}

int bqr_type_relation_count(const bqr_type* t, size_t* out) {
    return guard([&] {
        need(t, "type");
        need(out, "output pointer");
        *out = t->t.relations().size();
        return BQR_OK;
    });
}

int bqr_type_show(const bqr_type* t, unsigned flags, char** out) {
    return guard([&] {
        need(t, "type");
        bool basis = flags & BQR_RELATION_BASIS;
        return emit(out, (flags & BQR_JSON) ? show_json(t->t, basis) : show_text(t->t, basis));
    });
}

int bqr_type_validate(const bqr_type* t, unsigned flags, char** out) {
    return guard([&] {
        need(t, "type");
        ValidationReport v = validate(t->t);
        if (flags & BQR_JSON) {
            ojson j{{"name", t->t.name()},
                    {"valid", v.valid},
                    {"relations", v.relation_count},
                    {"rank", v.relation_rank},
                    {"independent", v.independent},
                    {"star_present", v.star_present},
                    {"star_associative", v.star_associative},
                    {"star_unresolved", v.star_unresolved},
                    {"notes", v.notes}};
            return emit(out, j.dump(2) + "\n", v.valid);
        }
        std::ostringstream os;
        os << t->t.name() << ": " << (v.valid ? "valid" : "INVALID") << "\n";
        os << "relations: " << v.relation_count << ", rank " << v.relation_rank
           << (v.independent ? ", independent" : ", dependent") << "\n";
        if (v.star_unresolved)
            os << "star: unresolved (dual presentation)\n";
        else
            os << "star: " << (v.star_present ? "present" : "missing")
               << (v.star_present ? (v.star_associative ? ", associative" : ", not associative") : "") << "\n";
        for (const auto& n : v.notes) os << "note: " << n << "\n";
        return emit(out, os.str(), v.valid);
    });
}

int bqr_type_export(const bqr_type* t, const char* format, char** out) {
    return guard([&] {
        need(t, "type");
        need(format, "format");
        std::string f(format);
        Format fmt;
        if (f == "dsl") fmt = Format::dsl;
        else if (f == "json") fmt = Format::json;
        else if (f == "latex") fmt = Format::latex;
        else throw Failure{BQR_EINVAL, "unknown format '" + f + "' (dsl, json, latex)"};
        return emit(out, serialize(t->t, fmt));
    });
}

int bqr_square(const bqr_type* a, const bqr_type* b, bqr_type** out) {
    return guard([&] {
        need(a, "type");
        need(b, "type");
        need(out, "output pointer");
        *out = new bqr_type{square(a->t, b->t)};
        return BQR_OK;
    });
}

int bqr_maltese(const bqr_type* a, const bqr_type* b, bqr_type** out) {
    return guard([&] {
        need(a, "type");
        need(b, "type");
        need(out, "output pointer");
        *out = new bqr_type{maltese(a->t, b->t)};
        return BQR_OK;
    });
}

int bqr_power(const bqr_type* t, int n, bqr_type** out) {
    return guard([&] {
        need(t, "type");
        need(out, "output pointer");
        *out = new bqr_type{power(t->t, n)};
        return BQR_OK;
    });
}

int bqr_dual(const bqr_type* t, bqr_type** out) {
    return guard([&] {
        need(t, "type");
        need(out, "output pointer");
        *out = new bqr_type{dual(t->t)};
        return BQR_OK;
    });
}

int bqr_double_dual(const bqr_type* t, unsigned flags, char** out) {
    return guard([&] {
        need(t, "type");
        bool ok = double_dual_check(t->t);
        if (flags & BQR_JSON) return emit(out, ojson{{"type", t->t.name()}, {"double_dual_equal", ok}}.dump(2) + "\n", ok);
        return emit(out, "double dual of " + t->t.name() + ": " + (ok ? "equal" : "DIFFERS") + "\n", ok);
    });
}

int bqr_arity3(const bqr_type* t, unsigned flags, char** out) {
    return guard([&] {
        need(t, "type");
        long d = arity3_dimension(t->t);
        std::size_t m = t->t.dim(), r = t->t.relation_space().dim();
        if (flags & BQR_JSON)
            return emit(out, ojson{{"type", t->t.name()}, {"arity3_dimension", d}}.dump(2) + "\n");
        return emit(out, "arity 3 dimension of " + t->t.name() + ": " + std::to_string(d) + " (2*" +
                             std::to_string(m) + "^2 - " + std::to_string(r) + ")\n");
    });
}

int bqr_auto_group(const bqr_type* t, unsigned flags, char** out) {
    return guard([&] {
        need(t, "type");
        AutomorphismOptions opt;
        opt.include_reversal = flags & BQR_REVERSAL;
        AutomorphismGroup g = monomial_automorphisms(t->t, opt);
        if (flags & BQR_JSON) {
            ojson els = ojson::array();
            for (const auto& p : g.elements)
                els.push_back({{"image", p.image}, {"sign", p.sign}, {"reverses", p.reverses}});
            ojson j{{"type", t->t.name()},
                    {"order", g.order()},
                    {"closed", g.closed},
                    {"candidates", g.candidates_examined},
                    {"elements", els}};
            return emit(out, j.dump(2) + "\n");
        }
        std::ostringstream os;
        os << "monomial " << (opt.include_reversal ? "(anti-)" : "") << "automorphisms of " << t->t.name()
           << ": order " << g.order() << (g.closed ? ", closed" : ", NOT closed") << "\n";
        for (const auto& p : g.elements) os << "  " << perm_text(t->t, p) << "\n";
        return emit(out, os.str());
    });
}

int bqr_tensor_model(const bqr_type* a, const bqr_type* b, unsigned flags, char** out) {
    return guard([&] {
        need(a, "type");
        need(b, "type");
        TensorModelReport r = verify_tensor_model(a->t, b->t);
        if (flags & BQR_JSON) {
            ojson j{{"left", a->t.name()},
                    {"right", b->t.name()},
                    {"relations", r.relations},
                    {"factored", r.factored},
                    {"failures", r.failures},
                    {"ok", r.ok()}};
            return emit(out, j.dump(2) + "\n", r.ok());
        }
        std::ostringstream os;
        os << "tensor model " << a->t.name() << " x " << b->t.name() << ": " << r.factored << "/" << r.relations
           << " relations vanish on elementary tensors\n";
        for (auto f : r.failures) os << "  relation " << f + 1 << " does not\n";
        return emit(out, os.str(), r.ok());
    });
}

int bqr_morphism_parse(const char* json, const bqr_type* source, const bqr_type* target, bqr_morphism** out) {
    return guard([&] {
        need(json, "json");
        need(source, "source");
        need(target, "target");
        need(out, "output pointer");
        ojson j = ojson::parse(json);
        for (const char* side : {"source", "target"}) {
            const auto& want = std::strcmp(side, "source") == 0 ? source->t.name() : target->t.name();
            if (j.contains(side) && j[side].get<std::string>() != want)
                throw Failure{BQR_EINVAL, std::string("map ") + side + " '" + j[side].get<std::string>() +
                                              "' does not match '" + want + "'"};
        }
        std::vector<std::vector<Scalar>> rows;
        for (const auto& r : j.at("matrix")) {
            rows.emplace_back();
            for (const auto& e : r) rows.back().push_back(Scalar::parse(e.get<std::string>()));
        }
        if (rows.empty()) throw Failure{BQR_EINVAL, "empty matrix"};
        for (const auto& r : rows)
            if (r.size() != rows.front().size()) throw Failure{BQR_EINVAL, "ragged matrix"};
        Matrix m = Matrix::from_rows(rows, rows.front().size());
        *out = new bqr_morphism{TypeMorphism(source->t, target->t, m)};
        return BQR_OK;
    });
}

void bqr_morphism_free(bqr_morphism* f) { delete f; }

int bqr_morphism_check(const bqr_morphism* f, unsigned flags, char** out) {
    return guard([&] {
        need(f, "morphism");
        bool mor = check_morphism(f->f);
        bool iso = mor && check_isomorphism(f->f);
        if (flags & BQR_JSON) {
            ojson j{{"source", f->f.source().name()}, {"target", f->f.target().name()}, {"morphism", mor},
                    {"isomorphism", iso}};
            return emit(out, j.dump(2) + "\n", mor);
        }
        return emit(out,
                    f->f.source().name() + " -> " + f->f.target().name() + ": morphism " + yes_no(mor) +
                        ", isomorphism " + yes_no(iso) + "\n",
                    mor);
    });
}

int bqr_verify_operator(const bqr_type* t, const char* law, const char* weight, const bqr_budget* budget,
                        unsigned flags, char** out) {
    return guard([&] {
        need(t, "type");
        need(law, "law");
        OperatorLaw l = parse_law(law, weight ? weight : "formal");
        VerificationReport r = verify_operator_theorem(t->t, l, verify_options(budget));
        return emit(out, (flags & BQR_JSON) ? r.to_json() + "\n" : report_text(r), r.ok());
    });
}

int bqr_verify_family(const bqr_type* t, const char* laws, const char* weight, const bqr_budget* budget,
                      unsigned flags, char** out) {
    return guard([&] {
        need(t, "type");
        need(laws, "laws");
        std::vector<OperatorLaw> ls;
        for (const auto& n : split_laws(laws)) ls.push_back(parse_law(n, weight ? weight : "formal"));
        VerificationReport r = verify_commuting_family(t->t, ls, verify_options(budget));
        return emit(out, (flags & BQR_JSON) ? r.to_json() + "\n" : report_text(r), r.ok());
    });
}

int bqr_verify_lemmas(const bqr_budget* budget, unsigned flags, char** out) {
    return guard([&] {
        LemmaReport r = verify_operator_lemmas(verify_options(budget));
        if (flags & BQR_JSON) return emit(out, r.to_json() + "\n", r.ok());
        std::ostringstream os;
        for (const auto& i : r.items) os << i.name << ": " << (i.ok ? "verified" : "FAILED") << " (" << i.detail << ")\n";
        return emit(out, os.str(), r.ok());
    });
}

int bqr_non_duality(unsigned flags, char** out) {
    return guard([&] {
        TypePresentation d = catalog_get("dendriform");
        NonDualityReport r = non_duality_witness(d);
        TypePresentation q = square(d, d);
        TypePresentation dd = dual(d);
        TypePresentation x = maltese(dd, dd);
        bool ok = !r.inclusion_holds && r.pairing == Scalar(-1);
        if (flags & BQR_JSON) {
            ojson j{{"primal", relation_text(q, r.primal)},
                    {"witness", relation_text(x, r.witness)},
                    {"pairing", r.pairing.str()},
                    {"dual_square_dim", r.aq_dim},
                    {"maltese_dim", r.maltese_dim},
                    {"witness_in_maltese", r.witness_in_maltese},
                    {"witness_in_dual_square", r.witness_in_aq},
                    {"inclusion_holds", r.inclusion_holds}};
            return emit(out, j.dump(2) + "\n", ok);
        }
        std::ostringstream os;
        os << "primal relation of " << q.name() << ": " << relation_text(q, r.primal) << "\n";
        os << "witness in the maltese product of the duals: " << relation_text(x, r.witness) << "\n";
        os << "pairing: " << r.pairing.str() << "\n";
        os << "dim dual(square) = " << r.aq_dim << ", dim maltese(dual, dual) = " << r.maltese_dim << "\n";
        os << "maltese(dual D, dual D) contained in dual(square(D, D)): " << yes_no(r.inclusion_holds) << "\n";
        return emit(out, os.str(), ok);
    });
}

int bqr_paper_suite(unsigned flags, char** out) {
    return guard([&] {
        std::vector<SuiteCheck> checks = run_paper_suite();
        bool all = true;
        std::vector<std::string> failed;
        for (const auto& c : checks)
            if (!c.pass) {
                all = false;
                failed.push_back(c.name);
            }
        if (flags & BQR_JSON) {
            ojson a = ojson::array();
            for (const auto& c : checks)
                a.push_back({{"index", c.index}, {"name", c.name}, {"pass", c.pass}, {"details", c.details}});
            return emit(out, ojson{{"checks", a}, {"pass", all}}.dump(2) + "\n", all);
        }
        std::ostringstream os;
        for (const auto& c : checks) {
            os << "[" << c.index << "] " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << "\n";
            for (const auto& d : c.details) os << "    " << d << "\n";
        }
        std::size_t passed = checks.size() - failed.size();
        os << "paper-suite: " << passed << "/" << checks.size() << " checks passed";
        for (std::size_t i = 0; i < failed.size(); ++i) os << (i ? ", " : "; failed: ") << failed[i];
        os << "\n";
        return emit(out, os.str(), all);
    });
}

}  // extern "C"
