#include "bqr/catalog.hpp"

#include "bqr/dsl.hpp"
#include "bqr/duality.hpp"
#include "bqr/products.hpp"

#include <functional>
#include <map>

namespace bqr {

// generated from data/literature at configure time
std::string literature_source(const std::string& name);

namespace {

struct Entry {
    std::string name;
    std::string provenance;
    std::size_t relations;
    std::string source;                           // DSL text for base entries
    std::function<TypePresentation()> recipe;     // otherwise
};

const char* kAssociative = R"(type associative {
  generators: m;
  star: m;
  relations: (m.m | m.m)
})";

const char* kDendriform = R"(type dendriform {
  generators: lt, gt;
  star: lt + gt;
  relations:
    (lt.lt | lt.(lt + gt))
    (gt.lt | gt.lt)
    ((lt + gt).gt | gt.gt)
})";

const char* kTrialgebra = R"(type trialgebra {
  generators: lt, gt, cir;
  aux: st = lt + gt + cir;
  star: st;
  relations:
    (lt.lt | lt.st)
    (gt.lt | gt.lt)
    (st.gt | gt.gt)
    (gt.cir | gt.cir)
    (lt.cir | cir.gt)
    (cir.lt | cir.lt)
    (cir.cir | cir.cir)
})";

const char* kNs = R"(type ns {
  generators: lt, gt, bul;
  aux: st = lt + gt + bul;
  star: st;
  relations:
    (lt.lt | lt.st)
    (gt.lt | gt.lt)
    (st.gt | gt.gt)
    (st.bul + bul.lt | gt.bul + bul.st)
})";

const char* kDipterous = R"(type dipterous {
  generators: st, gt;
  star: st;
  relations:
    (st.st | st.st)
    (st.gt | gt.gt)
    (gt.st | gt.st)
})";

const char* kAntiDipterous = R"(type anti_dipterous {
  generators: st, lt;
  star: st;
  relations:
    (st.st | st.st)
    (lt.lt | lt.st)
    (st.lt | st.lt)
})";

// nine identities read row by row from the 3 x 3 array
const char* kQuadriLit = R"(type quadri_lit {
  generators: ne, nw, se, sw;
  aux: wedge = ne + nw,
       vee = se + sw,
       lt = nw + sw,
       gt = ne + se,
       star = wedge + vee;
  star: star;
  relations:
    (nw.nw | nw.star)
    (ne.nw | ne.lt)
    (wedge.ne | ne.gt)
    (sw.nw | sw.wedge)
    (se.nw | se.nw)
    (vee.ne | se.ne)
    (lt.sw | sw.vee)
    (gt.sw | se.sw)
    (star.se | se.se)
})";

const char* kAssocDialgebra = R"(type assoc_dialgebra {
  generators: lv, rv;
  star: lv;
  relations:
    (lv.lv | lv.lv)
    (rv.rv | rv.rv)
    (lv.lv | lv.rv)
    (rv.lv | rv.lv)
    (lv.rv | rv.rv)
})";

// Two misprints of the printed list are corrected here (see README).
const char* kAssocNijenhuisTri = R"(type assoc_nijenhuis_tri {
  generators: lv, rv, cir;
  star: cir;
  relations:
    (lv.lv | lv.lv)
    (lv.lv | lv.rv)
    (lv.lv | lv.cir)
    (rv.lv | rv.lv)
    (rv.rv | rv.rv)
    (lv.rv | rv.rv)
    (cir.rv | rv.rv)
    (lv.cir | rv.cir)
    (rv.cir | rv.cir)
    (cir.cir | rv.cir)
    (cir.lv | rv.cir)
    (cir.lv | cir.lv)
    (cir.lv | cir.rv)
    (cir.lv | cir.cir)
})";

TypePresentation named(TypePresentation t, const std::string& name) {
    t.set_name(name);
    return t;
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> all = [] {
        auto get = [](const char* n) { return catalog_get(n); };
        std::vector<Entry> e;
        e.push_back({"associative", "associative algebra", 1, kAssociative, {}});
        e.push_back({"dendriform", "dendriform dialgebra (Loday)", 3, kDendriform, {}});
        e.push_back({"trialgebra", "dendriform trialgebra (Loday, Ronco)", 7, kTrialgebra, {}});
        e.push_back({"ns", "NS-algebra (Leroux)", 4, kNs, {}});
        e.push_back({"dipterous", "L-dipterous algebra (Loday, Ronco)", 3, kDipterous, {}});
        e.push_back({"anti_dipterous", "L-anti-dipterous algebra", 3, kAntiDipterous, {}});
        e.push_back({"quadri_lit", "quadri-algebra in its original operations (Aguiar, Loday)", 9, kQuadriLit, {}});
        e.push_back({"assoc_dialgebra", "associative dialgebra, dual of the dendriform dialgebra (Loday)", 5,
                     kAssocDialgebra, {}});
        e.push_back({"assoc_trialgebra", "associative trialgebra, dual of the dendriform trialgebra (Loday, Ronco)",
                     11, "", [get] { return named(dual(get("trialgebra")), "assoc_trialgebra"); }});
        e.push_back({"assoc_nijenhuis_tri", "associative Nijenhuis trialgebra, dual of the NS-algebra", 14,
                     kAssocNijenhuisTri, {}});
        e.push_back({"quadri", "quadri-algebra as dendriform x dendriform", 9, "",
                     [get] { return named(square(get("dendriform"), get("dendriform")), "quadri"); }});
        e.push_back({"ennea", "ennea-algebra (Leroux) as trialgebra x trialgebra", 49, "",
                     [get] { return named(square(get("trialgebra"), get("trialgebra")), "ennea"); }});
        e.push_back({"dendriform_nijenhuis", "dendriform-Nijenhuis algebra (Leroux) as trialgebra x NS", 28, "",
                     [get] { return named(square(get("trialgebra"), get("ns")), "dendriform_nijenhuis"); }});
        e.push_back({"octo", "octo-algebra (Leroux) as the third power of the dendriform dialgebra", 27, "",
                     [get] { return named(power(get("dendriform"), 3), "octo"); }});
        e.push_back({"m2", "M2 algebra (Leroux) as dipterous x dipterous", 9, "",
                     [get] { return named(square(get("dipterous"), get("dipterous")), "m2"); }});
        e.push_back({"m1", "M1 algebra (Leroux) as anti-dipterous x dipterous, identification unchecked", 9, "",
                     [get] { return named(square(get("anti_dipterous"), get("dipterous")), "m1"); }});
        e.push_back({"di_dipterous_anti", "di-dipterous-anti-dipterous algebra", 27, "", [get] {
                         return named(square(square(get("dendriform"), get("dipterous")), get("anti_dipterous")),
                                      "di_dipterous_anti");
                     }});
        return e;
    }();
    return all;
}

const Entry& find(const std::string& name) {
    for (const auto& e : entries())
        if (e.name == name) return e;
    std::string known;
    for (const auto& e : entries()) known += (known.empty() ? "" : ", ") + e.name;
    throw MathError("unknown type '" + name + "'; available: " + known);
}

}  // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& e : entries()) out.push_back(e.name);
    return out;
}

bool catalog_has(const std::string& name) {
    for (const auto& e : entries())
        if (e.name == name) return true;
    return false;
}

TypePresentation catalog_get(const std::string& name) {
    const Entry& e = find(name);
    if (e.recipe) return e.recipe();
    return parse_valid_type(e.source);
}

std::string catalog_provenance(const std::string& name) { return find(name).provenance; }
std::string catalog_source(const std::string& name) { return find(name).source; }
std::size_t catalog_expected_relations(const std::string& name) { return find(name).relations; }

// ------------------------------------------------------------ literature tables

std::vector<LiteratureTable> literature_tables() {
    std::vector<LiteratureTable> out;
    out.push_back({"quadri",
                   {"dendriform", "dendriform"},
                   {{"nw", "(lt|lt)"},
                    {"ne", "(lt|gt)"},
                    {"wedge", "(lt|*)"},
                    {"sw", "(gt|lt)"},
                    {"se", "(gt|gt)"},
                    {"vee", "(gt|*)"},
                    {"lt", "(*|lt)"},
                    {"gt", "(*|gt)"},
                    {"star", "(*|*)"}},
                   ""});
    out.push_back({"ennea",
                   {"trialgebra", "trialgebra"},
                   {{"nw", "(lt|lt)"},     {"up", "(lt|cir)"},     {"ne", "(lt|gt)"},     {"wedge", "(lt|*)"},
                    {"lt", "(cir|lt)"},    {"cir", "(cir|cir)"},   {"gt", "(cir|gt)"},    {"star", "(cir|*)"},
                    {"sw", "(gt|lt)"},     {"dn", "(gt|cir)"},     {"se", "(gt|gt)"},     {"vee", "(gt|*)"},
                    {"tri_l", "(*|lt)"},   {"cirbar", "(*|cir)"},  {"tri_r", "(*|gt)"},   {"starbar", "(*|*)"}},
                   ""});
    out.push_back({"dendriform_nijenhuis",
                   {"trialgebra", "ns"},
                   {{"nw", "(lt|lt)"},     {"up", "(lt|bul)"},     {"ne", "(lt|gt)"},     {"wedge", "(lt|*)"},
                    {"tlt", "(cir|lt)"},   {"tbul", "(cir|bul)"},  {"tgt", "(cir|gt)"},   {"tstar", "(cir|*)"},
                    {"sw", "(gt|lt)"},     {"dn", "(gt|bul)"},     {"se", "(gt|gt)"},     {"vee", "(gt|*)"},
                    {"tri_l", "(*|lt)"},   {"bulbar", "(*|bul)"},  {"tri_r", "(*|gt)"},   {"starbar", "(*|*)"}},
                   "the tilde-bullet row is printed as (bul|cir); read as (cir|bul)"});
    std::vector<std::pair<std::string, std::string>> octo;
    const std::pair<const char*, const char*> quad[] = {{"nw", "lt|lt"}, {"ne", "lt|gt"}, {"wedge", "lt|*"},
                                                        {"sw", "gt|lt"}, {"se", "gt|gt"}, {"vee", "gt|*"},
                                                        {"lt", "*|lt"},  {"gt", "*|gt"},  {"star", "*|*"}};
    const std::pair<const char*, const char*> blocks[] = {{"1", "lt"}, {"2", "gt"}, {"12", "*"}};
    for (const auto& [suffix, last] : blocks)
        for (const auto& [n, pair] : quad)
            octo.emplace_back(std::string(n) + suffix, "(" + std::string(pair) + "|" + last + ")");
    out.push_back({"octo", {"dendriform", "dendriform", "dendriform"}, octo, ""});
    out.push_back({"m2",
                   {"dipterous", "dipterous"},
                   {{"b1", "(gt|gt)"}, {"b2", "(gt|st)"}, {"b3", "(st|gt)"}, {"b4", "(st|st)"}},
                   ""});
    return out;
}

TypePresentation literature_type(const LiteratureTable& t) {
    if (t.product == "quadri") return catalog_get("quadri_lit");
    return parse_valid_type(literature_source(t.product));
}

Vector tuple_vector(const LiteratureTable& t, const std::string& tuple) {
    if (tuple.size() < 2 || tuple.front() != '(' || tuple.back() != ')')
        throw MathError("bad tuple '" + tuple + "'");
    std::vector<std::string> parts;
    std::string body = tuple.substr(1, tuple.size() - 2), cur;
    for (char c : body) {
        if (c == '|') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != t.factors.size()) throw MathError("tuple '" + tuple + "' has the wrong length");
    Vector acc{Scalar(1)};
    for (std::size_t k = 0; k < parts.size(); ++k) {
        TypePresentation f = catalog_get(t.factors[k]);
        Vector v(f.dim());
        if (parts[k] == "*") {
            for (auto& x : v) x = Scalar(1);
        } else {
            int i = f.index_of(parts[k]);
            if (i < 0) throw MathError("'" + parts[k] + "' is not a generator of " + t.factors[k]);
            v[i] = Scalar(1);
        }
        acc = kron(acc, v);
    }
    return acc;
}

TypeMorphism table_morphism(const LiteratureTable& t) {
    TypePresentation lit = literature_type(t);
    TypePresentation prod = catalog_get(t.product);
    std::vector<std::pair<std::string, Vector>> gens;
    for (const auto& [label, tuple] : t.rows)
        if (lit.index_of(label) >= 0) gens.emplace_back(label, tuple_vector(t, tuple));
    return morphism_from_table(lit, prod, gens);
}

std::vector<std::string> table_aux_mismatches(const LiteratureTable& t) {
    TypeMorphism f = table_morphism(t);
    std::map<std::string, std::string> rows(t.rows.begin(), t.rows.end());
    std::vector<std::string> bad;
    for (const auto& a : f.source().aux()) {
        auto it = rows.find(a.name);
        if (it == rows.end()) {
            bad.push_back(a.name + " has no table row");
            continue;
        }
        if (f.matrix().apply(a.coeffs) != tuple_vector(t, it->second)) bad.push_back(a.name);
    }
    return bad;
}

}  // namespace bqr
