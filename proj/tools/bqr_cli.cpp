// bqr: command-line front end over the C interface.

#include "bqr/bqr.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

enum Exit { ok = 0, check_failed = 1, usage = 2, internal = 3 };

int exit_code(int status) {
    switch (status) {
        case BQR_OK:
            return ok;
        case BQR_FALSE:
            return check_failed;
        case BQR_EINVAL:
            return usage;
        default:
            return internal;
    }
}

struct Error {
    int status;
};

void check(int status) {
    if (status >= BQR_EINVAL) throw Error{status};
}

using Type = std::unique_ptr<bqr_type, decltype(&bqr_type_free)>;

Type load(const std::string& name) {
    bqr_type* t = nullptr;
    check(bqr_type_load(name.c_str(), &t));
    return Type(t, bqr_type_free);
}

Type adopt(bqr_type* t) { return Type(t, bqr_type_free); }

// Prints a report string, returning the status it came with.
int print(int status, char*& text) {
    check(status);
    if (text) {
        std::fputs(text, stdout);
        bqr_string_free(text);
    }
    return status;
}

struct Globals {
    bool json = false;
    bool basis = false;
    std::size_t nesting_cap = 0;
    std::size_t steps = 0;

    unsigned flags() const { return (json ? BQR_JSON : 0u) | (basis ? BQR_RELATION_BASIS : 0u); }
    bqr_budget budget() const { return bqr_budget{nesting_cap, steps}; }
};

int show(const Type& t, const Globals& g) {
    char* out = nullptr;
    return print(bqr_type_show(t.get(), g.flags(), &out), out);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "bqr: cannot read " << path << "\n";
        throw Error{BQR_EINVAL};
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Binary quadratic regular operads with splitting associativity"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_flag("--relation-basis", g.basis, "print relation basis matrices");
    app.add_option("--nesting-cap", g.nesting_cap, "maximum operator nesting during rewriting");
    app.add_option("--steps", g.steps, "rewrite step budget");

    std::string a, b, file, law, weight = "formal", format = "dsl", output, map;
    std::vector<std::string> laws;
    int n = 0;
    bool reversal = false;

    auto* show_cmd = app.add_subcommand("show", "print a type");
    show_cmd->add_option("type", a, "catalog name or file")->required();
    auto* list_cmd = app.add_subcommand("list", "list the catalog");
    auto* validate_cmd = app.add_subcommand("validate", "validate a presentation");
    validate_cmd->add_option("type", a)->required();
    auto* square_cmd = app.add_subcommand("square", "product of two types");
    square_cmd->add_option("A", a)->required();
    square_cmd->add_option("B", b)->required();
    auto* maltese_cmd = app.add_subcommand("maltese", "maltese product of two types");
    maltese_cmd->add_option("A", a)->required();
    maltese_cmd->add_option("B", b)->required();
    auto* power_cmd = app.add_subcommand("power", "n-th power of a type");
    power_cmd->add_option("A", a)->required();
    power_cmd->add_option("n", n)->required();
    auto* dual_cmd = app.add_subcommand("dual", "dual type");
    dual_cmd->add_option("A", a)->required();
    auto* ddual_cmd = app.add_subcommand("double-dual", "check that the double dual is the type");
    ddual_cmd->add_option("A", a)->required();
    auto* arity_cmd = app.add_subcommand("arity3", "dimension of the arity 3 component");
    arity_cmd->add_option("A", a)->required();
    auto* morph_cmd = app.add_subcommand("check-morphism", "check a generator map");
    morph_cmd->add_option("--map", map, "JSON file with the matrix")->required();
    morph_cmd->add_option("A", a)->required();
    morph_cmd->add_option("B", b)->required();
    auto* auto_cmd = app.add_subcommand("auto-group", "monomial automorphism group");
    auto_cmd->add_option("A", a)->required();
    auto_cmd->add_flag("--reversal", reversal, "include argument-reversing maps");
    auto* tensor_cmd = app.add_subcommand("tensor-model", "check the tensor model of a product");
    tensor_cmd->add_option("A", a)->required();
    tensor_cmd->add_option("B", b)->required();
    auto* op_cmd = app.add_subcommand("verify-operator", "verify the operator construction");
    op_cmd->add_option("A", a)->required();
    op_cmd->add_option("--law", law)->required()->check(CLI::IsMember({"rb", "rb0", "nijenhuis", "leftrb", "rightrb"}));
    op_cmd->add_option("--weight", weight, "p/q or formal");
    auto* fam_cmd = app.add_subcommand("verify-family", "verify a family of commuting operators");
    fam_cmd->add_option("A", a)->required();
    fam_cmd->add_option("--laws", laws)->required()->delimiter(',');
    fam_cmd->add_option("--weight", weight, "p/q or formal");
    auto* lemma_cmd = app.add_subcommand("verify-lemmas", "complement and closing lemmas");
    auto* nd_cmd = app.add_subcommand("non-duality", "the quadri counterexample");
    auto* suite_cmd = app.add_subcommand("paper-suite", "run every acceptance check");
    auto* export_cmd = app.add_subcommand("export", "write a type in some format");
    export_cmd->add_option("A", a)->required();
    export_cmd->add_option("--format", format)->check(CLI::IsMember({"dsl", "json", "latex"}));
    export_cmd->add_option("-o", output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        char* out = nullptr;
        int status = BQR_OK;
        const unsigned f = g.flags();
        const bqr_budget budget = g.budget();
        if (*show_cmd) {
            status = show(load(a), g);
        } else if (*list_cmd) {
            status = print(bqr_catalog_list(f, &out), out);
        } else if (*validate_cmd) {
            status = print(bqr_type_validate(load(a).get(), f, &out), out);
        } else if (*square_cmd || *maltese_cmd) {
            Type ta = load(a), tb = load(b);
            bqr_type* r = nullptr;
            check(*square_cmd ? bqr_square(ta.get(), tb.get(), &r) : bqr_maltese(ta.get(), tb.get(), &r));
            status = show(adopt(r), g);
        } else if (*power_cmd) {
            bqr_type* r = nullptr;
            check(bqr_power(load(a).get(), n, &r));
            status = show(adopt(r), g);
        } else if (*dual_cmd) {
            bqr_type* r = nullptr;
            check(bqr_dual(load(a).get(), &r));
            status = show(adopt(r), g);
        } else if (*ddual_cmd) {
            status = print(bqr_double_dual(load(a).get(), f, &out), out);
        } else if (*arity_cmd) {
            status = print(bqr_arity3(load(a).get(), f, &out), out);
        } else if (*morph_cmd) {
            Type ta = load(a), tb = load(b);
            std::string text = slurp(map);
            bqr_morphism* m = nullptr;
            check(bqr_morphism_parse(text.c_str(), ta.get(), tb.get(), &m));
            std::unique_ptr<bqr_morphism, decltype(&bqr_morphism_free)> hold(m, bqr_morphism_free);
            status = print(bqr_morphism_check(m, f, &out), out);
        } else if (*auto_cmd) {
            status = print(bqr_auto_group(load(a).get(), f | (reversal ? BQR_REVERSAL : 0u), &out), out);
        } else if (*tensor_cmd) {
            status = print(bqr_tensor_model(load(a).get(), load(b).get(), f, &out), out);
        } else if (*op_cmd) {
            status = print(bqr_verify_operator(load(a).get(), law.c_str(), weight.c_str(), &budget, f, &out), out);
        } else if (*fam_cmd) {
            std::string joined;
            for (const auto& l : laws) joined += (joined.empty() ? "" : ",") + l;
            status = print(bqr_verify_family(load(a).get(), joined.c_str(), weight.c_str(), &budget, f, &out), out);
        } else if (*lemma_cmd) {
            status = print(bqr_verify_lemmas(&budget, f, &out), out);
        } else if (*nd_cmd) {
            status = print(bqr_non_duality(f, &out), out);
        } else if (*suite_cmd) {
            status = print(bqr_paper_suite(f, &out), out);
        } else if (*export_cmd) {
            check(bqr_type_export(load(a).get(), format.c_str(), &out));
            std::string text(out);
            bqr_string_free(out);
            if (output.empty()) {
                std::fputs(text.c_str(), stdout);
            } else {
                std::ofstream o(output, std::ios::binary);
                o << text;
                if (!o) {
                    std::cerr << "bqr: cannot write " << output << "\n";
                    return usage;
                }
            }
        }
        return exit_code(status);
    } catch (const Error& e) {
        if (*bqr_last_error()) std::cerr << "bqr: " << bqr_last_error() << "\n";
        return exit_code(e.status);
    }
}
