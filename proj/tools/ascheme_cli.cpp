// Command-line front end for the association-scheme library.
//
// Exit codes: 0 success, 1 negative verdict or domain error (invalid scheme,
// failed validation, no isomorphism), 2 unusable input (unreadable or
// malformed files, bad arguments). Reports go to stdout as `key: value`
// lines; errors go to stderr. Output is deterministic: the same invocation
// always produces identical bytes.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ascheme/action.hpp"
#include "ascheme/closure.hpp"
#include "ascheme/error.hpp"
#include "ascheme/fixtures.hpp"
#include "ascheme/io.hpp"
#include "ascheme/iso.hpp"
#include "ascheme/morphism.hpp"
#include "ascheme/recovery.hpp"
#include "ascheme/scheme.hpp"
#include "ascheme/semidirect.hpp"

using namespace ascheme;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw SchemeError(ErrorKind::ParseError, "bad integer list entry '" + item + "'");
        }
        if (pos != item.size())
            throw SchemeError(ErrorKind::ParseError, "bad integer list entry '" + item + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw SchemeError(ErrorKind::ParseError, "empty integer list");
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(v[i]);
    }
    return out;
}

std::vector<int> sorted_valencies(const Scheme& s) {
    std::vector<int> vals;
    for (int t = 0; t < s.r; ++t) vals.push_back(s.valency(t));
    std::sort(vals.begin(), vals.end());
    return vals;
}

void print_scheme_report(const Scheme& s) {
    std::cout << "order: " << s.n << "\n";
    std::cout << "rank: " << s.r << "\n";
    std::cout << "basepoint: " << s.basepoint << "\n";
    std::vector<int> vals;
    for (int t = 0; t < s.r; ++t) vals.push_back(s.valency(t));
    std::cout << "valencies: " << join(vals) << "\n";
    std::cout << "star: " << join(s.star) << "\n";
    std::cout << "thin: " << (is_thin(s) ? "true" : "false") << "\n";
    std::cout << "symmetric: " << (is_symmetric(s) ? "true" : "false") << "\n";
}

void emit_scheme(const std::string& path, const Scheme& s) {
    save_scheme(path, s);
    std::cout << "wrote: " << path << "\n";
}

// Relation bijection induced by a verified point bijection.
std::vector<int> relation_bijection(const Scheme& a, const Scheme& b,
                                    const std::vector<int>& point_map) {
    std::vector<int> rel(a.r, -1);
    for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < a.n; ++y)
            rel[a.color_at(x, y)] = b.color_at(point_map[x], point_map[y]);
    return rel;
}

int cmd_verify(const std::string& path) {
    Scheme s = load_scheme(path);
    std::cout << "file: " << path << "\n";
    print_scheme_report(s);
    std::cout << "valid: true\n";
    return 0;
}

int cmd_constants(const std::string& path) {
    Scheme s = load_scheme(path);
    std::cout << "order: " << s.n << "\n";
    std::cout << "rank: " << s.r << "\n";
    for (int p = 0; p < s.r; ++p)
        for (int q = 0; q < s.r; ++q)
            for (int t = 0; t < s.r; ++t)
                if (s.a(p, q, t) != 0)
                    std::cout << "a(" << p << "," << q << "," << t
                              << "): " << s.a(p, q, t) << "\n";
    return 0;
}

int cmd_closed(const std::string& path) {
    SchemePtr s = make_scheme(load_scheme(path));
    auto subsets = enumerate_closed_subsets(s);
    std::cout << "count: " << subsets.size() << "\n";
    for (size_t i = 0; i < subsets.size(); ++i) {
        std::cout << "subset " << i << ": " << join(subsets[i].members) << "\n";
        std::cout << "normal " << i << ": "
                  << (is_normal(*s, subsets[i].members) ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_quotient(const std::string& path, const std::string& subset,
                 const std::string& out) {
    SchemePtr s = make_scheme(load_scheme(path));
    ClosedSubset t = closure_of(s, parse_int_list(subset));
    std::cout << "closure: " << join(t.members) << "\n";
    QuotientScheme q = quotient(s, t.members);
    std::cout << "relation map: " << join(q.rel_map) << "\n";
    print_scheme_report(q.scheme);
    if (!out.empty()) emit_scheme(out, q.scheme);
    return 0;
}

int cmd_subscheme(const std::string& path, const std::string& subset, int point,
                  const std::string& out) {
    SchemePtr s = make_scheme(load_scheme(path));
    ClosedSubset t = closure_of(s, parse_int_list(subset));
    std::cout << "closure: " << join(t.members) << "\n";
    if (point < 0) point = s->basepoint;
    SubschemeResult sub = subscheme(*s, t.members, point);
    std::cout << "coset: " << join(sub.point_embed) << "\n";
    std::cout << "relations kept: " << join(sub.rel_embed) << "\n";
    print_scheme_report(sub.scheme);
    if (!out.empty()) emit_scheme(out, sub.scheme);
    return 0;
}

int cmd_thin(const std::string& path, const std::string& out) {
    Scheme s = load_group_as_thin(path);
    print_scheme_report(s);
    if (!out.empty()) emit_scheme(out, s);
    return 0;
}

void print_product_report(const SemidirectScheme& sd) {
    print_scheme_report(*sd.scheme);
    for (size_t i = 0; i < sd.label_of.size(); ++i)
        std::cout << "label " << i << ": " << sd.label_of[i].u << " "
                  << join(sd.label_of[i].t_class) << "\n";
}

int cmd_degenerate_product(const std::string& u_path, const std::string& t_path,
                           bool full, const std::string& out) {
    SchemePtr u = make_scheme(load_scheme(u_path));
    SchemePtr t = make_scheme(load_scheme(t_path));
    SemidirectScheme sd =
        semidirect_product(full ? full_action(u, t) : trivial_action(u, t));
    print_product_report(sd);
    if (!out.empty()) emit_scheme(out, *sd.scheme);
    return 0;
}

int cmd_semidirect(const std::string& act_path, const std::string& out,
                   const std::string& labels_out) {
    Action act = load_action(act_path);
    SemidirectScheme sd = semidirect_product(act);
    print_product_report(sd);
    if (!out.empty()) emit_scheme(out, *sd.scheme);
    if (!labels_out.empty()) {
        save_label_table(labels_out, sd);
        std::cout << "wrote labels: " << labels_out << "\n";
    }
    return 0;
}

int cmd_recover(const std::string& s_path, const std::string& u_path,
                const std::string& subset, const std::string& map,
                const std::string& out) {
    SchemePtr s = make_scheme(load_scheme(s_path));
    SchemePtr u = make_scheme(load_scheme(u_path));
    RelSet t_tilde = normalized(parse_int_list(subset));
    std::vector<int> i_map = parse_int_list(map);
    SplitData split = validate_split_data(s, t_tilde, i_map, u);
    std::cout << "embedded relations: " << join(split.i_rel) << "\n";
    ReconstructResult rr = reconstruct(split);
    std::cout << "round trip: " << (rr.eta_is_isomorphism ? "true" : "false")
              << "\n";
    std::cout << "eta points: " << join(rr.recovered.eta) << "\n";
    std::cout << "eta relations: "
              << join(relation_bijection(*s, *rr.product.scheme, rr.recovered.eta))
              << "\n";
    if (!out.empty()) {
        save_action(out, rr.recovered.action);
        std::cout << "wrote: " << out << "\n";
    }
    return rr.eta_is_isomorphism ? 0 : 1;
}

int cmd_iso(const std::string& a_path, const std::string& b_path, bool based) {
    Scheme a = load_scheme(a_path);
    Scheme b = load_scheme(b_path);
    auto iso = find_isomorphism(a, b, based);
    if (!iso) {
        std::cout << "isomorphic: false\n";
        return 1;
    }
    std::cout << "isomorphic: true\n";
    std::cout << "based: " << (iso->based ? "true" : "false") << "\n";
    std::cout << "points: " << join(iso->point_bij) << "\n";
    std::cout << "relations: " << join(iso->rel_bij) << "\n";
    return 0;
}

int cmd_example(const std::string& outdir) {
    SchemePtr t3 = fixtures::triangle_scheme();
    SchemePtr u4 = fixtures::cyclic_scheme(4);
    Action act = fixtures::cyclic4_on_triangle_action();
    SemidirectScheme sd = semidirect_product(act);
    SchemePtr ref = fixtures::order12_reference_relabeling();

    std::cout << "t order: " << t3->n << "\n";
    std::cout << "t rank: " << t3->r << "\n";
    std::cout << "u order: " << u4->n << "\n";
    std::cout << "u rank: " << u4->r << "\n";
    std::cout << "order: " << sd.scheme->n << "\n";
    std::cout << "rank: " << sd.scheme->r << "\n";
    std::vector<int> vals;
    for (int t = 0; t < sd.scheme->r; ++t) vals.push_back(sd.scheme->valency(t));
    std::cout << "valencies: " << join(vals) << "\n";
    std::cout << "valency multiset: " << join(sorted_valencies(*sd.scheme)) << "\n";
    for (size_t i = 0; i < sd.label_of.size(); ++i)
        std::cout << "label " << i << ": " << sd.label_of[i].u << " "
                  << join(sd.label_of[i].t_class) << "\n";

    auto subsets = enumerate_closed_subsets(sd.scheme);
    std::cout << "closed subsets: " << subsets.size() << "\n";
    for (size_t i = 0; i < subsets.size(); ++i) {
        std::cout << "subset " << i << ": " << join(subsets[i].members) << "\n";
        std::cout << "normal " << i << ": "
                  << (is_normal(*sd.scheme, subsets[i].members) ? "true" : "false")
                  << "\n";
    }

    auto ref_iso = find_isomorphism(*sd.scheme, *ref);
    std::cout << "reference isomorphic: " << (ref_iso ? "true" : "false") << "\n";

    ReconstructResult rr = reconstruct(canonical_split(sd));
    std::cout << "round trip: " << (rr.eta_is_isomorphism ? "true" : "false")
              << "\n";

    if (!outdir.empty()) {
        std::filesystem::create_directories(outdir);
        std::filesystem::path dir(outdir);
        save_scheme((dir / "t3.scm").string(), *t3);
        std::cout << "wrote: " << (dir / "t3.scm").string() << "\n";
        save_scheme((dir / "u4.scm").string(), *u4);
        std::cout << "wrote: " << (dir / "u4.scm").string() << "\n";
        save_scheme((dir / "s12.scm").string(), *sd.scheme);
        std::cout << "wrote: " << (dir / "s12.scm").string() << "\n";
        save_label_table((dir / "s12.labels").string(), sd);
        std::cout << "wrote: " << (dir / "s12.labels").string() << "\n";
        save_scheme((dir / "s12_reference.scm").string(), *ref);
        std::cout << "wrote: " << (dir / "s12_reference.scm").string() << "\n";
        save_action((dir / "example.act").string(), act);
        std::cout << "wrote: " << (dir / "example.act").string() << "\n";
    }
    bool ok = sd.scheme->n == 12 && sd.scheme->r == 6 && subsets.size() == 5 &&
              ref_iso.has_value() && rr.eta_is_isomorphism;
    std::cout << "verdict: " << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with finite association schemes: products, "
                 "quotients, semidirect products of actions, and recovery of an "
                 "action from a split product."};
    app.require_subcommand(1);

    std::string path, path2, subset, map_list, out, labels_out, outdir = ".";
    int point = -1;
    bool based = false;

    auto* verify = app.add_subcommand("verify", "validate a scheme file and report its shape");
    verify->add_option("file", path, "scheme file")->required();

    auto* constants = app.add_subcommand("constants", "print the nonzero intersection numbers");
    constants->add_option("file", path, "scheme file")->required();

    auto* closed = app.add_subcommand("closed", "list all closed relation subsets");
    closed->add_option("file", path, "scheme file")->required();

    auto* quo = app.add_subcommand("quotient", "quotient by the closure of a relation subset");
    quo->add_option("file", path, "scheme file")->required();
    quo->add_option("--subset", subset, "comma-separated relation seed")->required();
    quo->add_option("-o,--out", out, "write the quotient scheme here");

    auto* sub = app.add_subcommand("subscheme", "subscheme on a coset of the closure of a subset");
    sub->add_option("file", path, "scheme file")->required();
    sub->add_option("--subset", subset, "comma-separated relation seed")->required();
    sub->add_option("--point", point, "coset representative (default: basepoint)");
    sub->add_option("-o,--out", out, "write the subscheme here");

    auto* thin = app.add_subcommand("thin", "turn a group multiplication table into a thin scheme");
    thin->add_option("file", path, "group table file")->required();
    thin->add_option("-o,--out", out, "write the scheme here");

    auto* direct = app.add_subcommand("direct", "direct product (semidirect product of the trivial action)");
    direct->add_option("ufile", path, "acting scheme file")->required();
    direct->add_option("tfile", path2, "acted-on scheme file")->required();
    direct->add_option("-o,--out", out, "write the product here");

    auto* wreath = app.add_subcommand("wreath", "wreath-style product (semidirect product of the full action)");
    wreath->add_option("ufile", path, "acting scheme file")->required();
    wreath->add_option("tfile", path2, "acted-on scheme file")->required();
    wreath->add_option("-o,--out", out, "write the product here");

    auto* semi = app.add_subcommand("semidirect", "build the semidirect product of an action file");
    semi->add_option("file", path, "action file")->required();
    semi->add_option("-o,--out", out, "write the product scheme here");
    semi->add_option("--labels", labels_out, "write the relation label table here");

    auto* recover = app.add_subcommand("recover", "recover an action from a scheme with a splitting");
    recover->add_option("file", path, "product scheme file")->required();
    recover->add_option("ufile", path2, "acting scheme file")->required();
    recover->add_option("--subset", subset, "comma-separated diagonal-copy relations")->required();
    recover->add_option("--map", map_list, "comma-separated embedded point of each acting point")->required();
    recover->add_option("-o,--out", out, "write the recovered action here");

    auto* iso = app.add_subcommand("iso", "search for an isomorphism between two schemes");
    iso->add_option("afile", path, "first scheme file")->required();
    iso->add_option("bfile", path2, "second scheme file")->required();
    iso->add_flag("--based", based, "require basepoint to map to basepoint");

    auto* example = app.add_subcommand(
        "example6", "build the bundled order-12 example, report on it, and write its files");
    example->add_option("--outdir", outdir, "directory for the generated files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e); // prints help or the usage error
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) return cmd_verify(path);
        if (*constants) return cmd_constants(path);
        if (*closed) return cmd_closed(path);
        if (*quo) return cmd_quotient(path, subset, out);
        if (*sub) return cmd_subscheme(path, subset, point, out);
        if (*thin) return cmd_thin(path, out);
        if (*direct) return cmd_degenerate_product(path, path2, false, out);
        if (*wreath) return cmd_degenerate_product(path, path2, true, out);
        if (*semi) return cmd_semidirect(path, out, labels_out);
        if (*recover) return cmd_recover(path, path2, subset, map_list, out);
        if (*iso) return cmd_iso(path, path2, based);
        if (*example) return cmd_example(outdir);
    } catch (const SchemeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::ParseError ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
