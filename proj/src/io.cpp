#include "ascheme/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ascheme/error.hpp"

namespace ascheme {

namespace {

// Strips '#' comments and splits the remainder into whitespace tokens.
std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

class TokenReader {
public:
    TokenReader(std::vector<std::string> tokens, std::string name)
        : tokens_(std::move(tokens)), name_(std::move(name)) {}

    bool done() const { return pos_ >= tokens_.size(); }

    const std::string& peek() const {
        if (done()) fail("unexpected end of file");
        return tokens_[pos_];
    }

    std::string word() {
        const std::string& t = peek();
        ++pos_;
        return t;
    }

    int integer() {
        const std::string& t = peek();
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(t, &used);
        } catch (...) {
            fail("expected an integer, got '" + t + "'");
        }
        if (used != t.size()) fail("expected an integer, got '" + t + "'");
        ++pos_;
        return v;
    }

    void expect(const std::string& w) {
        if (peek() != w) fail("expected '" + w + "', got '" + peek() + "'");
        ++pos_;
    }

    void expect_done() const {
        if (!done()) fail("trailing content starting at '" + tokens_[pos_] + "'");
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw SchemeError(ErrorKind::ParseError, name_ + ": " + msg);
    }

private:
    std::vector<std::string> tokens_;
    std::string name_;
    size_t pos_ = 0;
};

std::vector<std::string> tokens_of_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemeError(ErrorKind::ParseError, path + ": cannot open");
    return tokenize(in);
}

Scheme scheme_from_tokens(TokenReader& tr) {
    int n = tr.integer(), r = tr.integer(), b = tr.integer();
    if (n <= 0) tr.fail("point count must be positive");
    std::vector<int> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n * n; ++i) flat.push_back(tr.integer());
    tr.expect_done();
    Scheme s = from_flat_color_matrix(std::move(flat), n, b);
    if (s.r != r)
        tr.fail("declared rank " + std::to_string(r) + " but the matrix has rank " +
                std::to_string(s.r));
    return s;
}

} // namespace

Scheme parse_scheme_text(std::istream& in, const std::string& name) {
    TokenReader tr(tokenize(in), name);
    return scheme_from_tokens(tr);
}

Scheme load_scheme(const std::string& path) {
    TokenReader tr(tokens_of_file(path), path);
    return scheme_from_tokens(tr);
}

void write_scheme_text(std::ostream& out, const Scheme& s) {
    out << s.n << " " << s.r << " " << s.basepoint << "\n";
    for (int x = 0; x < s.n; ++x) {
        for (int y = 0; y < s.n; ++y) {
            if (y) out << " ";
            out << s.color_at(x, y);
        }
        out << "\n";
    }
}

void save_scheme(const std::string& path, const Scheme& s) {
    std::ofstream out(path);
    if (!out) throw SchemeError(ErrorKind::ParseError, path + ": cannot write");
    write_scheme_text(out, s);
}

Scheme load_group_as_thin(const std::string& path) {
    TokenReader tr(tokens_of_file(path), path);
    int m = tr.integer();
    if (m <= 0) tr.fail("group order must be positive");
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) table[a][b] = tr.integer();
    tr.expect_done();
    return thin_from_group(table);
}

namespace {

std::string sibling(const std::string& act_path, const std::string& rel) {
    std::filesystem::path p(rel);
    if (p.is_absolute()) return rel;
    return (std::filesystem::path(act_path).parent_path() / p).string();
}

} // namespace

Action load_action(const std::string& path) {
    TokenReader tr(tokens_of_file(path), path);
    tr.expect("Y");
    int m = tr.integer();
    tr.expect("X");
    int n = tr.integer();
    if (m <= 0 || n <= 0) tr.fail("Y and X sizes must be positive");
    tr.expect("u");
    SchemePtr u_scheme = make_scheme(load_scheme(sibling(path, tr.word())));
    tr.expect("tau");
    SchemePtr t_scheme = make_scheme(load_scheme(sibling(path, tr.word())));
    if (u_scheme->n != m) tr.fail("U scheme is not on Y");
    if (t_scheme->n != n) tr.fail("T scheme is not on X");
    LabellingSet tau = tau_of(*t_scheme);

    std::vector<int> id_alpha(tau.r);
    for (int t = 0; t < tau.r; ++t) id_alpha[t] = t;

    std::vector<bool> have_point(m, false);
    std::vector<TauScheme> per_point;
    per_point.reserve(m);
    for (int y = 0; y < m; ++y)
        per_point.push_back(make_tau_scheme(tau, t_scheme, id_alpha));

    struct PairSpec {
        RelSet primed, doubled;
        std::vector<int> map;
    };
    std::vector<std::optional<PairSpec>> pair_spec(static_cast<size_t>(m) * m);

    while (!tr.done()) {
        std::string kw = tr.word();
        if (kw == "point") {
            int y = tr.integer();
            if (y < 0 || y >= m) tr.fail("point index out of range");
            std::vector<int> flat;
            flat.reserve(static_cast<size_t>(n) * n);
            for (int i = 0; i < n * n; ++i) flat.push_back(tr.integer());
            tr.expect("alpha");
            std::vector<int> alpha(tau.r);
            for (int t = 0; t < tau.r; ++t) alpha[t] = tr.integer();
            per_point[y] = make_tau_scheme(
                tau, make_scheme(from_flat_color_matrix(std::move(flat), n, t_scheme->basepoint)),
                std::move(alpha));
            have_point[y] = true;
        } else if (kw == "pair") {
            int y1 = tr.integer(), y2 = tr.integer();
            if (y1 < 0 || y1 >= m || y2 < 0 || y2 >= m) tr.fail("pair index out of range");
            PairSpec spec;
            tr.expect("primed");
            while (!tr.done() && tr.peek() != "doubled") spec.primed.push_back(tr.integer());
            tr.expect("doubled");
            while (!tr.done() && tr.peek() != "map") spec.doubled.push_back(tr.integer());
            tr.expect("map");
            spec.map.assign(n, -1);
            for (int i = 0; i < n; ++i) {
                int x = tr.integer();
                tr.expect("->");
                int img = tr.integer();
                if (x < 0 || x >= n || spec.map[x] >= 0) tr.fail("bad map entry");
                spec.map[x] = img;
            }
            pair_spec[static_cast<size_t>(y1) * m + y2] = std::move(spec);
        } else {
            tr.fail("unexpected keyword '" + kw + "'");
        }
    }

    // basepoint copy defaults to T with the identity relabeling; every other
    // copy must be given explicitly
    int ystar = u_scheme->basepoint;
    if (have_point[ystar] && !same_scheme(*per_point[ystar].scheme, *t_scheme))
        tr.fail("the basepoint copy must be T itself");
    for (int y = 0; y < m; ++y)
        if (y != ystar && !have_point[y])
            tr.fail("missing point block for y=" + std::to_string(y));

    std::vector<CMorphism> per_pair(static_cast<size_t>(m) * m, identity_cmorphism(t_scheme));
    std::vector<bool> have_pair(static_cast<size_t>(m) * m, false);
    for (int y1 = 0; y1 < m; ++y1)
        for (int y2 = 0; y2 < m; ++y2) {
            auto& spec = pair_spec[static_cast<size_t>(y1) * m + y2];
            if (!spec) continue;
            per_pair[static_cast<size_t>(y1) * m + y2] =
                make_cmorphism(per_point[y1].scheme, per_point[y2].scheme,
                               normalized(spec->primed), normalized(spec->doubled), spec->map);
            have_pair[static_cast<size_t>(y1) * m + y2] = true;
        }
    for (int y = 0; y < m; ++y)
        if (!have_pair[static_cast<size_t>(y) * m + y])
            per_pair[static_cast<size_t>(y) * m + y] = identity_cmorphism(per_point[y].scheme);
    for (int y1 = 0; y1 < m; ++y1)
        for (int y2 = 0; y2 < m; ++y2) {
            if (have_pair[static_cast<size_t>(y1) * m + y2] ||
                !have_pair[static_cast<size_t>(y2) * m + y1])
                continue;
            per_pair[static_cast<size_t>(y1) * m + y2] =
                star(per_pair[static_cast<size_t>(y2) * m + y1]);
            have_pair[static_cast<size_t>(y1) * m + y2] = true;
        }
    for (int y1 = 0; y1 < m; ++y1)
        for (int y2 = y1 + 1; y2 < m; ++y2)
            if (!have_pair[static_cast<size_t>(y1) * m + y2])
                tr.fail("missing pair block for (" + std::to_string(y1) + "," +
                        std::to_string(y2) + ")");

    return build_action(u_scheme, t_scheme, std::move(per_point), std::move(per_pair));
}

void save_action(const std::string& path, const Action& act) {
    std::filesystem::path p(path);
    std::string stem = p.stem().string();
    std::string u_name = stem + "_u.scm";
    std::string t_name = stem + "_t.scm";
    save_scheme((p.parent_path() / u_name).string(), *act.u_scheme);
    save_scheme((p.parent_path() / t_name).string(), *act.t_scheme);

    std::ofstream out(path);
    if (!out) throw SchemeError(ErrorKind::ParseError, path + ": cannot write");
    int m = act.m(), n = act.n();
    out << "Y " << m << "\n";
    out << "X " << n << "\n";
    out << "u " << u_name << "\n";
    out << "tau " << t_name << "\n";
    int ystar = act.u_scheme->basepoint;
    for (int y = 0; y < m; ++y) {
        if (y == ystar) continue; // defaulted by the basepoint condition
        out << "point " << y << "\n";
        const Scheme& ty = *act.point(y).scheme;
        for (int x1 = 0; x1 < n; ++x1) {
            for (int x2 = 0; x2 < n; ++x2) {
                if (x2) out << " ";
                out << ty.color_at(x1, x2);
            }
            out << "\n";
        }
        out << "alpha\n";
        for (int t = 0; t < act.tau.r; ++t) {
            if (t) out << " ";
            out << act.point(y).alpha[t];
        }
        out << "\n";
    }
    for (int y1 = 0; y1 < m; ++y1)
        for (int y2 = y1 + 1; y2 < m; ++y2) { // diagonal and reverse pairs defaulted
            const CMorphism& f = act.pair(y1, y2);
            out << "pair " << y1 << " " << y2 << "\n";
            out << "primed";
            for (int t : f.t_sub) out << " " << t;
            out << "\ndoubled";
            for (int t : f.u_sub) out << " " << t;
            out << "\nmap\n";
            for (int x = 0; x < n; ++x) {
                int ib = f.block_iso[f.dom_q.partition.block_of[x]];
                out << x << " -> " << f.cod_q.partition.blocks[ib][0] << "\n";
            }
        }
}

void save_label_table(const std::string& path, const SemidirectScheme& sd) {
    std::ofstream out(path);
    if (!out) throw SchemeError(ErrorKind::ParseError, path + ": cannot write");
    for (size_t i = 0; i < sd.label_of.size(); ++i) {
        out << i << " " << sd.label_of[i].u;
        for (int t : sd.label_of[i].t_class) out << " " << t;
        out << "\n";
    }
}

} // namespace ascheme
