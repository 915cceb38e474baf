#include "grk/io.hpp"

#include "grk/errors.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace grk {

namespace {

class Tokens {
public:
    explicit Tokens(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) toks_.push_back({tok, lineno});
        }
    }
    bool done() const { return pos_ >= toks_.size(); }
    const std::string& peek() const { return toks_.at(pos_).text; }
    std::string word() {
        if (done()) throw InputError("unexpected end of input");
        return toks_[pos_++].text;
    }
    long long integer() {
        int line = done() ? -1 : toks_[pos_].line;
        std::string t = word();
        try {
            std::size_t used = 0;
            long long v = std::stoll(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
            return v;
        } catch (const std::exception&) {
            throw InputError("line " + std::to_string(line) + ": expected an integer, got '" + t + "'");
        }
    }
    int line() const { return done() ? -1 : toks_[pos_].line; }

private:
    struct Tok {
        std::string text;
        int line;
    };
    std::vector<Tok> toks_;
    std::size_t pos_ = 0;
};

int checked_int(long long v, long long lo, long long hi, const char* what) {
    if (v < lo || v > hi) throw InputError(std::string(what) + " out of range: " + std::to_string(v));
    return static_cast<int>(v);
}

FinitePoset read_poset(Tokens& t) {
    std::string kw = t.word();
    if (kw == "grid") {
        int w = checked_int(t.integer(), 1, 1 << 12, "grid width");
        int h = checked_int(t.integer(), 1, 1 << 12, "grid height");
        int ox = checked_int(t.integer(), -(1 << 20), 1 << 20, "grid origin");
        int oy = checked_int(t.integer(), -(1 << 20), 1 << 20, "grid origin");
        return grid_poset(w, h, {ox, oy});
    }
    if (kw != "poset") throw InputError("expected 'poset' or 'grid', got '" + kw + "'");
    int n = checked_int(t.integer(), 0, 1 << 16, "poset size");
    std::vector<std::pair<int, int>> rel;
    while (!t.done() && t.peek() == "cover") {
        t.word();
        int a = checked_int(t.integer(), 0, n - 1, "element");
        int b = checked_int(t.integer(), 0, n - 1, "element");
        rel.emplace_back(a, b);
    }
    return FinitePoset::from_relations(n, rel);
}

void write_poset(std::ostream& out, const FinitePoset& P) {
    if (P.is_grid()) {
        const GridInfo& g = *P.grid();
        out << "grid " << g.width << ' ' << g.height << ' ' << g.origin.x << ' ' << g.origin.y << '\n';
        return;
    }
    out << "poset " << P.size() << '\n';
    for (auto [a, b] : P.cover_edges()) out << "cover " << a << ' ' << b << '\n';
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PModule parse_module(const std::string& text, std::uint32_t default_p) {
    Tokens t(text);
    if (t.done()) throw InputError("empty module description");
    auto P = std::make_shared<const FinitePoset>(read_poset(t));
    std::uint32_t p = default_p;
    std::vector<int> dims(P->size(), 0);
    // Raw entries; reduced once the field is known.
    std::map<std::pair<int, int>, std::vector<std::vector<long long>>> maps;
    while (!t.done()) {
        int line = t.line();
        std::string kw = t.word();
        if (kw == "field") {
            long long v = t.integer();
            if (v < 2 || v > 65521 || !is_prime(static_cast<std::uint32_t>(v)))
                throw InputError("line " + std::to_string(line) + ": field must be a prime below 65536");
            p = static_cast<std::uint32_t>(v);
        } else if (kw == "dims") {
            int e = checked_int(t.integer(), 0, P->size() - 1, "element");
            dims[e] = checked_int(t.integer(), 0, 1 << 12, "dimension");
        } else if (kw == "map") {
            int a = checked_int(t.integer(), 0, P->size() - 1, "element");
            int b = checked_int(t.integer(), 0, P->size() - 1, "element");
            if (P->edge_index(a, b) < 0)
                throw InputError("line " + std::to_string(line) + ": (" + std::to_string(a) + ", " +
                                 std::to_string(b) + ") is not a cover edge");
            int r = checked_int(t.integer(), 0, 1 << 12, "matrix rows");
            int c = checked_int(t.integer(), 0, 1 << 12, "matrix cols");
            if (r != dims[b] || c != dims[a])
                throw InputError("line " + std::to_string(line) + ": map shape " + std::to_string(r) + "x" +
                                 std::to_string(c) + " does not match the dims declared so far");
            std::vector<std::vector<long long>> rows(r, std::vector<long long>(c));
            for (auto& row : rows)
                for (auto& v : row) v = t.integer();
            maps[{a, b}] = std::move(rows);
        } else {
            throw InputError("line " + std::to_string(line) + ": unknown keyword '" + kw + "'");
        }
    }
    std::vector<Matrix> edge_maps;
    for (auto [a, b] : P->cover_edges()) {
        auto it = maps.find({a, b});
        if (it == maps.end()) {
            edge_maps.push_back(Matrix::zero(dims[b], dims[a], p));
            continue;
        }
        Matrix m(dims[b], dims[a], p);
        for (int i = 0; i < dims[b]; ++i)
            for (int j = 0; j < dims[a]; ++j) m.set(i, j, it->second[i][j]);
        edge_maps.push_back(m);
    }
    return PModule(P, dims, edge_maps, p);
}

FinitePoset parse_poset(const std::string& text) {
    Tokens t(text);
    if (t.done()) throw InputError("empty poset description");
    FinitePoset P = read_poset(t);
    if (!t.done()) throw InputError("trailing tokens after the poset block");
    return P;
}

PModule read_module_file(const std::string& path, std::uint32_t default_p) {
    return parse_module(read_text_file(path), default_p);
}

std::string write_module(const PModule& m) {
    std::ostringstream out;
    write_poset(out, m.poset());
    out << "field " << m.field() << '\n';
    for (int e = 0; e < m.poset().size(); ++e)
        if (m.dim(e) > 0) out << "dims " << e << ' ' << m.dim(e) << '\n';
    const auto& edges = m.poset().cover_edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Matrix& a = m.edge_maps()[i];
        if (a.empty() || a.is_zero()) continue;
        out << "map " << edges[i].first << ' ' << edges[i].second << '\n' << a.rows() << ' ' << a.cols() << '\n';
        for (int r = 0; r < a.rows(); ++r) {
            for (int c = 0; c < a.cols(); ++c) out << (c ? " " : "") << a(r, c);
            out << '\n';
        }
    }
    return out.str();
}

std::vector<Point> parse_path(const std::string& text) {
    Tokens t(text);
    if (t.word() != "path") throw InputError("expected 'path'");
    int n = checked_int(t.integer(), 1, 1 << 20, "path length");
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        int x = checked_int(t.integer(), -(1 << 20), 1 << 20, "coordinate");
        int y = checked_int(t.integer(), -(1 << 20), 1 << 20, "coordinate");
        pts.push_back({x, y});
    }
    if (!t.done()) throw InputError("trailing tokens after the path");
    return pts;
}

std::vector<Point> read_path_file(const std::string& path) { return parse_path(read_text_file(path)); }

std::string write_path(const std::vector<Point>& pts) {
    std::ostringstream out;
    out << "path " << pts.size() << '\n';
    for (Point p : pts) out << p.x << ' ' << p.y << '\n';
    return out.str();
}

std::vector<Subposet> parse_collection(const std::string& text, const FinitePoset& P) {
    std::vector<Subposet> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        for (char& c : line)
            if (c == ',') c = ' ';
        Tokens t(line);
        if (t.done()) continue;
        std::vector<int> members;
        while (!t.done()) members.push_back(checked_int(t.integer(), 0, P.size() - 1, "element"));
        SubKind kind = is_interval(P, members) ? SubKind::Interval : SubKind::Generic;
        if (!is_connected(P, members))
            throw InputError("line " + std::to_string(lineno) + ": subposet is not connected");
        out.push_back(make_subposet(std::move(members), kind));
    }
    canonical_sort(out);
    return out;
}

std::string members_string(const std::vector<int>& members) {
    std::string s;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(members[i]);
    }
    return s;
}

std::string gri_tsv(const GriTable& t) {
    std::ostringstream out;
    for (std::size_t i = 0; i < t.collection.size(); ++i)
        out << members_string(t.collection[i].members) << '\t' << t.ranks[i] << '\n';
    return out.str();
}

GriTable parse_gri_tsv(const std::string& text, PosetPtr P) {
    GriTable t;
    t.poset = P;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw InputError("table line without a tab");
        std::string ids = line.substr(0, tab);
        for (char& c : ids)
            if (c == ',') c = ' ';
        Tokens tok(ids);
        std::vector<int> members;
        while (!tok.done()) members.push_back(checked_int(tok.integer(), 0, P->size() - 1, "element"));
        SubKind kind = is_interval(*P, members) ? SubKind::Interval : SubKind::Generic;
        t.collection.push_back(make_subposet(std::move(members), kind));
        Tokens v(line.substr(tab + 1));
        t.ranks.push_back(v.integer());
    }
    return t;
}

nlohmann::json gri_json(const GriTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < t.collection.size(); ++i)
        rows.push_back({{"members", t.collection[i].members}, {"rank", t.ranks[i]}});
    nlohmann::json j = {{"kind", "gri"}, {"entries", rows}};
    if (!t.module_ref.empty()) j["module"] = t.module_ref;
    return j;
}

std::string diagram_tsv(const SignedDiagram& d) {
    std::ostringstream out;
    for (std::size_t i = 0; i < d.support.size(); ++i)
        out << members_string(d.support[i].members) << '\t' << d.mult[i] << '\n';
    return out.str();
}

nlohmann::json diagram_json(const SignedDiagram& d) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < d.support.size(); ++i)
        rows.push_back({{"members", d.support[i].members}, {"multiplicity", d.mult[i]}});
    return {{"kind", "gpd"}, {"entries", rows}};
}

std::string diagram_dot(const SignedDiagram& d, const std::vector<Subposet>& collection) {
    ContainmentPoset cp = containment_poset(collection);
    std::ostringstream out;
    out << "digraph gpd {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < cp.items.size(); ++i) {
        long long v = d.at(cp.items[i].members);
        out << "  n" << i << " [label=\"{" << members_string(cp.items[i].members) << "}\\n" << v << "\"";
        if (v > 0) out << ", color=blue";
        if (v < 0) out << ", color=red";
        out << "];\n";
    }
    // Edge from the smaller set up to the larger one.
    for (auto [a, b] : cp.order->cover_edges()) out << "  n" << b << " -> n" << a << ";\n";
    out << "}\n";
    return out.str();
}

std::string barcode_tsv(const Barcode& b) {
    std::ostringstream out;
    for (const Bar& bar : b) out << bar.start << '\t' << bar.end << '\t' << bar.multiplicity << '\n';
    return out.str();
}

nlohmann::json barcode_json(const Barcode& b) {
    nlohmann::json rows = nlohmann::json::array();
    for (const Bar& bar : b) rows.push_back({{"start", bar.start}, {"end", bar.end}, {"multiplicity", bar.multiplicity}});
    return rows;
}

nlohmann::json path_json(const ZigzagPath& p) {
    nlohmann::json pts = nlohmann::json::array();
    for (Point q : p.points) pts.push_back({q.x, q.y});
    return {{"points", pts},
            {"faithful", p.faithful},
            {"simple", p.simple},
            {"monotone", p.monotone},
            {"negative", p.negative},
            {"tame", p.tame}};
}

nlohmann::json points_json(const PointSet& s) {
    nlohmann::json pts = nlohmann::json::array();
    for (Point q : s) pts.push_back({q.x, q.y});
    return pts;
}

}  // namespace grk
