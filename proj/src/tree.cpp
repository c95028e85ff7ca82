#include "qra/tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qra {

TreeExpr TreeExpr::leaf(char symbol)
{
    TreeExpr t;
    t.sym_ = symbol;
    return t;
}

TreeExpr TreeExpr::pair(TreeExpr l, TreeExpr r)
{
    TreeExpr t;
    t.l_ = std::make_shared<const TreeExpr>(std::move(l));
    t.r_ = std::make_shared<const TreeExpr>(std::move(r));
    return t;
}

std::string TreeExpr::str() const
{
    if (is_leaf()) return std::string(1, sym_);
    auto part = [](const TreeExpr& e) { return e.is_leaf() ? e.str() : "(" + e.str() + ")"; };
    return part(left()) + part(right());
}

std::vector<char> TreeExpr::leaves() const
{
    std::vector<char> out;
    std::vector<const TreeExpr*> stack{this};
    while (!stack.empty()) {
        const TreeExpr* e = stack.back();
        stack.pop_back();
        if (e->is_leaf()) {
            if (std::find(out.begin(), out.end(), e->sym_) == out.end()) out.push_back(e->sym_);
        } else {
            stack.push_back(e->r_.get());
            stack.push_back(e->l_.get());
        }
    }
    return out;
}

bool operator==(const TreeExpr& x, const TreeExpr& y)
{
    if (x.is_leaf() != y.is_leaf()) return false;
    if (x.is_leaf()) return x.sym_ == y.sym_;
    return x.left() == y.left() && x.right() == y.right();
}

namespace {

class TreeParser {
public:
    explicit TreeParser(const std::string& s) : s_(s) {}

    TreeExpr run()
    {
        TreeExpr e = expr();
        if (pos_ != s_.size()) throw SyntaxError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    TreeExpr expr()
    {
        std::size_t start = pos_;
        std::vector<TreeExpr> items;
        while (pos_ < s_.size() && s_[pos_] != ')') items.push_back(item());
        if (items.empty()) throw SyntaxError("empty tree expression", start);
        if (items.size() > 2)
            throw SyntaxError("juxtaposition of more than two items must be parenthesized", start);
        if (items.size() == 1) return items[0];
        return TreeExpr::pair(items[0], items[1]);
    }

    TreeExpr item()
    {
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            TreeExpr e = expr();
            if (pos_ >= s_.size() || s_[pos_] != ')') throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return e;
        }
        if (std::isalnum(static_cast<unsigned char>(c))) {
            ++pos_;
            return TreeExpr::leaf(c);
        }
        throw SyntaxError("unexpected '" + std::string(1, c) + "'", pos_);
    }
};

void count_leaves(const TreeExpr& e, std::map<char, int>& n)
{
    if (e.is_leaf()) {
        ++n[e.symbol()];
        return;
    }
    count_leaves(e.left(), n);
    count_leaves(e.right(), n);
}

void flatten_comp(const Term& t, std::vector<Term>& out)
{
    if (t.kind() == Kind::Comp) {
        flatten_comp(t.left(), out);
        flatten_comp(t.right(), out);
    } else if (t.kind() != Kind::Id) {
        out.push_back(t);
    }
}

Term prefixed(const Term& gen, const Term& path)
{
    std::vector<Term> fs{gen};
    flatten_comp(path, fs);
    return comp_all(fs);
}

}  // namespace

TreeExpr parse_tree_expr(const std::string& text, TreeParseOptions opt)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    TreeExpr e = TreeParser(s).run();
    if (!opt.allow_repeated_leaves) {
        std::map<char, int> n;
        count_leaves(e, n);
        for (auto& [sym, k] : n)
            if (k > 1) throw SyntaxError(std::string("duplicate leaf '") + sym + "'", s.find(sym, s.find(sym) + 1));
    }
    return e;
}

LeafAssignment leaf_paths(const TreeExpr& e)
{
    if (e.is_leaf()) return {{e.symbol(), id()}};
    LeafAssignment l = leaf_paths(e.left());
    LeafAssignment r = leaf_paths(e.right());
    LeafAssignment out;
    auto find = [](const LeafAssignment& m, char c) -> const Term* {
        for (auto& [k, v] : m)
            if (k == c) return &v;
        return nullptr;
    };
    for (char c : e.leaves()) {
        const Term* x = find(l, c);
        const Term* y = find(r, c);
        if (x && y)
            out.emplace_back(c, meet(prefixed(gen_a(), *x), prefixed(gen_b(), *y)));
        else if (x)
            out.emplace_back(c, prefixed(gen_a(), *x));
        else
            out.emplace_back(c, prefixed(gen_b(), *y));
    }
    return out;
}

Term conv_path(const Term& p)
{
    switch (p.kind()) {
    case Kind::Comp: return comp(conv_path(p.right()), conv_path(p.left()));
    case Kind::Meet: return meet(conv_path(p.left()), conv_path(p.right()));
    case Kind::Id:
    case Kind::Top:
    case Kind::Zero: return p;
    case Kind::Conv: return p.left();
    default: return conv(p);
    }
}

Term mapsto(const TreeExpr& src, const TreeExpr& dst)
{
    LeafAssignment s = leaf_paths(src);
    LeafAssignment d = leaf_paths(dst);
    std::vector<Term> parts;
    for (auto& [c, sp] : s) {
        for (auto& [c2, dp] : d) {
            if (c2 != c) continue;
            std::vector<Term> fs;
            flatten_comp(sp, fs);
            flatten_comp(conv_path(dp), fs);
            parts.push_back(comp_all(fs));
        }
    }
    return meet_all(parts);
}

Term parse_mapsto(const std::string& text)
{
    auto arrow = text.find("->");
    if (arrow == std::string::npos) throw SyntaxError("expected '->'", text.size());
    TreeParseOptions opt{true};
    TreeExpr src = parse_tree_expr(text.substr(0, arrow), opt);
    TreeExpr dst = parse_tree_expr(text.substr(arrow + 2), opt);
    return mapsto(src, dst);
}

// ---------------------------------------------------------------------------
// DOT

namespace {

struct DotBuilder {
    std::vector<int> parent;
    struct Edge {
        int from, to;
        std::string label;
    };
    std::vector<Edge> edges;

    int fresh()
    {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y)
    {
        x = find(x), y = find(y);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }

    void edge(int s, int t, const std::string& label) { edges.push_back({s, t, label}); }

    // conv(x) is x drawn between the swapped terminals
    void build(const Term& t, int s, int d)
    {
        switch (t.kind()) {
        case Kind::Id: unite(s, d); break;
        case Kind::Zero: edge(s, d, "0"); break;
        case Kind::Top: edge(s, d, "1"); break;
        case Kind::GenA: edge(s, d, "a"); break;
        case Kind::GenB: edge(s, d, "b"); break;
        case Kind::Var: edge(s, d, t.name()); break;
        case Kind::Conv: build(t.left(), d, s); break;
        case Kind::Comp: {
            int m = fresh();
            build(t.left(), s, m);
            build(t.right(), m, d);
            break;
        }
        case Kind::Meet:
            build(t.left(), s, d);
            build(t.right(), s, d);
            break;
        case Kind::Join:
        case Kind::Compl: throw RaOnlyOperator("emit_dot: '+' and '-' have no series-parallel drawing");
        }
    }
};

}  // namespace

std::string emit_dot(const Term& t)
{
    if (t.is_ra_only()) throw RaOnlyOperator("emit_dot: '+' and '-' have no series-parallel drawing");
    DotBuilder g;
    int in = g.fresh();
    int out = g.fresh();
    g.build(t, in, out);

    std::map<int, int> label;
    auto name = [&](int x) {
        x = g.find(x);
        auto it = label.find(x);
        if (it != label.end()) return it->second;
        int k = static_cast<int>(label.size());
        label.emplace(x, k);
        return k;
    };
    std::ostringstream os;
    os << "digraph term {\n  rankdir=LR;\n  node [shape=point];\n";
    int i = name(in), o = name(out);
    os << "  n" << i << " [shape=circle, label=\"\"];\n";
    if (o != i) os << "  n" << o << " [shape=doublecircle, label=\"\"];\n";
    for (auto& e : g.edges) {
        int f = name(e.from);
        int to = name(e.to);
        os << "  n" << f << " -> n" << to << " [label=\"" << e.label << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace qra
