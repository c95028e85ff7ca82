#include "qra/model.hpp"
#include "qra/thompson.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <tuple>

namespace qra {

std::string Relation::str() const
{
    return format_term(lhs) + (op == RelOp::Eq ? " = " : " <= ") + format_term(rhs);
}

Relation parse_relation(const std::string& text, Mode mode)
{
    struct Cut {
        const char* tok;
        RelOp op;
        bool flip;
    };
    // longest operators first so "<=" is not read as "="
    for (Cut c : {Cut{"<=", RelOp::Leq, false}, Cut{">=", RelOp::Leq, true}, Cut{"=", RelOp::Eq, false}}) {
        auto at = text.find(c.tok);
        if (at == std::string::npos) continue;
        std::string rest = text.substr(at + std::string(c.tok).size());
        if (rest.find('=') != std::string::npos)
            throw SyntaxError("more than one relation symbol", at);
        Term l = parse_term(text.substr(0, at), mode);
        Term r = parse_term(rest, mode);
        if (c.flip) std::swap(l, r);
        return Relation{l, c.op, r};
    }
    throw SyntaxError("expected '=', '<=' or '>='", text.size());
}

std::string Strategy::str() const
{
    if (kind == Exhaustive) return "exhaustive";
    return "sample=" + std::to_string(samples) + ",seed=" + std::to_string(seed);
}

std::string LawReport::line() const
{
    std::ostringstream os;
    os << "LAW " << id << ' ' << (pass ? "pass" : "fail") << " tested=" << tested;
    if (!pass) {
        os << " counterexample: ";
        for (std::size_t i = 0; i < counterexample.size(); ++i) {
            if (i) os << ';';
            os << counterexample[i].first << '=' << counterexample[i].second;
        }
    }
    return os.str();
}

namespace {

bool has_generators(const Term& t)
{
    switch (t.kind()) {
    case Kind::GenA:
    case Kind::GenB: return true;
    case Kind::Zero:
    case Kind::Top:
    case Kind::Id:
    case Kind::Var: return false;
    case Kind::Conv:
    case Kind::Compl: return has_generators(t.left());
    default: return has_generators(t.left()) || has_generators(t.right());
    }
}

}  // namespace

bool Law::mentions_generators() const
{
    for (auto* rs : {&hyps, &concls})
        for (auto& r : *rs)
            if (has_generators(r.lhs) || has_generators(r.rhs)) return true;
    return false;
}

// ---------------------------------------------------------------------------
// compilation

namespace detail {

namespace {

class Builder {
public:
    Builder(Compiled& c, bool quantify) : c_(c), quantify_(quantify) {}

    int add(const Term& t)
    {
        Compiled::Op op;
        op.kind = t.kind();
        switch (t.kind()) {
        case Kind::Var: op.var = var_index(t.name()); break;
        case Kind::GenA:
        case Kind::GenB:
            if (quantify_) {
                op.kind = Kind::Var;
                op.var = var_index(t.kind() == Kind::GenA ? "a" : "b");
            }
            break;
        case Kind::Conv:
        case Kind::Compl: op.l = add(t.left()); break;
        case Kind::Comp:
        case Kind::Meet:
        case Kind::Join:
            op.l = add(t.left());
            op.r = add(t.right());
            break;
        default: break;
        }
        auto key = std::make_tuple(static_cast<int>(op.kind), op.l, op.r, op.var);
        auto it = seen_.find(key);
        if (it != seen_.end()) return it->second;
        op.level = op.kind == Kind::Var ? op.var : -1;
        if (op.l >= 0) op.level = std::max(op.level, c_.ops[static_cast<std::size_t>(op.l)].level);
        if (op.r >= 0) op.level = std::max(op.level, c_.ops[static_cast<std::size_t>(op.r)].level);
        c_.ops.push_back(op);
        int k = static_cast<int>(c_.ops.size()) - 1;
        seen_.emplace(key, k);
        return k;
    }

private:
    Compiled& c_;
    bool quantify_;
    std::map<std::tuple<int, int, int, int>, int> seen_;

    int var_index(const std::string& n)
    {
        auto it = std::find(c_.vars.begin(), c_.vars.end(), n);
        if (it == c_.vars.end()) throw UnboundVariable(n);
        return static_cast<int>(it - c_.vars.begin());
    }
};

}  // namespace

Compiled compile(const Law& law, bool quantify_generators)
{
    Compiled c;
    bool gens = quantify_generators && law.mentions_generators();
    if (gens) c.vars = {"a", "b"};
    for (auto& v : law.vars) c.vars.push_back(v);

    Builder b(c, gens);
    auto rel = [&](const Relation& r) {
        Compiled::Rel out;
        out.l = b.add(r.lhs);
        out.r = b.add(r.rhs);
        out.op = r.op;
        out.level = std::max(c.ops[static_cast<std::size_t>(out.l)].level, c.ops[static_cast<std::size_t>(out.r)].level);
        out.text = r.str();
        return out;
    };
    for (auto& h : law.hyps) c.hyps.push_back(rel(h));
    for (auto& k : law.concls) c.concls.push_back(rel(k));

    std::size_t nv = c.vars.size();
    c.order.resize(c.ops.size());
    for (std::size_t i = 0; i < c.ops.size(); ++i) c.order[i] = static_cast<int>(i);
    // stable so children keep preceding parents within a level
    std::stable_sort(c.order.begin(), c.order.end(), [&](int x, int y) {
        return c.ops[static_cast<std::size_t>(x)].level < c.ops[static_cast<std::size_t>(y)].level;
    });
    c.level_begin.assign(nv + 2, 0);
    std::size_t pos = 0;
    for (std::size_t lv = 0; lv < nv + 2; ++lv) {
        c.level_begin[lv] = pos;
        while (pos < c.order.size() && c.ops[static_cast<std::size_t>(c.order[pos])].level + 1 == static_cast<int>(lv))
            ++pos;
    }
    return c;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// catalog

namespace {

// Expands OT(x,y), NB(x,y) and FK(x,y) in law text into the fork-style
// operators; an argument equal to "id" is dropped from its product.
std::string expand_ops(const std::string& s)
{
    std::string out;
    std::size_t i = 0;
    while (i < s.size()) {
        bool boundary = i == 0 || !(std::isalnum(static_cast<unsigned char>(s[i - 1])) || s[i - 1] == '_');
        std::string op = s.substr(i, 3);
        if (boundary && (op == "OT(" || op == "NB(" || op == "FK(")) {
            std::size_t j = i + 3;
            int depth = 0;
            std::size_t comma = std::string::npos;
            for (; j < s.size(); ++j) {
                if (s[j] == '(') ++depth;
                else if (s[j] == ')') {
                    if (depth == 0) break;
                    --depth;
                } else if (s[j] == ',' && depth == 0) {
                    comma = j;
                }
            }
            if (comma == std::string::npos || j >= s.size())
                throw std::logic_error("malformed operator macro in '" + s + "'");
            auto trim = [](std::string t) {
                t.erase(0, t.find_first_not_of(' '));
                t.erase(t.find_last_not_of(' ') + 1);
                return t;
            };
            std::string x = trim(expand_ops(s.substr(i + 3, comma - i - 3)));
            std::string y = trim(expand_ops(s.substr(comma + 1, j - comma - 1)));
            auto prod = [](std::vector<std::string> fs) {
                std::string r;
                for (auto& f : fs) {
                    if (f == "id") continue;
                    if (!r.empty()) r += ";";
                    r += f;
                }
                return r.empty() ? std::string("id") : r;
            };
            std::string l, r;
            if (op == "OT(") {
                l = prod({"a", "(" + x + ")", "conv(a)"});
                r = prod({"b", "(" + y + ")", "conv(b)"});
                if (x == "id") l = "a;conv(a)";
                if (y == "id") r = "b;conv(b)";
            } else if (op == "NB(") {
                l = x == "id" ? "conv(a)" : "(" + x + ");conv(a)";
                r = y == "id" ? "conv(b)" : "(" + y + ");conv(b)";
            } else {
                l = x == "id" ? "a" : "a;(" + x + ")";
                r = y == "id" ? "b" : "b;(" + y + ")";
            }
            out += "(" + l + " & " + r + ")";
            i = j + 1;
        } else {
            out += s[i++];
        }
    }
    return out;
}

struct LawSpec {
    std::string id;
    std::string vars;
    std::vector<std::string> hyps;
    std::vector<std::string> concls;
    std::string gens;                                     // generator names used
    std::vector<std::pair<std::string, std::string>> defs;  // abbreviations, in order
    Signature sig = Signature::J;
    bool theorem = true;
    std::string note;
};

std::vector<std::string> words(const std::string& s)
{
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

// Hypothesis macros: Q, D, U, Fn(t), Pm(t).
std::vector<std::string> expand_macro(const std::string& h)
{
    if (h == "Q") return {"conv(a);a <= id", "conv(b);b <= id", "1 = conv(a);b"};
    if (h == "D") return {"1 = a;1", "1 = b;1"};
    if (h == "U") return {"a;conv(a) & b;conv(b) <= id"};
    if (h.size() > 4 && h.back() == ')' && (h.rfind("Fn(", 0) == 0 || h.rfind("Pm(", 0) == 0)) {
        std::string t = h.substr(3, h.size() - 4);
        if (h[0] == 'F') return {"conv(" + t + ");(" + t + ") <= id"};
        return {"conv(" + t + ");(" + t + ") = id", "(" + t + ");conv(" + t + ") = id"};
    }
    return {h};
}

Law build(const LawSpec& s)
{
    Law law;
    law.id = s.id;
    law.vars = words(s.vars);
    law.sig = s.sig;
    law.theorem = s.theorem;
    law.note = s.note;
    Mode mode = s.sig == Signature::RA ? Mode::RA : Mode::J;

    std::map<std::string, Term> subst;
    for (auto& g : words(s.gens)) subst[g] = generator(g);
    for (auto& [name, text] : s.defs) subst[name] = substitute(parse_term(expand_ops(text), mode), subst);

    auto rel = [&](const std::string& text) {
        Relation r = parse_relation(expand_ops(text), mode);
        r.lhs = substitute(r.lhs, subst);
        r.rhs = substitute(r.rhs, subst);
        return r;
    };
    for (auto& h : s.hyps)
        for (auto& e : expand_macro(h)) law.hyps.push_back(rel(e));
    for (auto& k : s.concls)
        for (auto& e : expand_macro(k)) law.concls.push_back(rel(e));

    std::vector<std::string> used;
    for (auto* rs : {&law.hyps, &law.concls})
        for (auto& r : *rs) {
            r.lhs.collect_vars(used);
            r.rhs.collect_vars(used);
        }
    for (auto& v : used)
        if (std::find(law.vars.begin(), law.vars.end(), v) == law.vars.end())
            throw std::logic_error("law " + s.id + ": undeclared variable " + v);
    return law;
}

const char* const kPr = "(u;conv(a) & x;conv(b));(a;v & b;y)";

std::vector<LawSpec> specs()
{
    std::string pr = kPr;
    std::vector<LawSpec> L;
    auto add = [&](LawSpec s) { L.push_back(std::move(s)); };

    // relation algebra axioms
    auto ra = [&](const std::string& id, const std::string& vars, const std::string& eq) {
        LawSpec s{id, vars, {}, {eq}};
        s.sig = Signature::RA;
        add(s);
    };
    ra("ra1", "x y", "x + y = y + x");
    ra("ra2", "x y z", "x + (y + z) = (x + y) + z");
    ra("ra3", "x y", "-(-(x) + -(y)) + -(-(x) + y) = x");
    ra("ra4", "x y z", "x;(y;z) = (x;y);z");
    ra("ra5", "x y z", "(x + y);z = x;z + y;z");
    ra("ra6", "x", "x;id = x");
    ra("ra7", "x", "conv(conv(x)) = x");
    ra("ra8", "x y", "conv(x + y) = conv(x) + conv(y)");
    ra("ra9", "x y", "conv(x;y) = conv(y);conv(x)");
    ra("ra10", "x y", "conv(x);-(x;y) + -(y) = -(y)");
    ra("ra11", "x y", "x & y = -(-(x) + -(y))");
    ra("ra12", "", "1 = id + -(id)");
    ra("ra13", "", "0 = -(1)");

    // J-algebra axioms
    add({"ax-bassoc", "x y z", {}, {"x & (y & z) = (x & y) & z"}});
    add({"ax-comm", "x y", {}, {"x & y = y & x"}});
    add({"ax-idem", "x", {}, {"x & x = x"}});
    add({"ax-assoc", "x y z", {}, {"x;(y;z) = (x;y);z"}});
    add({"ax-id", "x", {}, {"x;id = x"}});
    add({"ax-mon", "x y z", {}, {"(x & y);z = (x & y);z & y;z"}});
    add({"ax-inv", "x", {}, {"conv(conv(x)) = x"}});
    add({"ax-conv-comp", "x y", {}, {"conv(x;y) = conv(y);conv(x)"}});
    add({"ax-conv-meet", "x y", {}, {"conv(x & y) = conv(x) & conv(y)"}});
    add({"ax-rot", "x y z", {}, {"x;y & z = (z;conv(y) & x);(y & conv(x);z) & z"}});
    add({"ax-zero", "x", {}, {"0 & x = 0"}});
    add({"ax-one", "x", {}, {"x & 1 = x"}});
    add({"ax-norm", "x", {}, {"x;0 = 0"}});

    // elementary propositions
    add({"p1", "x y z", {"x <= y", "y <= z"}, {"x <= z"}});
    add({"p1-refl", "x", {}, {"x <= x"}});
    add({"p1-antisym", "x y", {"x <= y", "y <= x"}, {"x = y"}});
    add({"p2", "x y", {}, {"x & y <= y", "x & y <= x"}});
    add({"p3", "x y z", {"x <= y", "x <= z"}, {"x <= y & z"}});
    add({"p4", "x y u v", {"x <= y", "u <= v"}, {"x & u <= y & v"}});
    add({"p5", "x", {}, {"conv(0) = 0", "conv(1) = 1", "conv(id) = id", "0;x = 0", "id;x = x"}});
    add({"p6", "x y z", {"x <= y"}, {"conv(x) <= conv(y)", "x;z <= y;z", "z;x <= z;y"}});
    add({"p7", "u v x y", {}, {"(u & v);(x & y) <= u;x & v;y"}});
    add({"p8", "x y z", {}, {"x;y & z <= (z;conv(y) & x);y", "x;y & z <= x;(y & conv(x);z)"}});
    add({"p9", "x", {}, {"x <= x;1", "x <= 1;x"}});
    add({"p10", "x", {}, {"x <= x;conv(x);x", "1;x;1 = 1;conv(x);1"}});
    add({"cyc1", "x y z", {}, {"(y;z & x);1 = (x;conv(z) & y);1", "1;(y;z & x) = 1;(conv(y);x & z)"}});
    // The range half as it is usually quoted; a counterexample exists among
    // tree relations (x = y = conv(a), z = conv(a;b;b)).
    add({"cyc1-range", "x y z", {}, {"1;(y;z & x) = 1;(x;conv(z) & y)"}, "", {}, Signature::J, false,
         "not valid: the range of y;z & x is matched by conv(y);x & z"});
    add({"i1", "x y z", {}, {"x;1 & y;z = (x;1 & y);z", "y;z & 1;x = y;(z & 1;x)"}});
    add({"icyc", "u v x y", {}, {"id & u;v & x;y <= id & (u & conv(v));(conv(u);x & v;conv(y));(y & conv(x))"}});
    add({"exch", "u v x y", {}, {"id & (u & x);(v & y) = id & (u & conv(v));(conv(x) & y)",
                                "id & x;y = id & (x & conv(y));(conv(x) & y)"}});

    // functional and permutational elements
    add({"func(i)", "", {}, {"Fn(0)", "Fn(id)", "Pm(id)"}});
    add({"func(ii)", "y x", {"Fn(y)", "x <= y"}, {"Fn(x)"}});
    add({"func(iii)", "x y", {"Fn(x)", "Fn(y)"}, {"Fn(x;y)"}});
    add({"func(iv)", "x y", {"Pm(x)", "Pm(y)"}, {"Pm(x;y)", "Pm(conv(x))"}});
    add({"func(v)", "x y z", {"Fn(x)", "Fn(y)", "Fn(z)"}, {"x;(y;z) = (x;y);z", "id;x = x", "x;id = x"}});
    add({"func(v)-pm", "x", {"Pm(x)"}, {"x;conv(x) = id", "conv(x);x = id", "id;x = x", "x;id = x"}});
    add({"grp", "e x y",
         {"e <= id", "x;conv(x) = e", "conv(x);x = e", "y;conv(y) = e", "conv(y);y = e"},
         {"e;conv(e) = e", "conv(e);e = e", "(x;y);conv(x;y) = e", "conv(x;y);(x;y) = e", "e;x = x", "x;e = x",
          "conv(x);conv(conv(x)) = e", "conv(conv(x));conv(x) = e"},
         "", {}, Signature::J, true, "e is quantified over the model's elements only"});
    add({"f-dist", "x y", {"Fn(a)"}, {"a;(x & y) = a;x & a;y", "(x & y);conv(a) = x;conv(a) & y;conv(a)"}});
    add({"prop1a", "", {"1 = conv(a);b", "Fn(a)"}, {"conv(a);a = id"}});
    add({"prop2a", "x y", {"1 = x;1", "1 = y;1", "x;conv(x) & y;conv(y) <= id"}, {"x;conv(x) & y;conv(y) = id"}});
    add({"f1", "x", {"Fn(a)"}, {"a & (a & x);1 <= x"}});
    add({"q1", "x", {"Fn(a)", "Fn(b)", "x <= conv(a);b"}, {"x = conv(a);(id & a;x;conv(b));b"}});

    // pairing
    add({"1/2pr", "u v x y", {"Fn(a)", "Fn(b)"}, {"u;v & x;y >= " + pr}});
    add({"pair(i)", "c d u v y x", {"Fn(c)", "Fn(d)", "u <= conv(c);d", "v;conv(y) <= conv(a);b"}, {"u;v & x;y <= " + pr}});
    add({"pair(ii)", "c d u v y x", {"Fn(a)", "Fn(b)", "Fn(c)", "Fn(d)", "u <= conv(c);d", "v;conv(y) <= conv(a);b"},
         {"u;v & x;y = " + pr}});
    add({"pair2(i)", "c d u v x y",
         {"Fn(c)", "Fn(d)", "u;v & x;y <= conv(c);d", "conv(u);x & v;conv(y) <= conv(a);b"}, {"u;v & x;y <= " + pr}});
    add({"pair2(ii)", "c d u v x y",
         {"Fn(a)", "Fn(b)", "Fn(c)", "Fn(d)", "u;v & x;y <= conv(c);d", "conv(u);x & v;conv(y) <= conv(a);b"},
         {"u;v & x;y = " + pr}});
    add({"pair2(iii)", "c d u v x y", {"Fn(a)", "Fn(b)", "1 = conv(a);b", "Fn(c)", "Fn(d)", "u;v & x;y <= conv(c);d"},
         {"u;v & x;y = " + pr}});
    add({"Pr", "u v x y", {"Q"}, {"u;v & x;y = " + pr}});

    // fork axioms
    add({"F1", "x y", {"Q", "U"}, {"NB(x,y) = x;NB(id,1) & y;NB(1,id)"}});
    add({"F2", "u v x y", {"Q", "U"}, {"u;conv(v) & x;conv(y) = NB(u,x);conv(NB(v,y))"}});
    add({"F3", "", {"Q", "U"}, {"id >= NB(conv(NB(id,1)),conv(NB(1,id)))"}});
    add({"jt", "", {"Q", "D", "U"},
         {"NB(id,1);a = id", "NB(1,id);b = id", "NB(a,b) = id"}});

    // fork-style operators
    add({"f-closed", "x y", {"Fn(a)", "Fn(b)", "U", "Fn(x)", "Fn(y)"}, {"Fn(FK(x,y))", "Fn(OT(x,y))"}});
    add({"fgh-closed", "x y z", {"Q", "U", "Fn(x)", "Fn(y)", "z <= x"},
         {"Fn(0)", "Fn(id)", "Fn(a)", "Fn(b)", "Fn(z)", "Fn(x & y)", "Fn(x;y)", "Fn(FK(x,y))", "Fn(OT(x,y))"}});
    add({"g-id", "", {"a;conv(a) & b;conv(b) = id"}, {"OT(id,id) = id"}});
    add({"gg-rule", "u v x y", {"Q"},
         {"OT(u,v);OT(x,y) = OT(u;x,v;y)", "OT(id,x);OT(y,id) = OT(y,x)", "OT(x,id);OT(id,y) = OT(x,y)"}});
    add({"g-closed", "x y", {"Q", "D", "U", "Pm(x)", "Pm(y)"}, {"Pm(OT(x,y))"}});
    add({"fg-rule", "x y u v", {"Q"},
         {"NB(x,y);OT(u,v) = NB(x;u,y;v)", "NB(x,y);OT(u,id) = NB(x;u,y)", "NB(x,y);OT(id,v) = NB(x,y;v)"}});
    add({"fh-rule", "u v x y", {"Q"}, {"NB(u,v);FK(x,y) = u;x & v;y"}});
    add({"Ux0K", "x", {"Q"}, {"(conv(a) & conv(b));OT(x,id);a = x"}});
    add({"sub0", "", {"Q"}, {"(conv(a) & conv(b));a = id", "(conv(a) & conv(b));b = id"}});
    add({"pok(i)", "y x", {"Q", "D", "1 = y;1"}, {"OT(x,y);a = a;x"}});
    add({"pok(ii)", "x y", {"Q", "D", "1 = x;1"}, {"OT(x,y);b = b;y"}});
    add({"pok(iii)", "y", {"Q", "D", "1 = y;1"}, {"OT(id,y);a = a"}});
    add({"pok(iv)", "x", {"Q", "D", "1 = x;1"}, {"OT(x,id);b = b"}});
    add({"pok(v)", "x y", {"Q", "D"}, {"OT(x,id);a = a;x", "OT(id,y);b = b;y"}});
    add({"swap", "", {"Q", "D"}, {"P;a = b", "P;b = a"}, "P"});
    add({"perms", "", {"Q", "D", "U"},
         {"Fn(K)", "Fn(L)", "Fn(U)", "Fn(conv(U))", "Pm(P)", "Pm(P0)", "Pm(R)", "Pm(R0)", "Pm(A)", "Pm(B)", "Pm(C)",
          "Pm(pi0)"},
         "K L U P P0 R R0 A B C pi0"});
    add({"Rg", "x", {"Q", "D", "U"},
         {"A;OT(id,x);conv(A) = OT(id,OT(id,x))", "conv(A);OT(x,id);A = OT(OT(x,id),id)"}, "A"});

    // presentations of F, T and V
    const std::string tgens = "A B C pi0 X2 X3 C2 C3 pi1 pi2 pi3";
    auto ta = [&](const std::string& id, const std::string& eq) {
        add({id, "", {"Q", "D", "U"}, {eq}, tgens});
    };
    ta("ta1", "conv(B);A;X2;conv(conv(B);A);conv(X2) = id");
    ta("ta2", "conv(B);A;X3;conv(conv(B);A);conv(X3) = id");
    ta("ta3", "C = C2;B");
    ta("ta4", "X2;C2 = C3;B");
    ta("ta5", "A;C = C2;C2");
    ta("ta6", "C;C;C = id");
    ta("ta7", "pi1;pi1 = id");
    ta("ta8", "pi3;pi1 = pi1;pi3");
    ta("ta9", "pi1;pi2;pi1;pi2;pi1;pi2 = id");
    ta("ta10", "pi1;X3 = X3;pi1");
    ta("ta11", "X2;pi1 = pi1;pi2;B");
    ta("ta12", "B;pi2 = pi3;B");
    ta("ta13", "C3;pi1 = pi2;C3");
    ta("ta14", "C2;pi1;C2;pi1;C2;pi1 = id");

    // presentation of M
    add({"M-inv", "", {"Q", "D", "U"}, {"P;P = id", "P;R;P;R;P;R = id", "R;P;R;P;R;P = id"}, "P R"});
    add({"M-comm", "x y", {"Q", "Fn(x)", "Fn(y)"}, {"OT(x,id);OT(id,y) = OT(id,y);OT(x,id)"}});
    add({"M-split", "x", {"Q", "D", "U", "Fn(x)"}, {"x;U = U;OT(x,id);OT(id,x)"}, "U"});
    add({"M-recon", "x", {"Q", "D", "U", "Fn(x)"}, {"x = U;OT(x,id);OT(id,x);K0;L1"}, "U K L",
         {{"K0", "OT(K,id)"}, {"L1", "OT(id,L)"}}});
    add({"M-rewrite", "", {"Q", "D", "U"},
         {"U;K = id", "U;L = id", "P0;K;K = K;L", "P0;K;L = K;K", "P0;L = L", "R0;K;K;K = K;K",
          "R0;K;K;L = K;L;K", "R0;K;L = K;L;L", "R0;L = L"},
         "U K L P0 R0"});
    add({"same", "", {"Q", "D", "U"},
         {"P = U;P0;K", "R = U;R0;K", "P0 = U;R;P;R;R;K;P;R;R;K;R;P;R;K;R",
          "R0 = U;R;P;R;R;R;P;R;K;R;K;R;R;K;R;R;K;P;R;P;R;R"},
         "U K P R P0 R0"});

    // direct products
    add({"J", "u v x y", {"conv(u);x & v;conv(y) <= conv(a);b"}, {"u;v & x;y <= (u;conv(a) & x;conv(b));(a;v & b;y)"},
         "", {}, Signature::J, false, "fails in some finite relation algebras"});
    add({"L", "x20 x03 x21 x13 x24 x43", {},
         {"x20;x03 & x21;x13 & x24;x43 <= x20;(x02;x21 & x03;x31 & (x02;x24 & x03;x34);(x42;x21 & x43;x31));x13"}, "",
         {{"x02", "conv(x20)"}, {"x31", "conv(x13)"}, {"x34", "conv(x43)"}, {"x42", "conv(x24)"}}, Signature::J, false,
         "fails in some finite relation algebras"});
    add({"M", "x01 x02 x05 x52 x21 x26 x61", {},
         {"x01 & (x02 & x05;x52);(x21 & x26;x61) <= x05;((x50;x01 & x52;x21);x16 & x52;x26 & x50;(x01;x16 & x02;x26));x61"},
         "", {{"x50", "conv(x05)"}, {"x16", "conv(x61)"}}, Signature::J, false,
         "fails in some finite relation algebras"});
    const char* kt[] = {"u;v & x;y", "u & x;y;conv(v)", "v & conv(u);x;y", "x & u;v;conv(y)", "y & conv(x);u;v"};
    const char* kid[] = {"K(i)", "K(ii)", "K(iii)", "K(iv)", "K(v)"};
    for (int i = 0; i < 5; ++i) {
        add({kid[i], "c d u v x y",
             {"conv(a);a <= id", "conv(b);b <= id", "a;1 = b;1", "a;conv(a) & b;conv(b) <= id",
              "conv(a);1;b = conv(a);b", "Fn(c)", "Fn(d)", std::string(kt[i]) + " <= conv(c);d",
              "conv(u);x & v;conv(y) <= conv(a);b"},
             {"u;v & x;y = " + pr}, "", {}, Signature::J, false, "holds in every representable algebra"});
    }
    return L;
}

}  // namespace

const std::vector<Law>& law_catalog()
{
    static const std::vector<Law> laws = [] {
        std::vector<Law> out;
        for (auto& s : specs()) out.push_back(build(s));
        return out;
    }();
    return laws;
}

const Law* find_law(const std::string& id)
{
    for (auto& l : law_catalog())
        if (l.id == id) return &l;
    return nullptr;
}

}  // namespace qra
