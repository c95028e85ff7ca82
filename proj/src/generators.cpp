#include "qra/thompson.hpp"
#include "qra/tree.hpp"

#include <functional>
#include <stdexcept>

namespace qra {

namespace {

Term product(std::initializer_list<Term> fs)
{
    std::vector<Term> kept;
    for (auto& f : fs)
        if (f.kind() != Kind::Id) kept.push_back(f);
    return comp_all(kept);
}

}  // namespace

Term nabla(const Term& x, const Term& y)
{
    return meet(product({x, conv(gen_a())}), product({y, conv(gen_b())}));
}

Term otimes(const Term& x, const Term& y)
{
    return meet(product({gen_a(), x, conv(gen_a())}), product({gen_b(), y, conv(gen_b())}));
}

Term fkc(const Term& x, const Term& y) { return meet(product({gen_a(), x}), product({gen_b(), y})); }

Term defer0(const Term& x) { return otimes(x, id()); }
Term defer1(const Term& x) { return otimes(id(), x); }

namespace {

struct Table {
    std::vector<std::string> order;
    std::map<std::string, Term> terms;

    void add(const std::string& n, const Term& t)
    {
        order.push_back(n);
        terms.emplace(n, t);
    }
};

const Table& table()
{
    static const Table t = [] {
        Table g;
        auto at = [&](const std::string& n) { return g.terms.at(n); };
        g.add("K", gen_a());
        g.add("L", gen_b());
        g.add("U", parse_mapsto("0->00"));
        g.add("P", parse_mapsto("01->10"));
        g.add("P0", defer0(at("P")));
        g.add("A", parse_mapsto("0(12)->(01)2"));
        g.add("R", at("A"));
        g.add("R0", defer0(at("R")));
        g.add("B", defer1(at("A")));
        g.add("C", parse_mapsto("0(12)->1(20)"));
        g.add("pi0", parse_mapsto("0(12)->1(02)"));
        const Term A = at("A"), B = at("B"), C = at("C");
        const Term cA = conv(A);
        g.add("X1", B);
        g.add("X2", comp_all({A, B, cA}));
        g.add("X3", comp_all({A, A, B, cA, cA}));
        g.add("C1", C);
        g.add("C2", comp_all({B, C, cA}));
        g.add("C3", comp_all({B, B, C, cA, cA}));
        g.add("pi1", comp_all({at("C2"), at("pi0"), conv(at("C2"))}));
        g.add("pi2", comp_all({A, at("pi1"), cA}));
        g.add("pi3", comp_all({A, A, at("pi1"), cA, cA}));
        g.add("u", parse_mapsto("(01)(2(34))->(10)(4(23))"));
        g.add("v", parse_mapsto("(01)(23)->(03)(12)"));
        g.add("t0001", parse_mapsto("(01)2->(10)2"));
        g.add("t011011", parse_mapsto("(01)(23)->(03)(12)"));
        g.add("t100", parse_mapsto("(01)2->(21)0"));
        return g;
    }();
    return t;
}

}  // namespace

const std::map<std::string, Term>& generator_terms() { return table().terms; }

const Term& generator(const std::string& name)
{
    auto it = table().terms.find(name);
    if (it == table().terms.end()) throw std::out_of_range("unknown generator '" + name + "'");
    return it->second;
}

std::vector<std::string> generator_names() { return table().order; }

const std::vector<std::pair<std::string, std::string>>& generator_closed_forms()
{
    static const std::vector<std::pair<std::string, std::string>> forms = {
        {"K", "a"},
        {"L", "b"},
        {"U", "conv(a) & conv(b)"},
        {"P", "a;conv(b) & b;conv(a)"},
        {"P0", "a;P;conv(a) & b;conv(b)"},
        {"A", "a;conv(a);conv(a) & b;a;conv(b);conv(a) & b;b;conv(b)"},
        {"R", "A"},
        {"R0", "a;R;conv(a) & b;conv(b)"},
        {"B", "a;conv(a) & b;A;conv(b)"},
        {"C", "a;conv(b);conv(b) & b;a;conv(a) & b;b;conv(a);conv(b)"},
        {"pi0", "a;conv(a);conv(b) & b;a;conv(a) & b;b;conv(b);conv(b)"},
        {"X1", "B"},
        {"X2", "A;B;conv(A)"},
        {"X3", "A;A;B;conv(A);conv(A)"},
        {"C1", "C"},
        {"C2", "B;C;conv(A)"},
        {"C3", "B;B;C;conv(A);conv(A)"},
        {"pi1", "C2;pi0;conv(C2)"},
        {"pi2", "A;pi1;conv(A)"},
        {"pi3", "A;A;pi1;conv(A);conv(A)"},
        {"u", "a;a;conv(b);conv(a) & a;b;conv(a);conv(a) & b;a;conv(a);conv(b);conv(b) & b;b;a;conv(b);conv(b);conv(b) & b;b;b;conv(a);conv(b)"},
        {"v", "a;a;conv(a);conv(a) & a;b;conv(a);conv(b) & b;a;conv(b);conv(b) & b;b;conv(b);conv(a)"},
        {"t0001", "a;a;conv(b);conv(a) & a;b;conv(a);conv(a) & b;conv(b)"},
        {"t011011", "v"},
        {"t100", "a;a;conv(b) & a;b;conv(b);conv(a) & b;conv(a);conv(a)"},
    };
    return forms;
}

Term expand_generators(const Term& t) { return substitute(t, table().terms); }

}  // namespace qra
