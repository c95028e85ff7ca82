#include "qra/branch_model.hpp"
#include "qra/model.hpp"
#include "qra/term.hpp"
#include "qra/thompson.hpp"
#include "qra/tree.hpp"

#include <doctest.h>

#include <functional>
#include <random>
#include <regex>

using namespace qra;

namespace {

Term random_term(std::mt19937_64& rng, int depth, bool ra)
{
    int leaf_kinds = 6;
    int pick = depth == 0 ? static_cast<int>(rng() % leaf_kinds)
                          : static_cast<int>(rng() % (leaf_kinds + (ra ? 6 : 4)));
    static const char* names[] = {"x", "y", "z", "u1", "long_name"};
    switch (pick) {
    case 0: return zero();
    case 1: return top();
    case 2: return id();
    case 3: return gen_a();
    case 4: return gen_b();
    case 5: return var(names[rng() % 5]);
    case 6: return conv(random_term(rng, depth - 1, ra));
    case 7: return comp(random_term(rng, depth - 1, ra), random_term(rng, depth - 1, ra));
    case 8: return meet(random_term(rng, depth - 1, ra), random_term(rng, depth - 1, ra));
    case 9: return comp(random_term(rng, depth - 1, ra), random_term(rng, depth - 1, ra));
    case 10: return join(random_term(rng, depth - 1, ra), random_term(rng, depth - 1, ra));
    default: return compl_(random_term(rng, depth - 1, ra));
    }
}

// Path to every leaf of e, written as the list of generators from the root.
void paths_oracle(const TreeExpr& e, std::vector<Term> prefix, std::vector<std::pair<char, Term>>& out)
{
    if (e.is_leaf()) {
        out.emplace_back(e.symbol(), comp_all(prefix));
        return;
    }
    auto l = prefix, r = prefix;
    l.push_back(gen_a());
    r.push_back(gen_b());
    paths_oracle(e.left(), l, out);
    paths_oracle(e.right(), r, out);
}

TreeExpr random_tree(std::mt19937_64& rng, char& next, int depth)
{
    if (depth == 0 || rng() % 3 == 0) return TreeExpr::leaf(next++);
    TreeExpr l = random_tree(rng, next, depth - 1);
    return TreeExpr::pair(l, random_tree(rng, next, depth - 1));
}

bool same_relation(const Term& s, const Term& t)
{
    BranchModel m;
    return m.equal(eval(m, s, {}), eval(m, t, {}));
}

}  // namespace

TEST_CASE("parse examples")
{
    CHECK(parse_term("conv(a);b") == comp(conv(gen_a()), gen_b()));
    CHECK(parse_term("a;conv(a) & b;conv(b)") ==
          meet(comp(gen_a(), conv(gen_a())), comp(gen_b(), conv(gen_b()))));
    CHECK_THROWS_AS(parse_term("x + -(y)", Mode::J), RaOnlyOperator);
    CHECK(parse_term("x + -(y)", Mode::RA) == join(var("x"), compl_(var("y"))));
}

TEST_CASE("precedence and associativity")
{
    CHECK(parse_term("x;y;z") == comp(comp(var("x"), var("y")), var("z")));
    CHECK(parse_term("x & y;z") == meet(var("x"), comp(var("y"), var("z"))));
    CHECK(parse_term("x + y & z") == join(var("x"), meet(var("y"), var("z"))));
    CHECK(parse_term("conv(x);y") == comp(conv(var("x")), var("y")));
    CHECK(parse_term("(x)") == var("x"));
}

TEST_CASE("syntax errors carry a position")
{
    for (const char* bad : {"", "x;", "conv(x", "x & & y", "x)", "(", "x $ y"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_term(bad), SyntaxError);
    }
    try {
        parse_term("x ; ;");
        FAIL("no error");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("format examples")
{
    CHECK(format_term(id()) == "id");
    CHECK(format_term(zero()) == "0");
    CHECK(format_term(top()) == "1");
    CHECK(format_term(generator("A")) == "a;conv(a);conv(a) & b;a;conv(b);conv(a) & b;b;conv(b)");
    CHECK(format_term(comp(var("x"), comp(var("y"), var("z")))) == "x;(y;z)");
    CHECK(format_term(meet(var("x"), meet(var("y"), var("z")))) == "x & (y & z)");
}

TEST_CASE("round trip over random terms")
{
    std::mt19937_64 rng(7);
    for (int k = 0; k < 10000; ++k) {
        bool ra = k % 2;
        Term t = random_term(rng, static_cast<int>(rng() % 9), ra);
        std::string s = format_term(t);
        CAPTURE(s);
        REQUIRE(parse_term(s, ra ? Mode::RA : Mode::J) == t);
    }
}

TEST_CASE("term predicates")
{
    CHECK(parse_term("a;b;id").is_path());
    CHECK_FALSE(parse_term("a;conv(b)").is_path());
    CHECK(parse_term("x & -(y)").is_ra_only());
    CHECK_FALSE(parse_term("x & conv(y)").is_ra_only());
    CHECK(parse_term("x;(y & x)").size() == 5);
    std::vector<std::string> vs;
    parse_term("y;x & conv(y);z").collect_vars(vs);
    CHECK(vs == std::vector<std::string>{"y", "x", "z"});
    CHECK(parse_term("x;y").hash() == comp(var("x"), var("y")).hash());
}

TEST_CASE("substitute")
{
    Term t = substitute(parse_term("x;conv(y)"), {{"x", gen_a()}, {"y", parse_term("a;b")}});
    CHECK(t == parse_term("a;conv(a;b)"));
}

TEST_CASE("tree expressions")
{
    CHECK(parse_tree_expr("0(12)") ==
          TreeExpr::pair(TreeExpr::leaf('0'), TreeExpr::pair(TreeExpr::leaf('1'), TreeExpr::leaf('2'))));
    CHECK(parse_tree_expr("0") == TreeExpr::leaf('0'));
    CHECK(parse_tree_expr("(01)(23)") ==
          TreeExpr::pair(TreeExpr::pair(TreeExpr::leaf('0'), TreeExpr::leaf('1')),
                         TreeExpr::pair(TreeExpr::leaf('2'), TreeExpr::leaf('3'))));
    CHECK(parse_tree_expr("(01)(23)").str() == "(01)(23)");
    CHECK_THROWS(parse_tree_expr("00"));
    CHECK_NOTHROW(parse_tree_expr("00", {true}));
    CHECK_THROWS(parse_tree_expr("0(1"));
}

TEST_CASE("leaf paths examples")
{
    auto p = leaf_paths(parse_tree_expr("0(12)"));
    REQUIRE(p.size() == 3);
    CHECK(format_term(p[0].second) == "a");
    CHECK(format_term(p[1].second) == "b;a");
    CHECK(format_term(p[2].second) == "b;b");
    auto q = leaf_paths(parse_tree_expr("0"));
    REQUIRE(q.size() == 1);
    CHECK(q[0].second == id());
    auto r = leaf_paths(parse_tree_expr("(01)2"));
    CHECK(format_term(r[0].second) == "a;a");
    CHECK(format_term(r[1].second) == "a;b");
    CHECK(format_term(r[2].second) == "b");
}

TEST_CASE("leaf paths agree with the recursion oracle")
{
    std::mt19937_64 rng(3);
    for (int k = 0; k < 300; ++k) {
        char next = '0';
        TreeExpr e = random_tree(rng, next, 5);
        std::vector<std::pair<char, Term>> want;
        paths_oracle(e, {}, want);
        auto got = leaf_paths(e);
        CAPTURE(e.str());
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].first == want[i].first);
            CHECK(got[i].second.is_path());
            CHECK(same_relation(got[i].second, want[i].second));
        }
    }
}

TEST_CASE("mapsto examples")
{
    CHECK(same_relation(mapsto(parse_tree_expr("01"), parse_tree_expr("0")), gen_a()));
    CHECK(same_relation(parse_mapsto("0->00"), meet(conv(gen_a()), conv(gen_b()))));
    CHECK(same_relation(parse_mapsto("0(12)->(01)2"), generator("A")));
    CHECK(mapsto(parse_tree_expr("0"), parse_tree_expr("1")) == top());
}

TEST_CASE("mapsto of a tree onto itself is the identity")
{
    std::mt19937_64 rng(11);
    for (int k = 0; k < 40; ++k) {
        char next = '0';
        TreeExpr e = random_tree(rng, next, 3);
        CAPTURE(e.str());
        CHECK(same_relation(mapsto(e, e), id()));
    }
}

TEST_CASE("conv_path pushes converse to the generators")
{
    std::function<bool(const Term&)> pushed = [&](const Term& t) {
        switch (t.kind()) {
        case Kind::Conv: return t.left().kind() == Kind::GenA || t.left().kind() == Kind::GenB;
        case Kind::Comp: return pushed(t.left()) && pushed(t.right());
        default: return true;
        }
    };
    for (const char* s : {"a;b;b", "b", "a;(b;a)", "id"}) {
        Term p = parse_term(s);
        Term c = conv_path(p);
        CAPTURE(s);
        CHECK(pushed(c));
        CHECK(same_relation(c, conv(p)));
    }
}

TEST_CASE("dot output")
{
    std::string one = emit_dot(gen_a());
    std::regex edge(R"re(-> n\d+ \[label="(a|b)"\])re");
    auto count = [&](const std::string& s) {
        return std::distance(std::sregex_iterator(s.begin(), s.end(), edge), std::sregex_iterator());
    };
    CHECK(count(one) == 1);
    CHECK(one.find("digraph") == 0);

    // three parallel chains of lengths 3, 4 and 3
    std::string a = emit_dot(generator("A"));
    CHECK(count(a) == 10);
    CHECK(a.find("doublecircle") != std::string::npos);

    // id & id: both chains are empty, so source and sink are one node
    std::string ii = emit_dot(meet(id(), id()));
    CHECK(count(ii) == 0);
    CHECK(ii.find("n1") == std::string::npos);
}
