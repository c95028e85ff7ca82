#include "qra/branch_model.hpp"
#include "qra/branchrel.hpp"
#include "qra/model.hpp"
#include "qra/thompson.hpp"

#include <doctest.h>

#include <random>

using namespace qra;

namespace {

using BR = BranchRelation;

Endpoint L(const char* a) { return {Side::L, a}; }
Endpoint R(const char* a) { return {Side::R, a}; }

BR eval_text(const std::string& s)
{
    BranchModel m;
    return eval(m, expand_generators(parse_term(s, Mode::J)), {});
}

// Fixed sample: 20 path-generated relations, then converses and meets
// until there are 40.
const std::vector<BR>& sample40()
{
    static const std::vector<BR> s = [] {
        BranchModel m;
        std::mt19937_64 rng(2024);
        std::vector<BR> v = {BR::identity(), BR::top(), BR::gen_a(), BR::gen_b()};
        while (v.size() < 20) v.push_back(m.sample(rng).second);
        while (v.size() < 40) {
            const BR& x = v[rng() % 20];
            const BR& y = v[rng() % 20];
            v.push_back(rng() & 1 ? converse(x) : meet(x, y));
        }
        return v;
    }();
    return s;
}

}  // namespace

TEST_CASE("constructors and printing")
{
    CHECK(BR::gen_a().str() == "{R.^=L.0}");
    CHECK(converse(BR::gen_a()).str() == "{L.^=R.0}");
    CHECK(BR::zero().str() == "0");
    CHECK(BR::top().constraints().empty());
    CHECK(BR::identity() == BR::from_constraints({Constraint(L(""), R(""))}));
    for (const BR& r : sample40()) CHECK(BR::parse(r.str()) == r);
}

TEST_CASE("constraint orientation")
{
    Constraint c(L("01"), R(""));
    CHECK(c.x == R(""));
    CHECK(c.y == L("01"));
    CHECK(to_string(c) == "R.^=L.01");
    CHECK(endpoint_less(L("1"), R("1")));
    CHECK(endpoint_less(R("1"), L("00")));
}

TEST_CASE("composition examples")
{
    CHECK(equal(compose(converse(BR::gen_a()), BR::gen_a()), BR::identity()));
    CHECK(equal(compose(converse(BR::gen_a()), BR::gen_b()), BR::top()));
    BR a_and_b = meet(BR::gen_a(), BR::gen_b());
    for (const BR& r : {BR::gen_a(), BR::gen_b(), a_and_b, eval_text("A")})
        CHECK(equal(compose(BR::identity(), r), r));
    CHECK(equal(compose(meet(converse(BR::gen_a()), converse(BR::gen_b())), BR::gen_a()), BR::identity()));
    BR p = eval_text("a;conv(b) & b;conv(a)");
    CHECK(equal(compose(p, BR::gen_a()), BR::gen_b()));
    CHECK(compose(BR::zero(), BR::gen_a()).is_zero());
}

TEST_CASE("meet and converse examples")
{
    CHECK(meet(BR::top(), BR::gen_a()) == BR::gen_a());
    BR ab = meet(BR::gen_a(), BR::gen_b());
    CHECK(ab == BR::from_constraints({Constraint(R(""), L("0")), Constraint(R(""), L("1"))}));
    CHECK(entails_bfs(ab, Constraint(L("0"), L("1")), 8));
    CHECK(entails(ab, Constraint(L("0"), L("1"))));
    CHECK(meet(BR::gen_a(), BR::zero()).is_zero());
    CHECK(converse(BR::top()) == BR::top());
    for (const BR& r : sample40()) CHECK(converse(converse(r)) == r);
}

TEST_CASE("entailment examples")
{
    CHECK(entails(BR::gen_a(), Constraint(R("1"), L("01"))));
    BR r = BR::from_constraints({Constraint(L("0"), L(""))});
    CHECK(entails(r, Constraint(L("00"), L(""))));
    CHECK(entails_bfs(r, Constraint(L("00"), L("")), 8));
    CHECK_FALSE(entails(BR::gen_a(), Constraint(R(""), L("1"))));
    CHECK_FALSE(entails_bfs(BR::gen_a(), Constraint(R(""), L("1")), 8));
    // a tree is the pair of its subtrees
    BR up = BR::from_constraints({Constraint(L("0"), R("0")), Constraint(L("1"), R("1"))});
    CHECK(entails(up, Constraint(L(""), R(""))));
    CHECK(entails_bfs(up, Constraint(L(""), R("")), 8));
}

TEST_CASE("order")
{
    CHECK(leq(BR::zero(), BR::gen_a()));
    CHECK_FALSE(leq(BR::top(), BR::gen_a()));
    CHECK(equal(eval_text("a;conv(a) & b;conv(b)"), BR::identity()));
    CHECK(equal(eval_text("conv(a);a"), BR::identity()));
    CHECK(equal(eval_text("a;1"), BR::top()));
    for (const BR& x : sample40())
        for (const BR& y : sample40()) CHECK(leq(x, y) == equal(meet(x, y), x));
}

TEST_CASE("exact entailment agrees with the bounded oracle")
{
    BranchModel m;
    std::mt19937_64 rng(5);
    auto addr = [&] {
        std::string a(rng() % 7, '0');
        for (auto& ch : a) ch = static_cast<char>('0' + (rng() & 1));
        return a;
    };
    std::size_t checked = 0;
    for (int k = 0; k < 200; ++k) {
        BR r = k % 2 ? m.sample(rng).second : compose(m.sample(rng).second, m.sample(rng).second);
        if (r.is_zero()) continue;
        std::vector<Constraint> qs;
        for (auto& c : r.constraints())
            if (c.x.addr.size() <= 6 && c.y.addr.size() <= 6) qs.push_back(c);
        for (int q = 0; q < 40; ++q)
            qs.emplace_back(Endpoint{rng() & 1 ? Side::L : Side::R, addr()},
                            Endpoint{rng() & 1 ? Side::L : Side::R, addr()});
        auto exact = entails_all(r, qs);
        auto bfs = entails_bfs_all(r, qs, 8);
        for (std::size_t i = 0; i < qs.size(); ++i) {
            CAPTURE(r.str());
            CAPTURE(to_string(qs[i]));
            CHECK(exact[i] == bfs[i]);
            CHECK(exact[i] == entails(r, qs[i]));
            ++checked;
        }
    }
    CHECK(checked > 8000);
}

TEST_CASE("J-algebra axioms on the fixed sample")
{
    const auto& s = sample40();
    BR zero = BR::zero(), top = BR::top(), one = BR::identity();
    for (const BR& x : s) {
        CHECK(equal(meet(x, x), x));
        CHECK(equal(compose(x, one), x));
        CHECK(equal(compose(one, x), x));
        CHECK(equal(meet(x, top), x));
        CHECK(meet(x, zero).is_zero());
        CHECK(compose(x, zero).is_zero());
        CHECK(!x.is_zero());
        for (const BR& y : s) {
            CHECK(equal(meet(x, y), meet(y, x)));
            CHECK(equal(converse(compose(x, y)), compose(converse(y), converse(x))));
            CHECK(equal(converse(meet(x, y)), meet(converse(x), converse(y))));
        }
    }
    // three-variable axioms on every triple
    std::size_t n = 0;
    for (const BR& x : s)
        for (const BR& y : s) {
            BR xy = compose(x, y);
            BR cx = converse(x);
            for (const BR& z : s) {
                CHECK(equal(meet(meet(x, y), z), meet(x, meet(y, z))));
                CHECK(equal(compose(xy, z), compose(x, compose(y, z))));
                CHECK(leq(compose(x, meet(y, z)), compose(x, y)));
                CHECK(leq(meet(xy, z), compose(x, meet(y, compose(cx, z)))));
                ++n;
            }
        }
    CHECK(n == 64000);
}

TEST_CASE("values are never semantically empty")
{
    // The all-zero labelled tree pair satisfies every constraint, so no
    // operation on non-Zero values may produce Zero.
    const auto& s = sample40();
    for (const BR& x : s)
        for (const BR& y : s) {
            CHECK_FALSE(compose(x, y).is_zero());
            CHECK_FALSE(meet(x, y).is_zero());
        }
}

TEST_CASE("normalize")
{
    const auto& s = sample40();
    for (std::size_t i = 0; i < s.size(); ++i) {
        BR n = normalize(s[i]);
        CHECK(equal(n, s[i]));
        CHECK(normalize(n) == n);
        // a differently written equal value closes to the same form
        CHECK(normalize(compose(BR::identity(), meet(s[i], s[i]))) == n);
        CHECK(normalize(converse(converse(meet(BR::top(), s[i])))) == n);
    }
}
