#include "qra/finra.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace qra;

namespace {

bool leq(RaElement x, RaElement y) { return (x & ~y) == 0; }

// Brute-force tabularity over every strict pair.
bool tabular_oracle(const FinraModel& m)
{
    const auto& el = *m.elements();
    std::vector<RaElement> fn;
    for (RaElement e : el)
        if (leq(m.comp(m.conv(e), e), m.id())) fn.push_back(e);
    for (RaElement w : el)
        for (RaElement v : el) {
            if (!leq(v, w) || v == w) continue;
            bool found = false;
            for (RaElement p : fn)
                for (RaElement q : fn) {
                    RaElement pq = m.comp(m.conv(p), q);
                    found = found || (pq != 0 && leq(pq, w) && (pq & v) == 0);
                }
            if (!found) return false;
        }
    return true;
}

IndexRel hat_oracle(const FinraModel& m, const PartialRep& f, RaElement x)
{
    IndexRel r;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j)
            if (leq(f.f[j], m.comp(f.f[i], x))) r.emplace(i, j);
    return r;
}

bool extends_oracle(const FinraModel& m, const PartialRep& f, const PartialRep& g)
{
    for (RaElement z : *m.elements()) {
        IndexRel hf = hat_oracle(m, f, z), hg = hat_oracle(m, g, z);
        for (auto& p : hf)
            if (!hg.count(p)) return false;
        for (std::size_t k = 0; k < f.size(); ++k)
            for (std::size_t l = 0; l < f.size(); ++l)
                if ((m.comp(f.f[k], z) & f.f[l]) == 0 && (m.comp(g.f[k], z) & g.f[l]) != 0) return false;
    }
    return true;
}

// A random partial representation: functional elements sharing one domain.
PartialRep random_rep(const FinraModel& m, std::mt19937_64& rng, std::size_t len)
{
    std::map<RaElement, std::vector<RaElement>> by_domain;
    for (RaElement e : m.functional_elements())
        if (e) by_domain[m.comp(e, m.top())].push_back(e);
    auto it = by_domain.begin();
    std::advance(it, static_cast<long>(rng() % by_domain.size()));
    PartialRep f;
    for (std::size_t k = 0; k < len; ++k) f.f.push_back(it->second[rng() % it->second.size()]);
    return f;
}

std::vector<AtomStructure> test_algebras()
{
    auto abb = enumerate_integral("1'abb~");
    auto abc = enumerate_integral("1'abc");
    return {make_proper_ra(2), abb.front(), abb.back(), abc.front(), abc[40]};
}

// The composition step needs witnesses; #0 is the only tabular algebra in
// each of these rows.
std::vector<AtomStructure> tabular_algebras()
{
    return {make_proper_ra(2), enumerate_integral("1'abb~").front(), enumerate_integral("1'abc").front()};
}

}  // namespace

TEST_CASE("tabularity")
{
    FinraModel re2(make_proper_ra(2));
    CHECK(is_tabular(re2.structure()));
    CHECK(tabular_oracle(re2));
    for (RaElement w : *re2.elements())
        for (RaElement v : *re2.elements()) {
            if (!leq(v, w) || v == w) continue;
            auto [p, q] = tabular_witness(re2, v, w);
            RaElement pq = re2.comp(re2.conv(p), q);
            CHECK(re2.is_functional(p));
            CHECK(re2.is_functional(q));
            CHECK(pq != 0);
            CHECK(leq(pq, w));
            CHECK((pq & v) == 0);
        }
    bool some_non_tabular = false;
    for (auto& s : enumerate_integral("1'a")) {
        FinraModel m(s);
        CHECK(is_tabular(s) == tabular_oracle(m));
        if (!is_tabular(s)) {
            some_non_tabular = true;
            // 1' < 1 cannot be separated: the only functional elements are 0 and 1'
            CHECK_THROWS_AS(tabular_witness(m, m.id(), m.top()), NotTabular);
        }
    }
    CHECK(some_non_tabular);
    for (const char* sig : {"1'ab", "1'aa~"})
        for (auto& s : enumerate_integral(sig)) CHECK(is_tabular(s) == tabular_oracle(FinraModel(s)));
}

TEST_CASE("hat examples")
{
    std::mt19937_64 rng(1);
    for (auto& s : test_algebras()) {
        FinraModel m(s);
        for (int k = 0; k < 30; ++k) {
            PartialRep f = random_rep(m, rng, 1 + rng() % 5);
            REQUIRE(is_partial_rep(m, f));
            IndexRel h1 = hat(m, f, m.id());
            for (std::size_t i = 0; i < f.size(); ++i) CHECK(h1.count({i, i}));
            CHECK(hat(m, f, 0).empty());
            for (RaElement x : *m.elements()) {
                CHECK(hat(m, f, m.conv(x)) == inverse_rel(hat(m, f, x)));
                CHECK(hat(m, f, x) == hat_oracle(m, f, x));
            }
        }
    }
}

TEST_CASE("partial representation predicate")
{
    FinraModel m(make_proper_ra(2));
    CHECK(is_partial_rep(m, PartialRep{{0b0001, 0b0010}}));
    CHECK_FALSE(is_partial_rep(m, PartialRep{{0b0001, 0b1000}}));  // different domains
    CHECK_FALSE(is_partial_rep(m, PartialRep{{0b0011}}));          // not functional
    CHECK_FALSE(is_partial_rep(m, PartialRep{{0}}));
}

TEST_CASE("hat satisfies the closure properties")
{
    std::mt19937_64 rng(2);
    for (auto& s : test_algebras()) {
        FinraModel m(s);
        const auto& el = *m.elements();
        for (int k = 0; k < 20; ++k) {
            PartialRep f = random_rep(m, rng, 1 + rng() % 6);
            CHECK(hat_violation(m, f, el).empty());
            // independent check of monotonicity and the composition clause
            for (RaElement x : el)
                for (RaElement y : el) {
                    IndexRel hx = hat_oracle(m, f, x), hy = hat_oracle(m, f, y);
                    if (leq(x, y))
                        for (auto& p : hx) CHECK(hy.count(p));
                    IndexRel hxy = hat_oracle(m, f, m.comp(x, y));
                    for (auto& p : compose_rel(hx, hy)) CHECK(hxy.count(p));
                }
        }
    }
}

TEST_CASE("hat_violation detects a broken sequence")
{
    FinraModel m(make_proper_ra(2));
    // not functional, so hat(1') misses the diagonal
    PartialRep bad{{0b0011, 0b0001}};
    CHECK_FALSE(hat_violation(m, bad, *m.elements()).empty());
}

TEST_CASE("join extension")
{
    std::mt19937_64 rng(3);
    for (auto& s : test_algebras()) {
        FinraModel m(s);
        const auto& el = *m.elements();
        int done = 0;
        for (int k = 0; k < 400 && done < 60; ++k) {
            PartialRep f = random_rep(m, rng, 1 + rng() % 4);
            std::size_t i = rng() % f.size(), j = rng() % f.size();
            RaElement x = el[rng() % el.size()], y = el[rng() % el.size()];
            if (!hat(m, f, x | y).count({i, j})) continue;
            ++done;
            PartialRep g = extend_join(m, f, i, j, x, y);
            REQUIRE(g.size() == f.size());
            CHECK(is_partial_rep(m, g));
            CHECK((hat_oracle(m, g, x).count({i, j}) || hat_oracle(m, g, y).count({i, j})));
            CHECK(extends(m, f, g));
            CHECK(extends_oracle(m, f, g));
            // the x branch is taken when f_i;x & f_j is nonzero
            if ((m.comp(f.f[i], x) & f.f[j]) != 0) CHECK(hat_oracle(m, g, x).count({i, j}));
            if (x == y) CHECK(hat_oracle(m, g, x).count({i, j}));
        }
        CHECK(done >= 20);
    }
}

TEST_CASE("composition extension")
{
    std::mt19937_64 rng(4);
    for (auto& s : tabular_algebras()) {
        FinraModel m(s);
        const auto& el = *m.elements();
        int done = 0;
        for (int k = 0; k < 400 && done < 60; ++k) {
            PartialRep f = random_rep(m, rng, 1 + rng() % 4);
            std::size_t i = rng() % f.size(), j = rng() % f.size();
            RaElement x = el[rng() % el.size()], y = el[rng() % el.size()];
            if (!hat(m, f, m.comp(x, y)).count({i, j})) continue;
            ++done;
            PartialRep g = extend_comp(m, f, i, j, x, y);
            REQUIRE(g.size() == f.size() + 1);
            std::size_t n = f.size();
            CHECK(is_partial_rep(m, g));
            CHECK(hat_oracle(m, g, x).count({i, n}));
            CHECK(hat_oracle(m, g, y).count({n, j}));
            CHECK(extends(m, f, g));
            CHECK(extends_oracle(m, f, g));
        }
        CHECK(done >= 20);
    }
}

TEST_CASE("composition extension in Re(2) from singletons")
{
    FinraModel m(make_proper_ra(2));
    PartialRep f{{0b0001, 0b0001}};
    PartialRep g = extend_comp(m, f, 0, 1, m.top(), m.top());
    REQUIRE(g.size() == 3);
    CHECK(hat(m, g, m.top()).count({0, 2}));
    CHECK(hat(m, g, m.top()).count({2, 1}));
}

TEST_CASE("extends agrees with the oracle on arbitrary pairs")
{
    std::mt19937_64 rng(5);
    int rejected = 0;
    for (auto& s : test_algebras()) {
        FinraModel m(s);
        for (int k = 0; k < 200; ++k) {
            std::size_t len = 1 + rng() % 3;
            PartialRep f = random_rep(m, rng, len);
            PartialRep g = random_rep(m, rng, len + rng() % 2);
            bool o = extends_oracle(m, f, g);
            CHECK(extends(m, f, g) == o);
            rejected += !o;
        }
    }
    CHECK(rejected > 0);
}

TEST_CASE("generated subalgebra")
{
    FinraModel m(make_proper_ra(2));
    auto sub = generated_subalgebra(m, {0b0010});
    CHECK(std::find(sub.begin(), sub.end(), RaElement{0b0100}) != sub.end());
    CHECK(std::find(sub.begin(), sub.end(), m.id()) != sub.end());
    CHECK(sub.size() <= 16);
    auto triv = generated_subalgebra(m, {});
    CHECK(std::find(triv.begin(), triv.end(), m.top()) != triv.end());
}

TEST_CASE("staged representations of Re(2)")
{
    FinraModel m(make_proper_ra(2));
    StageReport r = build_stage_rep(m, 0, 0b0010, 50, 0);
    CHECK(r.ok);
    CHECK(r.separated);
    REQUIRE(!r.stages.empty());
    CHECK(r.stages.size() == 101);
    CHECK(r.stages.front().step == "init");
    for (auto& st : r.stages) {
        CHECK(st.a);
        CHECK(st.b);
        CHECK(st.c);
        CHECK(st.hat_clause.empty());
    }
    // separation is already in place at the start
    CHECK(hat(m, r.final, 0b0010).count({0, 1}));
    CHECK_FALSE(hat(m, r.final, 0).count({0, 1}));

    std::string text = r.str(m);
    CHECK(text.rfind("v=0 w=a1 ", 0) == 0);
    CHECK(text.find("\nstage 0 len=2 step=init a=1 b=1 c=1 hat=ok\n") != std::string::npos);
    CHECK(text.find("separated=yes result=pass") != std::string::npos);

    for (std::uint64_t seed : {1, 2, 3}) {
        StageReport q = build_stage_rep(m, m.id(), m.top(), 20, seed);
        CHECK(q.ok);
        CHECK(build_stage_rep(m, m.id(), m.top(), 20, seed).str(m) == q.str(m));
    }
    CHECK_THROWS(build_stage_rep(m, m.top(), m.id(), 5, 0));
}
