#include "qra/thompson.hpp"

#include "qra/branch_model.hpp"
#include "qra/model.hpp"
#include "qra/tree.hpp"

#include <cstdio>
#include <sstream>
#include <unordered_map>

namespace qra {

bool SuiteReport::pass() const
{
    if (error) return false;
    for (auto& e : entries)
        if (!e.pass) return false;
    return true;
}

std::vector<std::string> SuiteReport::failed() const
{
    std::vector<std::string> out;
    for (auto& e : entries)
        if (!e.pass) out.push_back(e.name);
    return out;
}

std::string SuiteReport::line() const
{
    std::ostringstream os;
    os << "SUITE " << id << ' ' << (pass() ? "pass" : "fail") << " relations=" << entries.size() << " failed=[";
    auto f = failed();
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << ']';
    return os.str();
}

std::string SuiteReport::digest() const
{
    // FNV-1a over every generator's printed term
    std::uint64_t h = 1469598103934665603ULL;
    for (auto& n : generator_names()) {
        for (char c : n + "=" + format_term(generator(n)) + "\n") {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ULL;
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

// Evaluates generator expressions in the tree model, sharing results for
// repeated subterms.
class Evaluator {
public:
    BranchRelation operator()(const Term& t)
    {
        auto it = memo_.find(t);
        if (it != memo_.end()) return it->second;
        BranchRelation r;
        switch (t.kind()) {
        case Kind::Zero: r = m_.zero(); break;
        case Kind::Top: r = m_.top(); break;
        case Kind::Id: r = m_.id(); break;
        case Kind::GenA: r = m_.gen_a(); break;
        case Kind::GenB: r = m_.gen_b(); break;
        case Kind::Var: r = (*this)(generator(t.name())); break;
        case Kind::Conv: r = m_.conv((*this)(t.left())); break;
        case Kind::Comp: r = m_.comp((*this)(t.left()), (*this)(t.right())); break;
        case Kind::Meet: r = m_.meet((*this)(t.left()), (*this)(t.right())); break;
        case Kind::Join:
        case Kind::Compl: throw EngineError("'+' and '-' are not available for tree relations");
        }
        memo_.emplace(t, r);
        return r;
    }

    BranchRelation text(const std::string& s) { return (*this)(parse_term(s, Mode::J)); }

    const BranchModel& model() const { return m_; }

private:
    BranchModel m_;
    std::unordered_map<Term, BranchRelation, TermHash> memo_;
};

class SuiteBuilder {
public:
    explicit SuiteBuilder(const std::string& id) { rep_.id = id; }

    // "lhs = rhs" or "lhs <= rhs" over generator names
    void relation(const std::string& name, const std::string& text)
    {
        SuiteEntry e{name, text, false, ""};
        guarded(name, [&] {
            Relation r = parse_relation(text, Mode::J);
            BranchRelation l = ev_(r.lhs), rr = ev_(r.rhs);
            e.pass = holds(ev_.model(), l, r.op, rr);
            if (!e.pass) e.detail = "lhs=" + l.str() + " rhs=" + rr.str();
        });
        rep_.entries.push_back(e);
    }

    void entry(SuiteEntry e) { rep_.entries.push_back(std::move(e)); }

    template <class F>
    void guarded(const std::string& name, F&& f)
    {
        try {
            f();
        } catch (const ProjectionIncomplete& ex) {
            throw ProjectionIncomplete("relation " + name + ": " + ex.what(), ex.partial());
        }
    }

    Evaluator& eval() { return ev_; }
    SuiteReport take() { return std::move(rep_); }

private:
    SuiteReport rep_;
    Evaluator ev_;
};

const std::vector<std::pair<std::string, std::string>>& ta_relations()
{
    static const std::vector<std::pair<std::string, std::string>> r = {
        {"ta1", "conv(B);A;X2;conv(conv(B);A);conv(X2) = id"},
        {"ta2", "conv(B);A;X3;conv(conv(B);A);conv(X3) = id"},
        {"ta3", "C = C2;B"},
        {"ta4", "X2;C2 = C3;B"},
        {"ta5", "A;C = C2;C2"},
        {"ta6", "C;C;C = id"},
        {"ta7", "pi1;pi1 = id"},
        {"ta8", "pi3;pi1 = pi1;pi3"},
        {"ta9", "pi1;pi2;pi1;pi2;pi1;pi2 = id"},
        {"ta10", "pi1;X3 = X3;pi1"},
        {"ta11", "X2;pi1 = pi1;pi2;B"},
        {"ta12", "B;pi2 = pi3;B"},
        {"ta13", "C3;pi1 = pi2;C3"},
        {"ta14", "C2;pi1;C2;pi1;C2;pi1 = id"},
    };
    return r;
}

SuiteReport presentation(const std::string& id, std::size_t n)
{
    SuiteBuilder s(id);
    for (std::size_t i = 0; i < n; ++i) s.relation(ta_relations()[i].first, ta_relations()[i].second);
    return s.take();
}

SuiteReport perms_suite()
{
    SuiteBuilder s("perms");
    Evaluator& ev = s.eval();
    const BranchModel& m = ev.model();
    auto check = [&](const std::string& name, bool permutational) {
        SuiteEntry e{name, permutational ? "permutational" : "functional, not permutational", false, ""};
        s.guarded(name, [&] {
            BranchRelation x = ev.text(name);
            bool fn = is_functional(m, x);
            bool pm = is_permutational(m, x);
            e.pass = fn && pm == permutational;
            if (!e.pass) e.detail = std::string("functional=") + (fn ? "yes" : "no") + " permutational=" + (pm ? "yes" : "no");
        });
        s.entry(e);
    };
    for (const char* n : {"K", "L", "U", "conv(U)"}) check(n, false);
    for (const char* n : {"P", "P0", "R", "R0", "A", "B", "C", "pi0"}) check(n, true);
    return s.take();
}

SuiteReport m_suite()
{
    SuiteBuilder s("M");
    s.relation("P;P", "P;P = id");
    s.relation("(P;R)^3", "P;R;P;R;P;R = id");
    s.relation("(R;P)^3", "R;P;R;P;R;P = id");

    Evaluator& ev = s.eval();
    const BranchModel& m = ev.model();
    auto sample = m_sample();
    std::vector<BranchRelation> x0, x1, xs;
    s.guarded("sample", [&] {
        for (auto& [name, t] : sample) {
            xs.push_back(ev(t));
            x0.push_back(ev(defer0(t)));
            x1.push_back(ev(defer1(t)));
        }
    });
    const BranchRelation U = ev.text("U");

    SuiteEntry comm{"commutativity", "x0;y1 = y1;x0", true, ""};
    s.guarded(comm.name, [&] {
        for (std::size_t i = 0; i < xs.size() && comm.pass; ++i)
            for (std::size_t j = 0; j < xs.size() && comm.pass; ++j)
                if (!m.equal(m.comp(x0[i], x1[j]), m.comp(x1[j], x0[i]))) {
                    comm.pass = false;
                    comm.detail = "x=" + sample[i].first + " y=" + sample[j].first;
                }
    });
    s.entry(comm);

    SuiteEntry split{"splitting", "x;U = U;x0;x1", true, ""};
    s.guarded(split.name, [&] {
        for (std::size_t i = 0; i < xs.size() && split.pass; ++i)
            if (!m.equal(m.comp(xs[i], U), m.comp(m.comp(U, x0[i]), x1[i]))) {
                split.pass = false;
                split.detail = "x=" + sample[i].first;
            }
    });
    s.entry(split);

    SuiteEntry recon{"reconstruction", "x = U;x0;x1;K0;L1", true, ""};
    s.guarded(recon.name, [&] {
        BranchRelation k0 = ev(defer0(generator("K")));
        BranchRelation l1 = ev(defer1(generator("L")));
        for (std::size_t i = 0; i < xs.size() && recon.pass; ++i) {
            BranchRelation r = m.comp(m.comp(m.comp(m.comp(U, x0[i]), x1[i]), k0), l1);
            if (!m.equal(xs[i], r)) {
                recon.pass = false;
                recon.detail = "x=" + sample[i].first;
            }
        }
    });
    s.entry(recon);

    for (const char* r : {"U;K = id", "U;L = id", "P0;K;K = K;L", "P0;K;L = K;K", "P0;L = L", "R0;K;K;K = K;K",
                          "R0;K;K;L = K;L;K", "R0;K;L = K;L;L", "R0;L = L"}) {
        std::string t = r;
        s.relation(t.substr(0, t.find(" =")), t);
    }
    return s.take();
}

SuiteReport same_suite()
{
    SuiteBuilder s("same");
    s.relation("P", "P = U;P0;K");
    s.relation("R", "R = U;R0;K");
    s.relation("P0", "P0 = U;R;P;R;R;K;P;R;R;K;R;P;R;K;R");
    s.relation("R0", "R0 = U;R;P;R;R;R;P;R;K;R;K;R;R;K;R;R;K;P;R;P;R;R");
    return s.take();
}

// Sampled law checks in the tree model, one entry per law.
SuiteReport sampled_laws(const std::string& id, std::vector<std::string> laws, std::size_t n)
{
    SuiteBuilder s(id);
    BranchModel m;
    for (auto& lid : laws) {
        const Law* law = find_law(lid);
        SuiteEntry e{lid, law->concls.front().str(), false, ""};
        s.guarded(lid, [&] {
            LawReport r = check_law(m, *law, Strategy::sample(n, 0));
            e.pass = r.pass;
            e.detail = r.line();
        });
        s.entry(e);
    }
    return s.take();
}

SuiteReport qu_suite()
{
    SuiteBuilder s("qu");
    s.relation("conv(a);a", "id = conv(a);a");
    s.relation("conv(b);b", "id = conv(b);b");
    s.relation("a;conv(a) & b;conv(b)", "id = a;conv(a) & b;conv(b)");
    s.relation("conv(a);b", "1 = conv(a);b");
    s.relation("a;1", "1 = a;1");
    s.relation("b;1", "1 = b;1");
    return s.take();
}

}  // namespace

std::vector<std::string> suite_ids() { return {"perms", "F", "T", "V", "M", "same", "fork", "pairing", "qu"}; }

SuiteReport run_suite(const std::string& id)
{
    if (id == "perms") return perms_suite();
    if (id == "F") return presentation("F", 2);
    if (id == "T") return presentation("T", 6);
    if (id == "V") return presentation("V", 14);
    if (id == "M") return m_suite();
    if (id == "same") return same_suite();
    if (id == "fork") return sampled_laws("fork", {"F1", "F2", "F3"}, 200);
    if (id == "pairing") return sampled_laws("pairing", {"Pr"}, 200);
    if (id == "qu") return qu_suite();
    throw std::invalid_argument("unknown suite '" + id + "'");
}

SuiteReport bleak_quick_checks()
{
    SuiteBuilder s("bleak-quick");
    Evaluator& ev = s.eval();
    const BranchModel& m = ev.model();
    const std::pair<const char*, const char*> forms[] = {
        {"u", "(01)(2(34))->(10)(4(23))"},
        {"v", "(01)(23)->(03)(12)"},
        {"t0001", "(01)2->(10)2"},
        {"t011011", "(01)(23)->(03)(12)"},
        {"t100", "(01)2->(21)0"},
    };
    for (auto& [name, tree] : forms) {
        SuiteEntry e{name, tree, false, ""};
        s.guarded(name, [&] {
            bool same_term = parse_mapsto(tree) == generator(name);
            bool pm = is_permutational(m, ev(generator(name)));
            e.pass = same_term && pm;
            if (!same_term) e.detail = "term differs from the tree pair";
            else if (!pm) e.detail = "not permutational";
        });
        s.entry(e);
    }
    return s.take();
}

std::vector<std::pair<std::string, Term>> m_sample()
{
    std::vector<std::pair<std::string, Term>> out{{"id", id()}};
    for (int len = 1; len <= 3; ++len)
        for (int w = 0; w < (1 << len); ++w) {
            std::vector<Term> fs;
            std::string name;
            for (int i = len - 1; i >= 0; --i) {
                bool b = (w >> i) & 1;
                fs.push_back(b ? gen_b() : gen_a());
                name += name.empty() ? "" : ";";
                name += b ? "b" : "a";
            }
            out.emplace_back(name, comp_all(fs));
        }
    for (const char* n : {"K", "L", "U", "P", "P0", "R", "R0", "B", "C", "pi0"}) out.emplace_back(n, generator(n));
    return out;
}

}  // namespace qra
