// Term evaluation in an arbitrary model and checking of universally
// quantified laws (hypotheses => conclusions) by exhaustive enumeration or
// by seeded sampling.
//
// A model is any class providing
//   using Elem;
//   Elem zero(), top(), id();
//   Elem meet(Elem, Elem), comp(Elem, Elem), conv(Elem);
//   bool supports_ra(); Elem join(Elem, Elem), compl_(Elem);
//   bool has_generators(); Elem gen_a(), gen_b();
//   bool equal(Elem, Elem), leq(Elem, Elem);
//   std::string show(Elem);
//   const std::vector<Elem>* elements();            // null if not finite
//   bool can_sample(); std::pair<std::string, Elem> sample(std::mt19937_64&);
#pragma once

#include "qra/term.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qra {

enum class RelOp { Eq, Leq };

struct Relation {
    Term lhs;
    RelOp op;
    Term rhs;

    std::string str() const;
};

// "s = t", "s <= t", or "s >= t" (stored flipped as t <= s).
Relation parse_relation(const std::string& text, Mode mode = Mode::RA);

enum class Signature { J, RA };

struct Law {
    std::string id;
    std::vector<std::string> vars;  // quantified, in enumeration order
    std::vector<Relation> hyps;
    std::vector<Relation> concls;
    Signature sig = Signature::J;
    // Valid in every J-algebra.  The direct-product formulas are kept in the
    // catalog for checking but are not laws of all algebras.
    bool theorem = true;
    std::string note;

    bool mentions_generators() const;
};

const std::vector<Law>& law_catalog();
const Law* find_law(const std::string& id);

class EngineError : public std::runtime_error {
public:
    explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

class UnboundVariable : public EngineError {
public:
    explicit UnboundVariable(const std::string& name) : EngineError("unbound variable '" + name + "'") {}
};

struct Strategy {
    enum Kind { Exhaustive, Sample } kind = Sample;
    std::size_t samples = 200;
    std::uint64_t seed = 0;
    std::size_t cap = std::size_t{1} << 20;  // exhaustive: assignments visited

    static Strategy exhaustive(std::size_t cap = std::size_t{1} << 20)
    {
        Strategy s;
        s.kind = Exhaustive;
        s.cap = cap;
        return s;
    }
    static Strategy sample(std::size_t n, std::uint64_t seed = 0)
    {
        Strategy s;
        s.kind = Sample;
        s.samples = n;
        s.seed = seed;
        return s;
    }
    std::string str() const;
};

struct LawReport {
    std::string id;
    std::string strategy;
    std::size_t tested = 0;      // assignments satisfying every hypothesis
    std::size_t attempted = 0;   // assignments drawn or enumerated
    bool pass = true;
    std::vector<std::pair<std::string, std::string>> counterexample;
    std::string failed_conclusion;

    std::string line() const;
};

// ---------------------------------------------------------------------------
// evaluation

template <class M>
typename M::Elem eval(const M& m, const Term& t, const std::map<std::string, typename M::Elem>& env)
{
    using E = typename M::Elem;
    switch (t.kind()) {
    case Kind::Zero: return m.zero();
    case Kind::Top: return m.top();
    case Kind::Id: return m.id();
    case Kind::GenA:
    case Kind::GenB: {
        const char* n = t.kind() == Kind::GenA ? "a" : "b";
        auto it = env.find(n);
        if (it != env.end()) return it->second;
        if (!m.has_generators()) throw UnboundVariable(n);
        return t.kind() == Kind::GenA ? m.gen_a() : m.gen_b();
    }
    case Kind::Var: {
        auto it = env.find(t.name());
        if (it == env.end()) throw UnboundVariable(t.name());
        return it->second;
    }
    case Kind::Conv: return m.conv(eval(m, t.left(), env));
    case Kind::Comp: return m.comp(eval(m, t.left(), env), eval(m, t.right(), env));
    case Kind::Meet: return m.meet(eval(m, t.left(), env), eval(m, t.right(), env));
    case Kind::Join:
    case Kind::Compl: {
        if (!m.supports_ra()) throw EngineError("model does not support '+' or '-'");
        if (t.kind() == Kind::Compl) return m.compl_(eval(m, t.left(), env));
        E x = eval(m, t.left(), env);
        return m.join(x, eval(m, t.right(), env));
    }
    }
    throw EngineError("unreachable term kind");
}

template <class M>
bool holds(const M& m, const typename M::Elem& l, RelOp op, const typename M::Elem& r)
{
    return op == RelOp::Eq ? m.equal(l, r) : m.leq(l, r);
}

template <class M>
bool is_functional(const M& m, const typename M::Elem& e)
{
    return m.leq(m.comp(m.conv(e), e), m.id());
}

template <class M>
bool is_permutational(const M& m, const typename M::Elem& e)
{
    return m.equal(m.comp(m.conv(e), e), m.id()) && m.equal(m.comp(e, m.conv(e)), m.id());
}

// ---------------------------------------------------------------------------
// law checking

namespace detail {

// A law's terms flattened into one shared DAG.  Every node carries the
// position of the last quantified variable it depends on, so a node is
// recomputed only when that variable changes.
struct Compiled {
    struct Op {
        Kind kind;
        int l = -1, r = -1;
        int var = -1;
        int level = -1;
    };
    struct Rel {
        int l, r;
        RelOp op;
        int level;
        std::string text;
    };
    std::vector<std::string> vars;
    std::vector<Op> ops;
    std::vector<int> order;            // op indices sorted by level
    std::vector<std::size_t> level_begin;  // into order, size vars+2
    std::vector<Rel> hyps, concls;
};

Compiled compile(const Law& law, bool quantify_generators);

}  // namespace detail

template <class M>
class LawChecker {
public:
    using E = typename M::Elem;

    LawChecker(const M& m, const Law& law) : m_(m), law_(law)
    {
        if (law.sig == Signature::RA && !m.supports_ra())
            throw EngineError("law " + law.id + " needs '+' and '-', which the model lacks");
        c_ = detail::compile(law, !m.has_generators());
        vals_.resize(c_.ops.size());
        labels_.resize(c_.vars.size());
        assign_.resize(c_.vars.size());
    }

    LawReport run(const Strategy& s)
    {
        report_ = LawReport{};
        report_.id = law_.id;
        report_.strategy = s.str();
        compute_level(-1);
        bool closed_hyps = hyps_hold(-1);
        if (s.kind == Strategy::Exhaustive) {
            const std::vector<E>* es = m_.elements();
            if (!es) throw EngineError("exhaustive strategy needs a finite model");
            cap_ = s.cap;
            elems_ = es;
            if (!closed_hyps) {
                report_.attempted = subtree(-1);
            } else if (c_.vars.empty()) {
                ++report_.attempted;
                finish();
            } else {
                descend(0);
            }
            return report_;
        }
        if (!m_.can_sample()) throw EngineError("model has no sample generator");
        if (c_.vars.empty()) {
            // nothing to draw: one evaluation decides it
            ++report_.attempted;
            if (closed_hyps) finish();
        } else if (!closed_hyps) {
            report_.attempted = s.samples;
        } else {
            std::mt19937_64 rng(s.seed);
            for (std::size_t i = 0; i < s.samples && report_.pass; ++i) sample_once(rng);
        }
        return report_;
    }

private:
    const M& m_;
    const Law& law_;
    detail::Compiled c_;
    std::vector<E> vals_;
    std::vector<std::string> labels_;
    std::vector<E> assign_;
    LawReport report_;
    const std::vector<E>* elems_ = nullptr;
    std::size_t cap_ = 0;
    std::size_t visited_ = 0;

    E apply(const detail::Compiled::Op& op)
    {
        switch (op.kind) {
        case Kind::Zero: return m_.zero();
        case Kind::Top: return m_.top();
        case Kind::Id: return m_.id();
        case Kind::GenA: return m_.gen_a();
        case Kind::GenB: return m_.gen_b();
        case Kind::Var: return assign_[static_cast<std::size_t>(op.var)];
        case Kind::Conv: return m_.conv(vals_[static_cast<std::size_t>(op.l)]);
        case Kind::Compl: return m_.compl_(vals_[static_cast<std::size_t>(op.l)]);
        case Kind::Comp: return m_.comp(vals_[static_cast<std::size_t>(op.l)], vals_[static_cast<std::size_t>(op.r)]);
        case Kind::Meet: return m_.meet(vals_[static_cast<std::size_t>(op.l)], vals_[static_cast<std::size_t>(op.r)]);
        case Kind::Join: return m_.join(vals_[static_cast<std::size_t>(op.l)], vals_[static_cast<std::size_t>(op.r)]);
        }
        throw EngineError("unreachable op");
    }

    void compute_level(int lv)
    {
        auto b = c_.level_begin[static_cast<std::size_t>(lv + 1)];
        auto e = c_.level_begin[static_cast<std::size_t>(lv + 2)];
        for (auto i = b; i < e; ++i) {
            int k = c_.order[i];
            vals_[static_cast<std::size_t>(k)] = apply(c_.ops[static_cast<std::size_t>(k)]);
        }
    }

    bool check(const detail::Compiled::Rel& r)
    {
        return holds(m_, vals_[static_cast<std::size_t>(r.l)], r.op, vals_[static_cast<std::size_t>(r.r)]);
    }

    bool hyps_hold(int lv)
    {
        for (auto& h : c_.hyps)
            if (h.level == lv && !check(h)) return false;
        return true;
    }

    void finish()
    {
        ++report_.tested;
        for (auto& k : c_.concls) {
            if (!check(k)) {
                report_.pass = false;
                report_.failed_conclusion = k.text;
                for (std::size_t i = 0; i < c_.vars.size(); ++i)
                    report_.counterexample.emplace_back(c_.vars[i], elems_ ? m_.show(assign_[i]) : labels_[i]);
                return;
            }
        }
    }

    // assignments below a node at depth d
    std::size_t subtree(int d) const
    {
        std::size_t n = 1;
        for (auto k = static_cast<std::size_t>(d + 1); k < c_.vars.size(); ++k) n *= elems_->size();
        return n;
    }

    void descend(int d)
    {
        for (const E& e : *elems_) {
            if (!report_.pass) return;
            if (++visited_ > cap_)
                throw EngineError("law " + law_.id + ": exhaustive enumeration exceeds the cap of " +
                                  std::to_string(cap_) + " assignments");
            assign_[static_cast<std::size_t>(d)] = e;
            compute_level(d);
            if (!hyps_hold(d)) {
                report_.attempted += subtree(d);
                continue;
            }
            if (d + 1 == static_cast<int>(c_.vars.size())) {
                ++report_.attempted;
                finish();
            } else {
                descend(d + 1);
            }
        }
    }

    void sample_once(std::mt19937_64& rng)
    {
        ++report_.attempted;
        for (std::size_t d = 0; d < c_.vars.size(); ++d) {
            auto [label, e] = m_.sample(rng);
            assign_[d] = e;
            labels_[d] = label;
            compute_level(static_cast<int>(d));
            if (!hyps_hold(static_cast<int>(d))) return;
        }
        finish();
    }
};

template <class M>
LawReport check_law(const M& m, const Law& law, const Strategy& s)
{
    LawChecker<M> checker(m, law);
    return checker.run(s);
}

}  // namespace qra
