#include "qra/finra.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <tuple>

namespace qra {

namespace {

// Square bit matrix over indices 0..n-1.
struct BitRel {
    std::size_t n = 0, words = 0;
    std::vector<std::uint64_t> bits;

    explicit BitRel(std::size_t size) : n(size), words((size + 63) / 64), bits(size * words, 0) {}

    bool get(std::size_t i, std::size_t j) const { return (bits[i * words + j / 64] >> (j % 64)) & 1u; }
    void set(std::size_t i, std::size_t j) { bits[i * words + j / 64] |= std::uint64_t{1} << (j % 64); }

    bool subset_of(const BitRel& o) const
    {
        for (std::size_t k = 0; k < bits.size(); ++k)
            if (bits[k] & ~o.bits[k]) return false;
        return true;
    }
    bool empty() const
    {
        return std::all_of(bits.begin(), bits.end(), [](std::uint64_t w) { return w == 0; });
    }
    BitRel operator&(const BitRel& o) const
    {
        BitRel r(n);
        for (std::size_t k = 0; k < bits.size(); ++k) r.bits[k] = bits[k] & o.bits[k];
        return r;
    }
    BitRel then(const BitRel& o) const
    {
        BitRel r(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (get(i, k))
                    for (std::size_t w = 0; w < words; ++w) r.bits[i * words + w] |= o.bits[k * words + w];
        return r;
    }
    BitRel inverse() const
    {
        BitRel r(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (get(i, j)) r.set(j, i);
        return r;
    }
    bool operator==(const BitRel& o) const { return bits == o.bits; }
};

BitRel hat_bits(const FinraModel& m, const PartialRep& f, RaElement x)
{
    BitRel r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        RaElement fx = m.comp(f.f[i], x);
        for (std::size_t j = 0; j < f.size(); ++j)
            if (m.leq(f.f[j], fx)) r.set(i, j);
    }
    return r;
}

IndexRel to_set(const BitRel& b)
{
    IndexRel out;
    for (std::size_t i = 0; i < b.n; ++i)
        for (std::size_t j = 0; j < b.n; ++j)
            if (b.get(i, j)) out.emplace(i, j);
    return out;
}

bool is_strictly_below(RaElement v, RaElement w) { return (v & ~w) == 0 && v != w; }

}  // namespace

// ---------------------------------------------------------------------------
// tabularity

bool is_tabular(const AtomStructure& s)
{
    // In a finite algebra every v < w has an atom below w & -v, so it is
    // enough that each atom is itself of the form conv(p);q.
    FinraModel m(s);
    const auto& fn = m.functional_elements();
    RaElement covered = 0;
    for (RaElement p : fn)
        for (RaElement q : fn) {
            RaElement d = m.comp(m.conv(p), q);
            if (d && (d & (d - 1)) == 0) covered |= d;
        }
    return covered == s.top();
}

std::pair<RaElement, RaElement> tabular_witness(const FinraModel& m, RaElement v, RaElement w)
{
    if (!is_strictly_below(v, w)) throw std::invalid_argument("tabular_witness needs v < w");
    for (RaElement p : m.functional_elements())
        for (RaElement q : m.functional_elements()) {
            RaElement d = m.comp(m.conv(p), q);
            if (d && m.leq(d, w) && (v & d) == 0) return {p, q};
        }
    throw NotTabular("no functional p, q separate " + m.show(v) + " from " + m.show(w));
}

std::pair<RaElement, RaElement> tabular_witness(const AtomStructure& s, RaElement v, RaElement w)
{
    return tabular_witness(FinraModel(s), v, w);
}

// ---------------------------------------------------------------------------
// partial representations

bool is_partial_rep(const FinraModel& m, const PartialRep& f)
{
    if (f.f.empty()) return true;
    RaElement dom = m.comp(f.f[0], m.top());
    for (RaElement x : f.f)
        if (x == 0 || !m.is_functional(x) || m.comp(x, m.top()) != dom) return false;
    return true;
}

IndexRel hat(const FinraModel& m, const PartialRep& f, RaElement x) { return to_set(hat_bits(m, f, x)); }

IndexRel compose_rel(const IndexRel& r, const IndexRel& s)
{
    IndexRel out;
    for (auto [i, k] : r)
        for (auto it = s.lower_bound({k, 0}); it != s.end() && it->first == k; ++it) out.emplace(i, it->second);
    return out;
}

IndexRel inverse_rel(const IndexRel& r)
{
    IndexRel out;
    for (auto [i, j] : r) out.emplace(j, i);
    return out;
}

PartialRep extend_join(const FinraModel& m, const PartialRep& f, std::size_t i, std::size_t j, RaElement x,
                       RaElement y)
{
    if (i >= f.size() || j >= f.size()) throw std::invalid_argument("extend_join: index out of range");
    if (!m.leq(f.f[j], m.comp(f.f[i], m.join(x, y))))
        throw std::invalid_argument("extend_join: (i,j) is not in hat(x+y)");
    RaElement r = m.meet(m.comp(f.f[i], x), f.f[j]);
    if (r == 0) r = m.meet(m.comp(f.f[i], y), f.f[j]);
    RaElement dom = m.comp(r, m.top());
    PartialRep g;
    for (RaElement fk : f.f) g.f.push_back(m.meet(dom, fk));
    return g;
}

PartialRep extend_comp(const FinraModel& m, const PartialRep& f, std::size_t i, std::size_t j, RaElement x,
                       RaElement y)
{
    if (i >= f.size() || j >= f.size()) throw std::invalid_argument("extend_comp: index out of range");
    if (!m.leq(f.f[j], m.comp(f.f[i], m.comp(x, y))))
        throw std::invalid_argument("extend_comp: (i,j) is not in hat(x;y)");
    RaElement target = m.meet(m.comp(f.f[i], x), m.comp(f.f[j], m.conv(y)));
    if (target == 0) throw std::logic_error("extend_comp: f_i;x & f_j;conv(y) is 0 although (i,j) is in hat(x;y)");
    auto [p, q] = tabular_witness(m, 0, target);
    RaElement r = m.meet(q, m.meet(m.comp(m.comp(p, f.f[i]), x), m.comp(m.comp(p, f.f[j]), m.conv(y))));
    RaElement dom = m.comp(r, m.top());
    PartialRep g;
    for (RaElement fk : f.f) g.f.push_back(m.meet(dom, m.comp(p, fk)));
    g.f.push_back(m.meet(dom, q));
    return g;
}

bool extends(const FinraModel& m, const PartialRep& f, const PartialRep& g)
{
    if (g.size() < f.size()) return false;
    PartialRep gf{std::vector<RaElement>(g.f.begin(), g.f.begin() + static_cast<std::ptrdiff_t>(f.size()))};
    for (RaElement z : *m.elements()) {
        if (!hat_bits(m, f, z).subset_of(hat_bits(m, gf, z))) return false;
        for (std::size_t k = 0; k < f.size(); ++k) {
            RaElement fz = m.comp(f.f[k], z), gz = m.comp(g.f[k], z);
            for (std::size_t l = 0; l < f.size(); ++l)
                if ((fz & f.f[l]) == 0 && (gz & g.f[l]) != 0) return false;
        }
    }
    return true;
}

std::string hat_violation(const FinraModel& m, const PartialRep& f, const std::vector<RaElement>& xs)
{
    if (!hat_bits(m, f, 0).empty()) return "v";
    std::vector<BitRel> h;
    for (RaElement x : xs) h.push_back(hat_bits(m, f, x));
    for (std::size_t a = 0; a < xs.size(); ++a) {
        if (!(hat_bits(m, f, m.conv(xs[a])) == h[a].inverse())) return "iv";
        for (std::size_t b = 0; b < xs.size(); ++b) {
            RaElement x = xs[a], y = xs[b];
            if (m.leq(x, y) && !h[a].subset_of(h[b])) return "i";
            if (!(h[a] & h[b]).subset_of(hat_bits(m, f, m.meet(x, y)))) return "ii";
            if (!h[a].then(h[b]).subset_of(hat_bits(m, f, m.comp(x, y)))) return "iii";
        }
    }
    return "";
}

std::vector<RaElement> generated_subalgebra(const FinraModel& m, const std::vector<RaElement>& gens, std::size_t cap)
{
    std::vector<RaElement> out;
    auto add = [&](RaElement e) {
        if (out.size() < cap && std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    };
    for (RaElement e : {m.zero(), m.top(), m.id()}) add(e);
    for (RaElement e : gens) add(e);
    for (std::size_t done = 0; done < out.size() && out.size() < cap;) {
        std::size_t end = out.size();
        for (std::size_t a = 0; a < end; ++a) {
            add(m.conv(out[a]));
            add(m.compl_(out[a]));
            for (std::size_t b = 0; b < end; ++b) {
                if (a < done && b < done) continue;
                add(m.join(out[a], out[b]));
                add(m.meet(out[a], out[b]));
                add(m.comp(out[a], out[b]));
            }
        }
        done = end;
    }
    return out;
}

// ---------------------------------------------------------------------------
// staged construction

std::string Stage::line(const FinraModel& m) const
{
    std::ostringstream os;
    os << "stage " << n << " len=" << length << " step=" << step;
    if (step != "init") os << " i=" << i << " j=" << j << " x=" << m.show(x) << " y=" << m.show(y);
    os << " a=" << a << " b=" << b << " c=" << c << " hat=" << (hat_clause.empty() ? "ok" : hat_clause);
    return os.str();
}

std::string StageReport::str(const FinraModel& m) const
{
    std::ostringstream os;
    os << "v=" << m.show(v) << " w=" << m.show(w) << " schedule_elements=" << schedule_elements.size() << '\n';
    for (auto& s : stages) os << s.line(m) << '\n';
    os << "final_length=" << final.size() << " separated=" << (separated ? "yes" : "no")
       << " result=" << (ok ? "pass" : "fail") << '\n';
    return os.str();
}

namespace {

class Scheduler {
public:
    Scheduler(std::vector<RaElement> xs, std::uint64_t seed) : xs_(std::move(xs)), rng_(seed) {}

    // Each round lists every (i,j,x,y) for the length at the start of the
    // round in a shuffled order, so every quadruple recurs in every later
    // round.
    std::tuple<std::size_t, std::size_t, RaElement, RaElement> next(std::size_t length)
    {
        if (pos_ == round_.size()) {
            round_.clear();
            pos_ = 0;
            for (std::size_t i = 0; i < length; ++i)
                for (std::size_t j = 0; j < length; ++j)
                    for (RaElement x : xs_)
                        for (RaElement y : xs_) round_.emplace_back(i, j, x, y);
            std::shuffle(round_.begin(), round_.end(), rng_);
        }
        return round_[pos_++];
    }

private:
    std::vector<RaElement> xs_;
    std::mt19937_64 rng_;
    std::vector<std::tuple<std::size_t, std::size_t, RaElement, RaElement>> round_;
    std::size_t pos_ = 0;
};

}  // namespace

StageReport build_stage_rep(const FinraModel& m, RaElement v, RaElement w, std::size_t stages, std::uint64_t seed)
{
    if (stages < 1) throw std::invalid_argument("build_stage_rep needs at least one stage");
    if (!is_strictly_below(v, w)) throw std::invalid_argument("build_stage_rep needs v < w");
    if (!m.elements()) throw std::invalid_argument("build_stage_rep needs a finite element list");

    StageReport rep;
    rep.v = v;
    rep.w = w;
    rep.schedule_elements = generated_subalgebra(m, {v, w});

    // conv(p);q separates v from w; in the notation of the construction the
    // second witness comes first
    auto [q, p] = tabular_witness(m, v, w);
    PartialRep f{{m.meet(m.comp(p, m.conv(w)), q), m.meet(p, m.comp(q, w))}};

    auto record = [&](const PartialRep& prev, const PartialRep& cur, const std::string& step, std::size_t i,
                      std::size_t j, RaElement x, RaElement y, bool post) {
        Stage s;
        s.n = rep.stages.size();
        s.length = cur.size();
        s.step = step;
        s.i = i;
        s.j = j;
        s.x = x;
        s.y = y;
        s.a = is_partial_rep(m, cur) && m.leq(cur.f[1], m.comp(cur.f[0], w));
        s.b = m.meet(m.comp(cur.f[0], v), cur.f[1]) == 0;
        s.c = s.n == 0 || (post && extends(m, prev, cur));
        std::vector<RaElement> xs = step == "init" ? rep.schedule_elements : std::vector<RaElement>{x, y};
        s.hat_clause = hat_violation(m, cur, xs);
        rep.stages.push_back(s);
    };
    record(f, f, "init", 0, 0, 0, 0, true);

    Scheduler tau(rep.schedule_elements, seed);
    for (std::size_t mu = 0; mu < stages; ++mu) {
        auto [i, j, x, y] = tau.next(f.size());

        PartialRep g = f;
        bool post = true;
        std::string step = "skip";
        if (m.leq(f.f[j], m.comp(f.f[i], m.join(x, y)))) {
            g = extend_join(m, f, i, j, x, y);
            step = "join";
            post = hat_bits(m, g, x).get(i, j) || hat_bits(m, g, y).get(i, j);
        }
        record(f, g, step, i, j, x, y, post);
        f = std::move(g);

        g = f;
        post = true;
        step = "skip";
        if (m.leq(f.f[j], m.comp(f.f[i], m.comp(x, y)))) {
            g = extend_comp(m, f, i, j, x, y);
            step = "comp";
            std::size_t k = g.size() - 1;
            post = hat_bits(m, g, x).get(i, k) && hat_bits(m, g, y).get(k, j);
        }
        record(f, g, step, i, j, x, y, post);
        f = std::move(g);
    }

    rep.final = f;
    BitRel hw = hat_bits(m, f, w), hv = hat_bits(m, f, v);
    rep.separated = hw.get(0, 1) && !hv.get(0, 1);
    const auto& all = *m.elements();
    std::string full = hat_violation(m, f, all.size() <= 64 ? all : rep.schedule_elements);
    rep.ok = rep.separated && full.empty() &&
             std::all_of(rep.stages.begin(), rep.stages.end(),
                         [](const Stage& s) { return s.a && s.b && s.c && s.hat_clause.empty(); });
    return rep;
}

}  // namespace qra
