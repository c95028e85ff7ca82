#include "qra/branchrel.hpp"

#include "qra/saturation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

namespace qra {

bool endpoint_less(const Endpoint& x, const Endpoint& y)
{
    if (x.addr.size() != y.addr.size()) return x.addr.size() < y.addr.size();
    if (x.addr != y.addr) return x.addr < y.addr;
    return x.side < y.side;
}

Constraint::Constraint(Endpoint p, Endpoint q) : x(std::move(p)), y(std::move(q))
{
    if (endpoint_less(y, x)) std::swap(x, y);
}

bool operator<(const Constraint& c, const Constraint& d)
{
    if (!(c.x == d.x)) return endpoint_less(c.x, d.x);
    if (!(c.y == d.y)) return endpoint_less(c.y, d.y);
    return false;
}

std::string to_string(const Endpoint& e)
{
    return std::string(e.side == Side::L ? "L." : "R.") + (e.addr.empty() ? "^" : e.addr);
}

std::string to_string(const Constraint& c) { return to_string(c.x) + "=" + to_string(c.y); }

BranchRelation BranchRelation::zero()
{
    BranchRelation r;
    r.zero_ = true;
    return r;
}

BranchRelation BranchRelation::top() { return {}; }

BranchRelation BranchRelation::identity()
{
    return from_constraints({Constraint({Side::L, ""}, {Side::R, ""})});
}

BranchRelation BranchRelation::gen_a()
{
    return from_constraints({Constraint({Side::R, ""}, {Side::L, "0"})});
}

BranchRelation BranchRelation::gen_b()
{
    return from_constraints({Constraint({Side::R, ""}, {Side::L, "1"})});
}

BranchRelation BranchRelation::from_constraints(std::vector<Constraint> cs)
{
    BranchRelation r;
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    // x=x carries no information
    cs.erase(std::remove_if(cs.begin(), cs.end(), [](const Constraint& c) { return c.x == c.y; }),
             cs.end());
    r.cs_ = std::move(cs);
    return r;
}

std::string BranchRelation::str() const
{
    if (zero_) return "0";
    std::string s = "{";
    for (std::size_t i = 0; i < cs_.size(); ++i) {
        if (i) s += "; ";
        s += to_string(cs_[i]);
    }
    return s + "}";
}

BranchRelation BranchRelation::parse(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "0") return zero();
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw std::invalid_argument("relation text must be 0 or {...}: " + text);
    s = s.substr(1, s.size() - 2);
    std::vector<Constraint> cs;
    auto endpoint = [&](const std::string& e) {
        if (e.size() < 3 || (e[0] != 'L' && e[0] != 'R') || e[1] != '.')
            throw std::invalid_argument("bad endpoint '" + e + "'");
        Endpoint p{e[0] == 'L' ? Side::L : Side::R, e.substr(2)};
        if (p.addr == "^") p.addr.clear();
        for (char c : p.addr)
            if (c != '0' && c != '1') throw std::invalid_argument("bad address in '" + e + "'");
        return p;
    };
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad constraint '" + item + "'");
        cs.emplace_back(endpoint(item.substr(0, eq)), endpoint(item.substr(eq + 1)));
    }
    return from_constraints(std::move(cs));
}

BranchRelation meet(const BranchRelation& r1, const BranchRelation& r2)
{
    if (r1.is_zero() || r2.is_zero()) return BranchRelation::zero();
    std::vector<Constraint> cs = r1.constraints();
    cs.insert(cs.end(), r2.constraints().begin(), r2.constraints().end());
    return BranchRelation::from_constraints(std::move(cs));
}

BranchRelation converse(const BranchRelation& r)
{
    if (r.is_zero()) return r;
    auto flip = [](Endpoint e) {
        e.side = e.side == Side::L ? Side::R : Side::L;
        return e;
    };
    std::vector<Constraint> cs;
    cs.reserve(r.constraints().size());
    for (auto& c : r.constraints()) cs.emplace_back(flip(c.x), flip(c.y));
    return BranchRelation::from_constraints(std::move(cs));
}

namespace {

constexpr int kTagL = 0;
constexpr int kTagM = 1;
constexpr int kTagR = 2;

int tag_of(Side s) { return s == Side::L ? kTagL : kTagR; }

// Re-emit the relation between the L and R roots of a closed graph: walk the
// classes reachable from L, then from R, in breadth-first (shortlex) order,
// naming each class by the first address reaching it; every edge into an
// already named class becomes a constraint.
std::vector<Constraint> project(SaturationIndex& g)
{
    std::unordered_map<int, Endpoint> name;
    std::deque<int> queue;
    std::vector<Constraint> out;
    for (Side side : {Side::L, Side::R}) {
        int root = g.find(g.root(tag_of(side)));
        Endpoint here{side, ""};
        auto it = name.find(root);
        if (it != name.end()) {
            out.emplace_back(it->second, here);
            continue;
        }
        name.emplace(root, here);
        queue.push_back(root);
        while (!queue.empty()) {
            int n = queue.front();
            queue.pop_front();
            if (!g.has_children(n)) continue;
            const Endpoint base = name.at(n);
            for (int bit = 0; bit < 2; ++bit) {
                int c = g.find(g.child(n, bit));
                Endpoint ce{base.side, base.addr + static_cast<char>('0' + bit)};
                auto jt = name.find(c);
                if (jt != name.end()) {
                    out.emplace_back(jt->second, ce);
                } else {
                    name.emplace(c, ce);
                    queue.push_back(c);
                }
            }
        }
    }
    return out;
}

}  // namespace

BranchRelation compose(const BranchRelation& r1, const BranchRelation& r2)
{
    if (r1.is_zero() || r2.is_zero()) return BranchRelation::zero();
    SaturationIndex g(3, kNodeBudget);
    try {
        for (auto& c : r1.constraints()) {
            auto t = [](Side s) { return s == Side::L ? kTagL : kTagM; };
            g.add(t(c.x.side), c.x.addr, t(c.y.side), c.y.addr);
        }
        for (auto& c : r2.constraints()) {
            auto t = [](Side s) { return s == Side::L ? kTagM : kTagR; };
            g.add(t(c.x.side), c.x.addr, t(c.y.side), c.y.addr);
        }
        g.close();
    } catch (const SaturationIndex::BudgetExceeded&) {
        throw ProjectionIncomplete("composition exceeded the node budget",
                                   meet(r1, r2).constraints());
    }
    return BranchRelation::from_constraints(project(g));
}

BranchRelation normalize(const BranchRelation& r)
{
    if (r.is_zero()) return r;
    SaturationIndex g(3, kNodeBudget);
    for (auto& c : r.constraints()) g.add(tag_of(c.x.side), c.x.addr, tag_of(c.y.side), c.y.addr);
    g.close();
    return BranchRelation::from_constraints(project(g));
}

namespace {

SaturationIndex build_index(const BranchRelation& r)
{
    SaturationIndex g(3, kNodeBudget);
    for (auto& c : r.constraints()) g.add(tag_of(c.x.side), c.x.addr, tag_of(c.y.side), c.y.addr);
    g.close();
    return g;
}

}  // namespace

bool entails(const BranchRelation& r, const Constraint& c)
{
    if (r.is_zero()) return true;
    SaturationIndex g = build_index(r);
    return g.equivalent(tag_of(c.x.side), c.x.addr, tag_of(c.y.side), c.y.addr);
}

bool leq(const BranchRelation& r1, const BranchRelation& r2)
{
    if (r1.is_zero()) return true;
    if (r2.is_zero()) return false;
    if (r2.constraints().empty()) return true;
    SaturationIndex g = build_index(r1);
    for (auto& c : r2.constraints())
        if (!g.equivalent(tag_of(c.x.side), c.x.addr, tag_of(c.y.side), c.y.addr)) return false;
    return true;
}

bool equal(const BranchRelation& r1, const BranchRelation& r2)
{
    return leq(r1, r2) && leq(r2, r1);
}

// ---------------------------------------------------------------------------
// bounded oracle

namespace {

class BoundedClosure {
public:
    explicit BoundedClosure(int bound) : bound_(bound), per_side_((1 << (bound + 1)) - 1)
    {
        parent_.resize(2 * per_side_);
        for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = static_cast<int>(i);
    }

    int index(Side s, const Address& a) const
    {
        int v = 0;
        for (char c : a) v = 2 * v + (c - '0');
        return (s == Side::L ? 0 : per_side_) + (1 << a.size()) - 1 + v;
    }

    int length(int n) const
    {
        int k = n % per_side_ + 1;
        int len = 0;
        while (k > 1) k >>= 1, ++len;
        return len;
    }

    int child(int n, int bit) const
    {
        int side = n / per_side_;
        int k = n % per_side_;  // heap layout: children of k are 2k+1, 2k+2
        return side * per_side_ + 2 * k + 1 + bit;
    }

    int find(int x)
    {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    bool unite(int x, int y)
    {
        x = find(x), y = find(y);
        if (x == y) return false;
        parent_[std::max(x, y)] = std::min(x, y);
        return true;
    }

    void seed(const Constraint& c)
    {
        int room = bound_ - static_cast<int>(std::max(c.x.addr.size(), c.y.addr.size()));
        if (room < 0) return;
        // instances of the constraint under every right-append within bound
        std::vector<std::pair<int, int>> frontier{{index(c.x.side, c.x.addr), index(c.y.side, c.y.addr)}};
        for (int d = 0; d <= room; ++d) {
            std::vector<std::pair<int, int>> next;
            for (auto [p, q] : frontier) {
                unite(p, q);
                if (d < room)
                    for (int bit = 0; bit < 2; ++bit) next.emplace_back(child(p, bit), child(q, bit));
            }
            frontier.swap(next);
        }
    }

    void saturate()
    {
        bool changed = true;
        const int n = static_cast<int>(parent_.size());
        while (changed) {
            changed = false;
            // equal nodes have equal children
            std::unordered_map<int, int> witness;
            for (int x = 0; x < n; ++x) {
                if (length(x) >= bound_) continue;
                auto [it, fresh] = witness.emplace(find(x), x);
                if (fresh) continue;
                for (int bit = 0; bit < 2; ++bit) changed |= unite(child(it->second, bit), child(x, bit));
            }
            // nodes with equal children are equal
            std::map<std::pair<int, int>, int> sig;
            for (int x = 0; x < n; ++x) {
                if (length(x) >= bound_) continue;
                auto key = std::make_pair(find(child(x, 0)), find(child(x, 1)));
                auto [it, fresh] = sig.emplace(key, x);
                if (!fresh) changed |= unite(it->second, x);
            }
        }
    }

private:
    int bound_;
    int per_side_;
    std::vector<int> parent_;
};

}  // namespace

std::vector<bool> entails_bfs_all(const BranchRelation& r, const std::vector<Constraint>& cs, int bound)
{
    std::vector<bool> out(cs.size(), true);
    if (r.is_zero()) return out;
    BoundedClosure cl(bound);
    for (auto& k : r.constraints()) cl.seed(k);
    cl.saturate();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const Constraint& c = cs[i];
        if (c.x == c.y) continue;
        if (static_cast<int>(std::max(c.x.addr.size(), c.y.addr.size())) > bound)
            out[i] = false;
        else
            out[i] = cl.find(cl.index(c.x.side, c.x.addr)) == cl.find(cl.index(c.y.side, c.y.addr));
    }
    return out;
}

bool entails_bfs(const BranchRelation& r, const Constraint& c, int bound)
{
    return entails_bfs_all(r, {c}, bound)[0];
}

std::vector<bool> entails_all(const BranchRelation& r, const std::vector<Constraint>& cs)
{
    std::vector<bool> out(cs.size(), true);
    if (r.is_zero()) return out;
    SaturationIndex g = build_index(r);
    for (std::size_t i = 0; i < cs.size(); ++i)
        out[i] = g.equivalent(tag_of(cs[i].x.side), cs[i].x.addr, tag_of(cs[i].y.side), cs[i].y.addr);
    return out;
}

}  // namespace qra
