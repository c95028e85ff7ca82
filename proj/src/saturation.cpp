#include "qra/saturation.hpp"

#include <unordered_map>

namespace qra {

SaturationIndex::SaturationIndex(int tags, std::size_t node_budget) : budget_(node_budget)
{
    for (int t = 0; t < tags; ++t) roots_.push_back(fresh());
}

int SaturationIndex::fresh()
{
    if (parent_.size() >= budget_) throw BudgetExceeded{};
    int n = static_cast<int>(parent_.size());
    parent_.push_back(n);
    rank_.push_back(0);
    kids_.push_back({-1, -1});
    return n;
}

int SaturationIndex::find(int x) const
{
    while (parent_[static_cast<std::size_t>(x)] != x) {
        auto& p = parent_[static_cast<std::size_t>(x)];
        p = parent_[static_cast<std::size_t>(p)];
        x = p;
    }
    return x;
}

int SaturationIndex::descend(int tag, std::string_view addr)
{
    int n = root(tag);
    for (char c : addr) {
        n = find(n);
        if (kids_[static_cast<std::size_t>(n)][0] < 0) {
            int k0 = fresh();
            int k1 = fresh();
            kids_[static_cast<std::size_t>(n)] = {k0, k1};
        }
        n = kids_[static_cast<std::size_t>(n)][c == '1' ? 1 : 0];
    }
    return n;
}

void SaturationIndex::unite(int x, int y) { pending_.emplace_back(x, y); }

void SaturationIndex::drain()
{
    while (!pending_.empty()) {
        auto [x, y] = pending_.back();
        pending_.pop_back();
        x = find(x);
        y = find(y);
        if (x == y) continue;
        auto ux = static_cast<std::size_t>(x), uy = static_cast<std::size_t>(y);
        if (rank_[ux] < rank_[uy]) std::swap(ux, uy), std::swap(x, y);
        parent_[uy] = x;
        if (rank_[ux] == rank_[uy]) ++rank_[ux];
        if (kids_[ux][0] < 0) {
            kids_[ux] = kids_[uy];
        } else if (kids_[uy][0] >= 0) {
            pending_.emplace_back(kids_[ux][0], kids_[uy][0]);
            pending_.emplace_back(kids_[ux][1], kids_[uy][1]);
        }
    }
}

void SaturationIndex::add(int tag1, std::string_view addr1, int tag2, std::string_view addr2)
{
    int x = descend(tag1, addr1);
    int y = descend(tag2, addr2);
    unite(x, y);
    drain();
}

void SaturationIndex::close()
{
    drain();
    struct PairHash {
        std::size_t operator()(const std::pair<int, int>& p) const
        {
            return std::hash<long long>{}((static_cast<long long>(p.first) << 32) ^ p.second);
        }
    };
    bool changed = true;
    while (changed) {
        changed = false;
        std::unordered_map<std::pair<int, int>, int, PairHash> sig;
        for (std::size_t n = 0; n < parent_.size(); ++n) {
            int r = find(static_cast<int>(n));
            if (r != static_cast<int>(n) || kids_[n][0] < 0) continue;
            auto key = std::make_pair(find(kids_[n][0]), find(kids_[n][1]));
            auto [it, inserted] = sig.emplace(key, r);
            if (!inserted && find(it->second) != r) {
                unite(it->second, r);
                drain();
                changed = true;
            }
        }
    }
}

std::pair<int, std::string_view> SaturationIndex::locate(int tag, std::string_view addr) const
{
    int n = find(root(tag));
    for (std::size_t i = 0; i < addr.size(); ++i) {
        if (kids_[static_cast<std::size_t>(n)][0] < 0) return {n, addr.substr(i)};
        n = find(kids_[static_cast<std::size_t>(n)][addr[i] == '1' ? 1 : 0]);
    }
    return {n, std::string_view{}};
}

bool SaturationIndex::equivalent(int tag1, std::string_view addr1, int tag2, std::string_view addr2) const
{
    auto p = locate(tag1, addr1);
    auto q = locate(tag2, addr2);
    return p.first == q.first && p.second == q.second;
}

}  // namespace qra
