// Closed constraint graph behind branchrel entailment and composition.
//
// Each tag (input, middle, output tree) has a root node.  A constraint
// tag@u = tag'@v unfolds both addresses into chains of binary nodes and
// merges the endpoints.  Closing the graph means
//   * merged nodes have their children merged (right-append), and
//   * nodes whose children are pairwise merged are merged (a tree is the
//     pair of its two subtrees).
// Afterwards tag@u = tag'@v is derivable iff walking both addresses down
// the graph stops at the same node with the same unexplored suffix.
#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qra {

class SaturationIndex {
public:
    struct BudgetExceeded {};

    SaturationIndex(int tags, std::size_t node_budget);

    void add(int tag1, std::string_view addr1, int tag2, std::string_view addr2);
    void close();

    int root(int tag) const { return roots_[static_cast<std::size_t>(tag)]; }
    int find(int x) const;
    bool has_children(int x) const { return kids_[static_cast<std::size_t>(find(x))][0] >= 0; }
    int child(int x, int bit) const { return kids_[static_cast<std::size_t>(find(x))][static_cast<std::size_t>(bit)]; }
    std::size_t node_count() const { return parent_.size(); }

    // Deepest node on the path and the part of the address left over.
    std::pair<int, std::string_view> locate(int tag, std::string_view addr) const;
    bool equivalent(int tag1, std::string_view addr1, int tag2, std::string_view addr2) const;

private:
    int fresh();
    int descend(int tag, std::string_view addr);
    void unite(int x, int y);
    void drain();

    std::size_t budget_;
    std::vector<int> roots_;
    mutable std::vector<int> parent_;
    std::vector<int> rank_;
    std::vector<std::array<int, 2>> kids_;  // valid at class representatives
    std::vector<std::pair<int, int>> pending_;
};

}  // namespace qra
