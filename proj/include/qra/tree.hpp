// Thompson-style parenthetical tree notation, e.g. "0(12)" or "(01)(23)",
// the leaf-path assignments it induces, and the element σ↦τ.
#pragma once

#include "qra/term.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace qra {

class TreeExpr {
public:
    static TreeExpr leaf(char symbol);
    static TreeExpr pair(TreeExpr l, TreeExpr r);

    bool is_leaf() const { return !l_; }
    char symbol() const { return sym_; }
    const TreeExpr& left() const { return *l_; }
    const TreeExpr& right() const { return *r_; }

    std::string str() const;
    std::vector<char> leaves() const;  // left to right, first occurrence only

    friend bool operator==(const TreeExpr& x, const TreeExpr& y);

private:
    char sym_ = 0;
    std::shared_ptr<const TreeExpr> l_, r_;
};

struct TreeParseOptions {
    // The self-pairing ι₀∧ι₀ (written "00") needs a leaf twice; plain tree
    // diagrams never do.
    bool allow_repeated_leaves = false;
};

TreeExpr parse_tree_expr(const std::string& text, TreeParseOptions opt = {});

// Leaf symbol -> path term, in left-to-right leaf order.
using LeafAssignment = std::vector<std::pair<char, Term>>;

LeafAssignment leaf_paths(const TreeExpr& e);

// σ↦τ: meet over common leaves u of σ(u);conv(τ(u)); 1 when none are shared.
Term mapsto(const TreeExpr& src, const TreeExpr& dst);

// "0(12)->(01)2"
Term parse_mapsto(const std::string& text);

// Converse of a path term pushed down to the generators.
Term conv_path(const Term& p);

// Series-parallel drawing of a J-term in Graphviz DOT.
std::string emit_dot(const Term& t);

}  // namespace qra
