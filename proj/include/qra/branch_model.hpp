// The tree-relation algebra as a model for eval() and check_law().
#pragma once

#include "qra/branchrel.hpp"
#include "qra/term.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace qra {

class BranchModel {
public:
    using Elem = BranchRelation;

    explicit BranchModel(int sample_depth = 4) : depth_(sample_depth) {}

    Elem zero() const { return BranchRelation::zero(); }
    Elem top() const { return BranchRelation::top(); }
    Elem id() const { return BranchRelation::identity(); }
    Elem meet(const Elem& x, const Elem& y) const { return qra::meet(x, y); }
    Elem comp(const Elem& x, const Elem& y) const { return compose(x, y); }
    Elem conv(const Elem& x) const { return converse(x); }

    bool supports_ra() const { return false; }
    Elem join(const Elem&, const Elem&) const;
    Elem compl_(const Elem&) const;

    bool has_generators() const { return true; }
    Elem gen_a() const { return BranchRelation::gen_a(); }
    Elem gen_b() const { return BranchRelation::gen_b(); }

    bool equal(const Elem& x, const Elem& y) const { return qra::equal(x, y); }
    bool leq(const Elem& x, const Elem& y) const { return qra::leq(x, y); }

    // 0, 1 and id by name, anything else as its constraint set
    std::string show(const Elem& x) const;

    const std::vector<Elem>* elements() const { return nullptr; }

    // A random element of the ;,&-closure of a and b of depth at most
    // sample_depth, converted with probability 1/2, labelled by its term.
    bool can_sample() const { return true; }
    std::pair<std::string, Elem> sample(std::mt19937_64& rng) const;
    Term sample_term(std::mt19937_64& rng) const;

private:
    int depth_;
};

}  // namespace qra
