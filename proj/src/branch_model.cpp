#include "qra/branch_model.hpp"
#include "qra/model.hpp"

namespace qra {

BranchModel::Elem BranchModel::join(const Elem&, const Elem&) const
{
    throw EngineError("tree relations are not closed under '+'");
}

BranchModel::Elem BranchModel::compl_(const Elem&) const
{
    throw EngineError("tree relations are not closed under '-'");
}

std::string BranchModel::show(const Elem& x) const
{
    if (x.is_zero()) return "0";
    if (x.constraints().empty()) return "1";
    if (qra::equal(x, BranchRelation::identity())) return "id";
    return x.str();
}

namespace {

Term path_term(std::mt19937_64& rng, int depth)
{
    std::uniform_int_distribution<int> pick(0, 3);
    int k = depth <= 1 ? pick(rng) % 2 : pick(rng);
    switch (k) {
    case 0: return gen_a();
    case 1: return gen_b();
    case 2: {
        Term l = path_term(rng, depth - 1);
        return comp(l, path_term(rng, depth - 1));
    }
    default: {
        Term l = path_term(rng, depth - 1);
        return meet(l, path_term(rng, depth - 1));
    }
    }
}

}  // namespace

Term BranchModel::sample_term(std::mt19937_64& rng) const
{
    Term t = path_term(rng, depth_);
    if (std::uniform_int_distribution<int>(0, 1)(rng)) t = qra::conv(t);
    return t;
}

std::pair<std::string, BranchModel::Elem> BranchModel::sample(std::mt19937_64& rng) const
{
    Term t = sample_term(rng);
    return {format_term(t), eval(*this, t, {})};
}

}  // namespace qra
