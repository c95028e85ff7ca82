// Binary relations on infinite binary trees, given by finitely many
// subtree-equality constraints "input@u = output@v".  This is the concrete
// algebra in which a(s) = s@0 and b(s) = s@1.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qra {

enum class Side : std::uint8_t { L, R };

using Address = std::string;  // over '0' and '1'; empty is the root

struct Endpoint {
    Side side;
    Address addr;

    friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

// Shortlex on the address, then L before R.
bool endpoint_less(const Endpoint& x, const Endpoint& y);

struct Constraint {
    Endpoint x, y;  // x is never greater than y under endpoint_less

    Constraint() = default;
    Constraint(Endpoint p, Endpoint q);

    friend bool operator==(const Constraint&, const Constraint&) = default;
    friend bool operator<(const Constraint& c, const Constraint& d);
};

std::string to_string(const Endpoint& e);
std::string to_string(const Constraint& c);

// Raised when a composition cannot be closed off within the node budget.
class ProjectionIncomplete : public std::runtime_error {
public:
    ProjectionIncomplete(const std::string& what, std::vector<Constraint> partial)
        : std::runtime_error(what), partial_(std::move(partial))
    {
    }
    const std::vector<Constraint>& partial() const { return partial_; }

private:
    std::vector<Constraint> partial_;
};

class BranchRelation {
public:
    BranchRelation() = default;  // Top

    static BranchRelation zero();
    static BranchRelation top();
    static BranchRelation identity();
    static BranchRelation gen_a();
    static BranchRelation gen_b();
    static BranchRelation from_constraints(std::vector<Constraint> cs);

    bool is_zero() const { return zero_; }
    const std::vector<Constraint>& constraints() const { return cs_; }

    std::string str() const;
    static BranchRelation parse(const std::string& text);

    friend bool operator==(const BranchRelation&, const BranchRelation&) = default;

private:
    bool zero_ = false;
    std::vector<Constraint> cs_;  // sorted, unique
};

BranchRelation meet(const BranchRelation& r1, const BranchRelation& r2);
BranchRelation converse(const BranchRelation& r);
BranchRelation compose(const BranchRelation& r1, const BranchRelation& r2);

// Exact entailment decided on the closed constraint graph.
bool entails(const BranchRelation& r, const Constraint& c);
// Independent oracle: explicit closure over all (side, address) with
// |address| <= bound.
bool entails_bfs(const BranchRelation& r, const Constraint& c, int bound);

// Many queries against one relation, sharing the closure work.
std::vector<bool> entails_all(const BranchRelation& r, const std::vector<Constraint>& cs);
std::vector<bool> entails_bfs_all(const BranchRelation& r, const std::vector<Constraint>& cs, int bound);

bool leq(const BranchRelation& r1, const BranchRelation& r2);
bool equal(const BranchRelation& r1, const BranchRelation& r2);

// Closed form of r: the same relation re-emitted from its closed constraint
// graph, so that semantically equal inputs print identically.
BranchRelation normalize(const BranchRelation& r);

// Upper bound on graph nodes a single composition may allocate.
inline constexpr std::size_t kNodeBudget = std::size_t{1} << 22;

}  // namespace qra
