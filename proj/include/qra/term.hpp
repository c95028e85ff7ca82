// Terms over the signature ;, &, conv, 0, 1, id, a, b (plus + and - for
// relation algebras), and the parser/printer for the ASCII grammar.
#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qra {

enum class Kind { Zero, Top, Id, GenA, GenB, Var, Conv, Comp, Meet, Join, Compl };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

class Term {
public:
    Term();  // Zero

    Kind kind() const;
    const std::string& name() const;  // Var only
    Term left() const;  // Conv/Compl child, or left operand
    Term right() const;

    bool is_ra_only() const;   // contains Join or Compl anywhere
    bool is_path() const;      // built from a, b, id and ; only
    std::size_t size() const;  // node count
    std::size_t hash() const;
    void collect_vars(std::vector<std::string>& out) const;  // first-occurrence order

    friend bool operator==(const Term& x, const Term& y);
    friend bool operator!=(const Term& x, const Term& y) { return !(x == y); }

    const Node* raw() const { return node_.get(); }

private:
    explicit Term(NodePtr n) : node_(std::move(n)) {}
    NodePtr node_;
    friend Term make_node(Kind, std::string, const Term*, const Term*);
};

// Constructors.
Term zero();
Term top();
Term id();
Term gen_a();
Term gen_b();
Term var(const std::string& name);
Term conv(const Term& x);
Term comp(const Term& x, const Term& y);
Term meet(const Term& x, const Term& y);
Term join(const Term& x, const Term& y);
Term compl_(const Term& x);

// Left-associated products of a list; the empty list gives id / 1.
Term comp_all(const std::vector<Term>& xs);
Term meet_all(const std::vector<Term>& xs);
Term power(const Term& x, int n);

// Replace variables bound in defs by their terms.
Term substitute(const Term& t, const std::map<std::string, Term>& defs);

struct Node {
    Kind kind;
    std::string name;
    NodePtr l, r;
    std::size_t hash;
    std::size_t size;
    bool ra_only;
};

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& msg, std::size_t pos);
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class RaOnlyOperator : public std::runtime_error {
public:
    explicit RaOnlyOperator(const std::string& what) : std::runtime_error(what) {}
};

enum class Mode { J, RA };

Term parse_term(const std::string& text, Mode mode = Mode::RA);
std::string format_term(const Term& t);

std::ostream& operator<<(std::ostream& os, const Term& t);

struct TermHash {
    std::size_t operator()(const Term& t) const { return t.hash(); }
};

}  // namespace qra
