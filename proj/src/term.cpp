#include "qra/term.hpp"

#include <cctype>
#include <functional>
#include <ostream>
#include <sstream>

namespace qra {

namespace {

std::size_t mix(std::size_t h, std::size_t v)
{
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Term make_node(Kind k, std::string name, const Term* l, const Term* r)
{
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->name = std::move(name);
    n->size = 1;
    n->ra_only = (k == Kind::Join || k == Kind::Compl);
    std::size_t h = mix(0, static_cast<std::size_t>(k));
    if (k == Kind::Var) h = mix(h, std::hash<std::string>{}(n->name));
    if (l) {
        n->l = l->node_;
        n->size += l->size();
        n->ra_only |= l->is_ra_only();
        h = mix(h, l->hash());
    }
    if (r) {
        n->r = r->node_;
        n->size += r->size();
        n->ra_only |= r->is_ra_only();
        h = mix(h, r->hash());
    }
    n->hash = h;
    return Term(std::move(n));
}

namespace {

const Term& shared_leaf(Kind k)
{
    static const Term z = make_node(Kind::Zero, "", nullptr, nullptr);
    static const Term t = make_node(Kind::Top, "", nullptr, nullptr);
    static const Term i = make_node(Kind::Id, "", nullptr, nullptr);
    static const Term a = make_node(Kind::GenA, "", nullptr, nullptr);
    static const Term b = make_node(Kind::GenB, "", nullptr, nullptr);
    switch (k) {
    case Kind::Top: return t;
    case Kind::Id: return i;
    case Kind::GenA: return a;
    case Kind::GenB: return b;
    default: return z;
    }
}

}  // namespace

Term::Term() : node_(shared_leaf(Kind::Zero).node_) {}

Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
Term Term::left() const { return Term(node_->l); }
Term Term::right() const { return Term(node_->r); }
bool Term::is_ra_only() const { return node_->ra_only; }
std::size_t Term::size() const { return node_->size; }
std::size_t Term::hash() const { return node_->hash; }

bool Term::is_path() const
{
    switch (kind()) {
    case Kind::GenA:
    case Kind::GenB:
    case Kind::Id: return true;
    case Kind::Comp: return left().is_path() && right().is_path();
    default: return false;
    }
}

void Term::collect_vars(std::vector<std::string>& out) const
{
    if (kind() == Kind::Var) {
        for (auto& v : out)
            if (v == name()) return;
        out.push_back(name());
        return;
    }
    if (node_->l) left().collect_vars(out);
    if (node_->r) right().collect_vars(out);
}

bool operator==(const Term& x, const Term& y)
{
    const Node* a = x.node_.get();
    const Node* b = y.node_.get();
    if (a == b) return true;
    if (a->hash != b->hash || a->kind != b->kind || a->size != b->size) return false;
    if (a->kind == Kind::Var) return a->name == b->name;
    if (a->l && !(x.left() == y.left())) return false;
    if (a->r && !(x.right() == y.right())) return false;
    return true;
}

Term zero() { return shared_leaf(Kind::Zero); }
Term top() { return shared_leaf(Kind::Top); }
Term id() { return shared_leaf(Kind::Id); }
Term gen_a() { return shared_leaf(Kind::GenA); }
Term gen_b() { return shared_leaf(Kind::GenB); }
Term var(const std::string& name) { return make_node(Kind::Var, name, nullptr, nullptr); }
Term conv(const Term& x) { return make_node(Kind::Conv, "", &x, nullptr); }
Term comp(const Term& x, const Term& y) { return make_node(Kind::Comp, "", &x, &y); }
Term meet(const Term& x, const Term& y) { return make_node(Kind::Meet, "", &x, &y); }
Term join(const Term& x, const Term& y) { return make_node(Kind::Join, "", &x, &y); }
Term compl_(const Term& x) { return make_node(Kind::Compl, "", &x, nullptr); }

Term comp_all(const std::vector<Term>& xs)
{
    if (xs.empty()) return id();
    Term t = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) t = comp(t, xs[i]);
    return t;
}

Term meet_all(const std::vector<Term>& xs)
{
    if (xs.empty()) return top();
    Term t = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) t = meet(t, xs[i]);
    return t;
}

Term power(const Term& x, int n)
{
    if (n <= 0) return id();
    return comp_all(std::vector<Term>(static_cast<std::size_t>(n), x));
}

Term substitute(const Term& t, const std::map<std::string, Term>& defs)
{
    switch (t.kind()) {
    case Kind::Var: {
        auto it = defs.find(t.name());
        return it == defs.end() ? t : it->second;
    }
    case Kind::Conv: return conv(substitute(t.left(), defs));
    case Kind::Compl: return compl_(substitute(t.left(), defs));
    case Kind::Comp: return comp(substitute(t.left(), defs), substitute(t.right(), defs));
    case Kind::Meet: return meet(substitute(t.left(), defs), substitute(t.right(), defs));
    case Kind::Join: return join(substitute(t.left(), defs), substitute(t.right(), defs));
    default: return t;
    }
}

SyntaxError::SyntaxError(const std::string& msg, std::size_t pos)
    : std::runtime_error("syntax error at " + std::to_string(pos) + ": " + msg), pos_(pos)
{
}

// ---------------------------------------------------------------------------
// parser

namespace {

class Parser {
public:
    Parser(const std::string& s, Mode m) : s_(s), mode_(m) {}

    Term run()
    {
        Term t = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return t;
    }

private:
    const std::string& s_;
    Mode mode_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    void ra_gate(const char* op)
    {
        if (mode_ == Mode::J)
            throw RaOnlyOperator(std::string("operator '") + op + "' at " + std::to_string(pos_) +
                                 " is only available for relation algebras");
    }

    Term sum()
    {
        Term t = meet_();
        while (true) {
            skip();
            if (pos_ < s_.size() && s_[pos_] == '+') {
                ra_gate("+");
                ++pos_;
                t = join(t, meet_());
            } else {
                return t;
            }
        }
    }

    Term meet_()
    {
        Term t = comp_();
        while (eat('&')) t = meet(t, comp_());
        return t;
    }

    Term comp_()
    {
        Term t = unary();
        while (eat(';')) t = comp(t, unary());
        return t;
    }

    Term unary()
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '-') {
            ra_gate("-");
            ++pos_;
            expect('(');
            Term t = sum();
            expect(')');
            return compl_(t);
        }
        return atom();
    }

    Term atom()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Term t = sum();
            expect(')');
            return t;
        }
        if (c == '0' || c == '1') {
            ++pos_;
            if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
                fail("malformed constant");
            return c == '0' ? zero() : top();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string w = s_.substr(start, pos_ - start);
            if (w == "conv") {
                expect('(');
                Term t = sum();
                expect(')');
                return conv(t);
            }
            if (w == "a") return gen_a();
            if (w == "b") return gen_b();
            if (w == "id") return id();
            return var(w);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

int level(Kind k)
{
    switch (k) {
    case Kind::Join: return 1;
    case Kind::Meet: return 2;
    case Kind::Comp: return 3;
    default: return 4;
    }
}

void print(std::ostream& os, const Term& t, int ctx, bool right_operand)
{
    int lv = level(t.kind());
    bool paren = lv < ctx || (right_operand && lv == ctx && lv < 4);
    if (paren) os << '(';
    switch (t.kind()) {
    case Kind::Zero: os << '0'; break;
    case Kind::Top: os << '1'; break;
    case Kind::Id: os << "id"; break;
    case Kind::GenA: os << 'a'; break;
    case Kind::GenB: os << 'b'; break;
    case Kind::Var: os << t.name(); break;
    case Kind::Conv:
        os << "conv(";
        print(os, t.left(), 0, false);
        os << ')';
        break;
    case Kind::Compl:
        os << "-(";
        print(os, t.left(), 0, false);
        os << ')';
        break;
    case Kind::Comp:
    case Kind::Meet:
    case Kind::Join: {
        const char* op = t.kind() == Kind::Comp ? ";" : t.kind() == Kind::Meet ? " & " : " + ";
        print(os, t.left(), lv, false);
        os << op;
        print(os, t.right(), lv, true);
        break;
    }
    }
    if (paren) os << ')';
}

}  // namespace

Term parse_term(const std::string& text, Mode mode) { return Parser(text, mode).run(); }

std::string format_term(const Term& t)
{
    std::ostringstream os;
    print(os, t, 0, false);
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Term& t)
{
    print(os, t, 0, false);
    return os;
}

}  // namespace qra
