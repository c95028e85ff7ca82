// Finite relation algebras given by atom structures.
//
// Elements are bit sets over the atoms.  Atom k is written a<k> in
// element syntax, so "a1 + a3" names the join of the second and fourth
// atoms.
#pragma once

#include "qra/model.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qra {

using RaElement = std::uint32_t;

constexpr int kMaxAtoms = 16;

struct AtomStructure {
    int n = 0;
    std::vector<int> converse;      // involution on atoms
    RaElement identity = 0;         // identity atoms
    std::vector<RaElement> triples; // triples[a*n+b]: atoms c with c <= a;b

    RaElement top() const { return (RaElement{1} << n) - 1; }
    bool allowed(int a, int b, int c) const { return (triples[static_cast<std::size_t>(a * n + b)] >> c) & 1u; }
    void allow(int a, int b, int c) { triples[static_cast<std::size_t>(a * n + b)] |= RaElement{1} << c; }

    // Adds every triple Peircean-equivalent to one already present.
    void close();

    RaElement comp(RaElement x, RaElement y) const;
    RaElement conv(RaElement x) const;

    friend bool operator==(const AtomStructure&, const AtomStructure&) = default;
};

AtomStructure make_structure(int n, RaElement identity, const std::vector<int>& converse);

class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Text form: "atoms=<n> identity=<i,j,..> converse=<p0,p1,..>" followed by
// "cycle a b c" lines (c <= a;b).  '#' starts a comment.  The closure is
// applied on load; writing emits one line per closed orbit.
AtomStructure parse_structure(const std::string& text);
AtomStructure load_structure(const std::string& path);
std::string format_structure(const AtomStructure& s);

// Identity, converse and Peircean laws plus associativity, all at the
// level of atoms.
bool verify_axioms(const AtomStructure& s);

// Re(n): all binary relations on n points.  Atom i*n+j is the pair (i,j).
AtomStructure make_proper_ra(int n);

// ---------------------------------------------------------------------------
// integral enumeration

struct IntegralSignature {
    std::string label;           // normalized, e.g. "1'abb~"
    std::vector<int> converse;   // atom 0 is 1'
};

// Accepts "1'ab", "1'ab b̄", "1'abb~", "1'aābb̄" and the like.  A barred
// letter (combining macron, precomposed ā, or a trailing ~) is the converse
// of the plain letter before it.
IntegralSignature parse_signature(const std::string& text);

const std::vector<std::string>& table_signatures();  // the seven gated rows

class UnsupportedSignature : public std::invalid_argument {
public:
    explicit UnsupportedSignature(const std::string& what) : std::invalid_argument(what) {}
};

// Non-isomorphic integral algebras with the given atoms, each in the
// canonical labelling, sorted by canonical code.
std::vector<AtomStructure> enumerate_integral(const IntegralSignature& sig);
std::vector<AtomStructure> enumerate_integral(const std::string& signature);

// Lexicographically least triple bit string over relabellings that fix the
// identity atoms setwise and commute with converse.
std::vector<bool> canonical_code(const AtomStructure& s);
AtomStructure canonical_form(const AtomStructure& s);

// ---------------------------------------------------------------------------
// model adapter

class FinraModel {
public:
    using Elem = RaElement;

    explicit FinraModel(AtomStructure s);

    const AtomStructure& structure() const { return s_; }

    Elem zero() const { return 0; }
    Elem top() const { return s_.top(); }
    Elem id() const { return s_.identity; }
    Elem meet(Elem x, Elem y) const { return x & y; }
    Elem comp(Elem x, Elem y) const
    {
        return table_.empty() ? s_.comp(x, y) : table_[(static_cast<std::size_t>(x) << s_.n) | y];
    }
    Elem conv(Elem x) const { return s_.conv(x); }

    bool supports_ra() const { return true; }
    Elem join(Elem x, Elem y) const { return x | y; }
    Elem compl_(Elem x) const { return ~x & s_.top(); }

    bool has_generators() const { return false; }
    Elem gen_a() const;
    Elem gen_b() const;

    bool equal(Elem x, Elem y) const { return x == y; }
    bool leq(Elem x, Elem y) const { return (x & ~y) == 0; }

    // "0", "1", "id", or a join of atoms such as "a1 + a3"
    std::string show(Elem x) const;
    // Any RA term whose variables are atoms a<k>.
    Elem parse_element(const std::string& text) const;

    const std::vector<Elem>* elements() const { return elems_.empty() ? nullptr : &elems_; }

    bool can_sample() const { return true; }
    std::pair<std::string, Elem> sample(std::mt19937_64& rng) const;

    bool is_functional(Elem x) const { return leq(comp(conv(x), x), id()); }
    const std::vector<Elem>& functional_elements() const;

private:
    AtomStructure s_;
    std::vector<Elem> table_;
    std::vector<Elem> elems_;
    mutable std::vector<Elem> fn_;
};

// ---------------------------------------------------------------------------
// (J), (L), (M), (K)

struct JlmVerdict {
    bool fail_j = false, fail_l = false, fail_m = false;
    LawReport j, l, m;

    // one of the eight failure columns: "(J)(L)(M)", ..., "(M)", "none"
    std::string column() const;
};

// Exhaustive quantifies every variable over all elements, Atoms over atoms
// only; both need at most four atoms.  Sample draws `samples` assignments
// per formula.  For (L) and (M) the two exhaustive modes agree (the left
// side is additive in each variable, the right side monotone); the
// hypothesis of (J) breaks that argument and the verdicts can differ.
enum class JlmMode { Exhaustive, Atoms, Sample };

JlmVerdict check_jlm(const AtomStructure& s, JlmMode mode = JlmMode::Exhaustive, std::size_t samples = 100000,
                     std::uint64_t seed = 0);

const std::vector<std::string>& jlm_columns();
int jlm_column_index(const JlmVerdict& v);

struct JlmProfile {
    std::string label;
    std::size_t total = 0;
    std::vector<std::size_t> counts;  // indexed like jlm_columns()
};

JlmProfile jlm_profile(const std::string& label, const std::vector<AtomStructure>& structures,
                       JlmMode mode = JlmMode::Exhaustive);
std::string jlm_table_tsv(const std::vector<JlmProfile>& rows);

struct KReport {
    bool pass = true;
    std::vector<LawReport> laws;  // K(i) .. K(v)
    std::string str() const;
};

KReport check_k(const AtomStructure& s, std::size_t samples, std::uint64_t seed);

// ---------------------------------------------------------------------------
// tabularity and partial representations

class NotTabular : public std::runtime_error {
public:
    explicit NotTabular(const std::string& what) : std::runtime_error(what) {}
};

// Every v < w is separated: some functional p, q have 0 != conv(p);q <= w
// and v & conv(p);q = 0.
bool is_tabular(const AtomStructure& s);
std::pair<RaElement, RaElement> tabular_witness(const FinraModel& m, RaElement v, RaElement w);
std::pair<RaElement, RaElement> tabular_witness(const AtomStructure& s, RaElement v, RaElement w);

struct PartialRep {
    std::vector<RaElement> f;
    std::size_t size() const { return f.size(); }
};

using IndexRel = std::set<std::pair<std::size_t, std::size_t>>;

// Every f_i nonzero and functional, all with the same domain f_i;1.
bool is_partial_rep(const FinraModel& m, const PartialRep& f);

// {(i,j) : f_j <= f_i;x}
IndexRel hat(const FinraModel& m, const PartialRep& f, RaElement x);
IndexRel compose_rel(const IndexRel& r, const IndexRel& s);
IndexRel inverse_rel(const IndexRel& r);

// (i,j) in hat(x+y)  ==>  g with (i,j) in hat_g(x) or hat_g(y)
PartialRep extend_join(const FinraModel& m, const PartialRep& f, std::size_t i, std::size_t j, RaElement x,
                       RaElement y);
// (i,j) in hat(x;y)  ==>  g one longer, (i,m) in hat_g(x), (m,j) in hat_g(y)
PartialRep extend_comp(const FinraModel& m, const PartialRep& f, std::size_t i, std::size_t j, RaElement x,
                       RaElement y);

// Postconditions shared by both extensions: hat_f(z) within hat_g(z) and
// f_k;z & f_l = 0 implies g_k;z & g_l = 0, for every z and k, l < |f|.
bool extends(const FinraModel& m, const PartialRep& f, const PartialRep& g);

// The five closure properties of hat over the given elements; returns the
// first violated clause ("i".."v") or "" when all hold.
std::string hat_violation(const FinraModel& m, const PartialRep& f, const std::vector<RaElement>& xs);

struct Stage {
    std::size_t n = 0;
    std::size_t length = 0;
    std::string step;  // init, join, comp, or skip
    std::size_t i = 0, j = 0;
    RaElement x = 0, y = 0;
    bool a = false, b = false, c = false;
    std::string hat_clause;  // violated clause, empty if none

    std::string line(const FinraModel& m) const;
};

struct StageReport {
    RaElement v = 0, w = 0;
    std::vector<RaElement> schedule_elements;
    std::vector<Stage> stages;
    PartialRep final;
    bool separated = false;  // (0,1) in hat(w) but not in hat(v)
    bool ok = false;         // separated and every stage clean

    std::string str(const FinraModel& m) const;
};

// Builds f_0, ..., f_{2N} for N = stages, alternating join and composition
// steps over a seeded round-robin schedule of (i,j,x,y) with x, y drawn
// from the subalgebra generated by v and w (at most 16 elements).
StageReport build_stage_rep(const FinraModel& m, RaElement v, RaElement w, std::size_t stages,
                            std::uint64_t seed);

// Closure of gens under the RA operations, stopping once cap elements are
// found.
std::vector<RaElement> generated_subalgebra(const FinraModel& m, const std::vector<RaElement>& gens,
                                            std::size_t cap = 16);

}  // namespace qra
