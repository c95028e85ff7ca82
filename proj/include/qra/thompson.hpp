// Generators of Thompson's groups F, T, V and monoid M as terms over the
// quasiprojections a, b, the fork-style operators built from a and b, and
// the presentation suites evaluated in the tree-relation model.
#pragma once

#include "qra/term.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qra {

// x∇y = x;ă & y;b̆,  x⊗y = a;x;ă & b;y;b̆,  fkc(x,y) = a;x & b;y.
// A factor equal to id is dropped from each product.
Term nabla(const Term& x, const Term& y);
Term otimes(const Term& x, const Term& y);
Term fkc(const Term& x, const Term& y);
Term defer0(const Term& x);  // x⊗id
Term defer1(const Term& x);  // id⊗x

// K L U P P0 A R R0 B C pi0, X1 X2 X3 C1 C2 C3 pi1 pi2 pi3,
// u v t0001 t011011 t100.
const std::map<std::string, Term>& generator_terms();
const Term& generator(const std::string& name);
std::vector<std::string> generator_names();  // in declaration order

// Each generator's closed form as written in the term grammar, with other
// generator names standing for their terms.  Used to cross-check the
// constructors above.
const std::vector<std::pair<std::string, std::string>>& generator_closed_forms();

// Replace variables whose names are generators by the generator terms.
Term expand_generators(const Term& t);

struct SuiteEntry {
    std::string name;
    std::string relation;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string id;
    std::vector<SuiteEntry> entries;
    bool error = false;
    std::string error_message;

    bool pass() const;
    std::vector<std::string> failed() const;
    std::string line() const;
    std::string digest() const;  // hash of the generator environment
};

std::vector<std::string> suite_ids();
SuiteReport run_suite(const std::string& id);
SuiteReport bleak_quick_checks();

// Elements the M relations quantify over: id, all a/b words of length 1..3,
// and the functional named generators.
std::vector<std::pair<std::string, Term>> m_sample();

}  // namespace qra
