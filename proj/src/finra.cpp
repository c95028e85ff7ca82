#include "qra/finra.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace qra {

namespace {

template <class F>
void for_bits(RaElement x, F&& f)
{
    while (x) {
        int k = std::countr_zero(x);
        f(k);
        x &= x - 1;
    }
}

struct Triple {
    int a, b, c;
    auto operator<=>(const Triple&) const = default;
};

// The two Peircean moves generate a group of order six on triples.
std::vector<Triple> orbit(const std::vector<int>& cv, Triple t)
{
    std::vector<Triple> out{t};
    for (std::size_t k = 0; k < out.size(); ++k) {
        auto [a, b, c] = out[k];
        for (Triple u : {Triple{cv[a], c, b}, Triple{c, cv[b], a}})
            if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> split_ints(const std::string& s, const std::string& key)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw FormatError("bad integer '" + tok + "' in " + key);
        }
    }
    return out;
}

}  // namespace

void AtomStructure::close()
{
    bool grew = true;
    while (grew) {
        grew = false;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for_bits(triples[static_cast<std::size_t>(a * n + b)], [&](int c) {
                    for (Triple u : {Triple{converse[a], c, b}, Triple{c, converse[b], a}}) {
                        if (!allowed(u.a, u.b, u.c)) {
                            allow(u.a, u.b, u.c);
                            grew = true;
                        }
                    }
                });
    }
}

RaElement AtomStructure::comp(RaElement x, RaElement y) const
{
    RaElement out = 0;
    for_bits(x, [&](int a) {
        const RaElement* row = &triples[static_cast<std::size_t>(a * n)];
        for_bits(y, [&](int b) { out |= row[b]; });
    });
    return out;
}

RaElement AtomStructure::conv(RaElement x) const
{
    RaElement out = 0;
    for_bits(x, [&](int a) { out |= RaElement{1} << converse[static_cast<std::size_t>(a)]; });
    return out;
}

AtomStructure make_structure(int n, RaElement identity, const std::vector<int>& converse)
{
    if (n < 1 || n > kMaxAtoms) throw std::invalid_argument("atom count must be 1.." + std::to_string(kMaxAtoms));
    if (static_cast<int>(converse.size()) != n) throw std::invalid_argument("converse has the wrong length");
    for (int a = 0; a < n; ++a) {
        int c = converse[static_cast<std::size_t>(a)];
        if (c < 0 || c >= n || converse[static_cast<std::size_t>(c)] != a)
            throw std::invalid_argument("converse is not an involution");
    }
    AtomStructure s;
    s.n = n;
    s.converse = converse;
    s.identity = identity & s.top();
    s.triples.assign(static_cast<std::size_t>(n * n), 0);
    return s;
}

// ---------------------------------------------------------------------------
// text form

AtomStructure parse_structure(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    bool header = false;
    AtomStructure s;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::vector<std::string> words;
        for (std::string w; ls >> w;) words.push_back(w);
        if (words.empty()) continue;
        auto where = " (line " + std::to_string(lineno) + ")";
        if (!header) {
            int n = -1;
            std::vector<int> ident, conv;
            bool have_conv = false;
            for (auto& w : words) {
                auto eq = w.find('=');
                if (eq == std::string::npos) throw FormatError("expected key=value, got '" + w + "'" + where);
                auto key = w.substr(0, eq), val = w.substr(eq + 1);
                if (key == "atoms") {
                    auto v = split_ints(val, key);
                    if (v.size() != 1) throw FormatError("atoms takes one number" + where);
                    n = v[0];
                } else if (key == "identity") {
                    ident = split_ints(val, key);
                } else if (key == "converse") {
                    conv = split_ints(val, key);
                    have_conv = true;
                } else {
                    throw FormatError("unknown key '" + key + "'" + where);
                }
            }
            if (n < 1 || n > kMaxAtoms) throw FormatError("atoms must be 1.." + std::to_string(kMaxAtoms) + where);
            if (ident.empty()) throw FormatError("no identity atoms" + where);
            if (!have_conv) {
                conv.resize(static_cast<std::size_t>(n));
                std::iota(conv.begin(), conv.end(), 0);
            }
            RaElement id = 0;
            for (int i : ident) {
                if (i < 0 || i >= n) throw FormatError("identity atom out of range" + where);
                id |= RaElement{1} << i;
            }
            try {
                s = make_structure(n, id, conv);
            } catch (const std::invalid_argument& e) {
                throw FormatError(e.what() + where);
            }
            header = true;
            continue;
        }
        if (words[0] != "cycle" || words.size() != 4) throw FormatError("expected 'cycle a b c'" + where);
        int t[3];
        for (int k = 0; k < 3; ++k) {
            auto v = split_ints(words[static_cast<std::size_t>(k + 1)], "cycle");
            if (v.size() != 1 || v[0] < 0 || v[0] >= s.n) throw FormatError("atom out of range" + where);
            t[k] = v[0];
        }
        s.allow(t[0], t[1], t[2]);
    }
    if (!header) throw FormatError("missing header line");
    s.close();
    return s;
}

AtomStructure load_structure(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_structure(ss.str());
}

std::string format_structure(const AtomStructure& s)
{
    std::ostringstream os;
    os << "atoms=" << s.n << " identity=";
    bool first = true;
    for_bits(s.identity, [&](int k) {
        os << (first ? "" : ",") << k;
        first = false;
    });
    os << " converse=";
    for (int a = 0; a < s.n; ++a) os << (a ? "," : "") << s.converse[static_cast<std::size_t>(a)];
    os << '\n';
    std::set<Triple> seen;
    for (int a = 0; a < s.n; ++a)
        for (int b = 0; b < s.n; ++b)
            for (int c = 0; c < s.n; ++c) {
                if (!s.allowed(a, b, c) || seen.count({a, b, c})) continue;
                for (auto& t : orbit(s.converse, {a, b, c})) seen.insert(t);
                os << "cycle " << a << ' ' << b << ' ' << c << '\n';
            }
    return os.str();
}

// ---------------------------------------------------------------------------
// axioms

bool verify_axioms(const AtomStructure& s)
{
    const int n = s.n;
    if (n < 1 || n > kMaxAtoms || static_cast<int>(s.converse.size()) != n ||
        s.triples.size() != static_cast<std::size_t>(n * n))
        return false;
    for (int a = 0; a < n; ++a) {
        int c = s.converse[static_cast<std::size_t>(a)];
        if (c < 0 || c >= n || s.converse[static_cast<std::size_t>(c)] != a) return false;
    }
    if (s.identity == 0 || (s.identity & ~s.top())) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (s.allowed(a, b, c) &&
                    !(s.allowed(s.converse[a], c, b) && s.allowed(c, s.converse[b], a)))
                    return false;
    for (int a = 0; a < n; ++a) {
        RaElement x = RaElement{1} << a;
        if (s.comp(s.identity, x) != x || s.comp(x, s.identity) != x) return false;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            RaElement ab = s.triples[static_cast<std::size_t>(a * n + b)];
            for (int c = 0; c < n; ++c) {
                RaElement bc = s.triples[static_cast<std::size_t>(b * n + c)];
                if (s.comp(ab, RaElement{1} << c) != s.comp(RaElement{1} << a, bc)) return false;
            }
        }
    return true;
}

AtomStructure make_proper_ra(int n)
{
    if (n < 1 || n > 4) throw std::invalid_argument("Re(n) is built for 1 <= n <= 4");
    std::vector<int> cv(static_cast<std::size_t>(n * n));
    RaElement id = 0;
    for (int i = 0; i < n; ++i) {
        id |= RaElement{1} << (i * n + i);
        for (int j = 0; j < n; ++j) cv[static_cast<std::size_t>(i * n + j)] = j * n + i;
    }
    AtomStructure s = make_structure(n * n, id, cv);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) s.allow(i * n + j, j * n + k, i * n + k);
    return s;
}

// ---------------------------------------------------------------------------
// integral enumeration

IntegralSignature parse_signature(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    std::size_t pos;
    if (s.rfind("1'", 0) == 0)
        pos = 2;
    else if (s.rfind("1’", 0) == 0)
        pos = 1 + std::string("’").size();
    else
        throw UnsupportedSignature("signature must start with 1': '" + text + "'");

    static const std::map<std::string, char> precomposed = {
        {"ā", 'a'}, {"ē", 'e'}, {"ī", 'i'}, {"ō", 'o'}, {"ū", 'u'}};
    const std::string macron = "̄";

    IntegralSignature sig;
    sig.label = "1'";
    std::vector<char> letters{'\0'};
    std::vector<int> cv{0};
    std::map<char, int> plain;
    std::set<char> barred;
    auto add_bar = [&](char c) {
        auto it = plain.find(c);
        if (it == plain.end()) throw UnsupportedSignature(std::string("converse of undeclared atom ") + c);
        if (!barred.insert(c).second || cv[static_cast<std::size_t>(it->second)] != it->second)
            throw UnsupportedSignature(std::string("atom ") + c + " already has a converse");
        int k = static_cast<int>(cv.size());
        cv.push_back(it->second);
        cv[static_cast<std::size_t>(it->second)] = k;
        letters.push_back(c);
    };
    while (pos < s.size()) {
        bool matched = false;
        for (auto& [utf, c] : precomposed) {
            if (s.compare(pos, utf.size(), utf) == 0) {
                add_bar(c);
                pos += utf.size();
                matched = true;
                break;
            }
        }
        if (matched) continue;
        char c = s[pos];
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw UnsupportedSignature("unexpected character in signature '" + text + "'");
        ++pos;
        bool bar = false;
        if (pos < s.size() && s[pos] == '~') {
            bar = true;
            ++pos;
        } else if (s.compare(pos, macron.size(), macron) == 0) {
            bar = true;
            pos += macron.size();
        }
        if (bar) {
            add_bar(c);
        } else {
            if (!plain.emplace(c, static_cast<int>(cv.size())).second)
                throw UnsupportedSignature(std::string("atom ") + c + " declared twice");
            cv.push_back(static_cast<int>(cv.size()));
            letters.push_back(c);
        }
    }
    for (std::size_t k = 1; k < letters.size(); ++k) {
        sig.label += letters[k];
        if (cv[k] < static_cast<int>(k)) sig.label += '~';
    }
    sig.converse = cv;
    return sig;
}

const std::vector<std::string>& table_signatures()
{
    static const std::vector<std::string> rows = {"1'", "1'a", "1'aa~", "1'ab", "1'abb~", "1'abc", "1'aa~bb~"};
    return rows;
}

namespace {

const std::vector<std::string>& stretch_signatures()
{
    static const std::vector<std::string> rows = {"1'abcc~", "1'abcd"};
    return rows;
}

// Relabellings fixing the identity atoms setwise and commuting with converse.
std::vector<std::vector<int>> symmetries(const AtomStructure& s)
{
    if (s.n > 8) throw std::invalid_argument("canonical forms are computed for at most 8 atoms");
    std::vector<int> p(static_cast<std::size_t>(s.n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int a = 0; a < s.n && ok; ++a) {
            bool ida = (s.identity >> a) & 1u, idp = (s.identity >> p[static_cast<std::size_t>(a)]) & 1u;
            ok = ida == idp && p[static_cast<std::size_t>(s.converse[a])] == s.converse[static_cast<std::size_t>(p[a])];
        }
        if (ok) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<bool> code_under(const AtomStructure& s, const std::vector<int>& p)
{
    // bit (a,b,c) of the relabelled structure is s.allowed(p^-1 a, ...)
    std::vector<int> inv(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) inv[static_cast<std::size_t>(p[k])] = static_cast<int>(k);
    std::vector<bool> code;
    code.reserve(static_cast<std::size_t>(s.n * s.n * s.n));
    for (int a = 0; a < s.n; ++a)
        for (int b = 0; b < s.n; ++b)
            for (int c = 0; c < s.n; ++c)
                code.push_back(s.allowed(inv[static_cast<std::size_t>(a)], inv[static_cast<std::size_t>(b)],
                                         inv[static_cast<std::size_t>(c)]));
    return code;
}

std::vector<bool> least_code(const AtomStructure& s, const std::vector<std::vector<int>>& syms, std::size_t* arg)
{
    std::vector<bool> best;
    for (std::size_t k = 0; k < syms.size(); ++k) {
        auto c = code_under(s, syms[k]);
        if (k == 0 || c < best) {
            best = std::move(c);
            if (arg) *arg = k;
        }
    }
    return best;
}

AtomStructure relabel(const AtomStructure& s, const std::vector<int>& p)
{
    AtomStructure t = make_structure(s.n, 0, s.converse);
    for_bits(s.identity, [&](int a) { t.identity |= RaElement{1} << p[static_cast<std::size_t>(a)]; });
    for (int a = 0; a < s.n; ++a)
        for (int b = 0; b < s.n; ++b)
            for_bits(s.triples[static_cast<std::size_t>(a * s.n + b)], [&](int c) {
                t.allow(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)], p[static_cast<std::size_t>(c)]);
            });
    return t;
}

}  // namespace

std::vector<bool> canonical_code(const AtomStructure& s) { return least_code(s, symmetries(s), nullptr); }

AtomStructure canonical_form(const AtomStructure& s)
{
    auto syms = symmetries(s);
    std::size_t k = 0;
    least_code(s, syms, &k);
    return relabel(s, syms[k]);
}

std::vector<AtomStructure> enumerate_integral(const IntegralSignature& sig)
{
    const auto& gated = table_signatures();
    const auto& extra = stretch_signatures();
    if (std::find(gated.begin(), gated.end(), sig.label) == gated.end() &&
        std::find(extra.begin(), extra.end(), sig.label) == extra.end())
        throw UnsupportedSignature("no enumeration for signature " + sig.label);

    const int n = static_cast<int>(sig.converse.size());
    AtomStructure base = make_structure(n, 1, sig.converse);
    for (int x = 0; x < n; ++x) {
        base.allow(0, x, x);
        base.allow(x, 0, x);
        base.allow(x, sig.converse[static_cast<std::size_t>(x)], 0);
    }
    base.close();

    // cycles among diversity atoms, each present or absent as a whole
    std::vector<std::vector<Triple>> cycles;
    std::set<Triple> seen;
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b)
            for (int c = 1; c < n; ++c) {
                if (seen.count({a, b, c})) continue;
                auto o = orbit(sig.converse, {a, b, c});
                for (auto& t : o) seen.insert(t);
                cycles.push_back(o);
            }
    if (cycles.size() > 30) throw UnsupportedSignature("too many cycles to enumerate for " + sig.label);

    auto syms = symmetries(base);
    std::map<std::vector<bool>, AtomStructure> found;
    const std::uint64_t total = std::uint64_t{1} << cycles.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        AtomStructure s = base;
        for (std::size_t k = 0; k < cycles.size(); ++k)
            if ((mask >> k) & 1u)
                for (auto& t : cycles[k]) s.allow(t.a, t.b, t.c);
        if (!verify_axioms(s)) continue;
        std::size_t arg = 0;
        auto code = least_code(s, syms, &arg);
        if (!found.count(code)) found.emplace(std::move(code), relabel(s, syms[arg]));
    }
    std::vector<AtomStructure> out;
    out.reserve(found.size());
    for (auto& [code, s] : found) out.push_back(s);
    return out;
}

std::vector<AtomStructure> enumerate_integral(const std::string& signature)
{
    return enumerate_integral(parse_signature(signature));
}

// ---------------------------------------------------------------------------
// model adapter

FinraModel::FinraModel(AtomStructure s) : s_(std::move(s))
{
    if (s_.n < 1 || s_.n > kMaxAtoms) throw std::invalid_argument("atom count must be 1.." + std::to_string(kMaxAtoms));
    const std::size_t size = std::size_t{1} << s_.n;
    elems_.resize(size);
    std::iota(elems_.begin(), elems_.end(), RaElement{0});
    if (s_.n <= 6) {
        table_.resize(size * size);
        for (RaElement x = 0; x < size; ++x)
            for (RaElement y = 0; y < size; ++y) table_[(static_cast<std::size_t>(x) << s_.n) | y] = s_.comp(x, y);
    }
}

FinraModel::Elem FinraModel::gen_a() const { throw EngineError("a finite algebra has no fixed a"); }
FinraModel::Elem FinraModel::gen_b() const { throw EngineError("a finite algebra has no fixed b"); }

std::string FinraModel::show(Elem x) const
{
    if (x == 0) return "0";
    if (x == top()) return "1";
    if (x == id()) return "id";
    std::string out;
    for_bits(x, [&](int k) { out += (out.empty() ? "a" : " + a") + std::to_string(k); });
    return out;
}

FinraModel::Elem FinraModel::parse_element(const std::string& text) const
{
    Term t = parse_term(text, Mode::RA);
    std::vector<std::string> vars;
    t.collect_vars(vars);
    std::map<std::string, Elem> env;
    for (auto& v : vars) {
        int k = -1;
        if (v.size() >= 2 && v[0] == 'a' && std::all_of(v.begin() + 1, v.end(), ::isdigit)) k = std::stoi(v.substr(1));
        if (k < 0 || k >= s_.n) throw FormatError("'" + v + "' is not an atom of this algebra");
        env[v] = RaElement{1} << k;
    }
    try {
        return eval(*this, t, env);
    } catch (const EngineError& e) {
        throw FormatError(std::string("element '") + text + "': " + e.what());
    }
}

std::pair<std::string, FinraModel::Elem> FinraModel::sample(std::mt19937_64& rng) const
{
    Elem x = static_cast<Elem>(rng() & top());
    return {show(x), x};
}

const std::vector<FinraModel::Elem>& FinraModel::functional_elements() const
{
    if (fn_.empty())
        for (Elem x : elems_)
            if (is_functional(x)) fn_.push_back(x);
    return fn_;
}

// ---------------------------------------------------------------------------
// (J), (L), (M), (K)

const std::vector<std::string>& jlm_columns()
{
    static const std::vector<std::string> cols = {"(J)(L)(M)", "(J)(L)", "(J)(M)", "(L)(M)",
                                                  "(J)",       "(L)",    "(M)",    "none"};
    return cols;
}

int jlm_column_index(const JlmVerdict& v)
{
    int bits = (v.fail_j ? 4 : 0) | (v.fail_l ? 2 : 0) | (v.fail_m ? 1 : 0);
    static const int idx[8] = {7, 6, 5, 3, 4, 2, 1, 0};
    return idx[bits];
}

std::string JlmVerdict::column() const { return jlm_columns()[static_cast<std::size_t>(jlm_column_index(*this))]; }

namespace {

// Element-level tables for at most 16 elements.  The three formulas are
// evaluated by nested loops with every subterm computed at the outermost
// loop where its value is fixed.
struct SmallTables {
    std::uint8_t c[16][16];
    std::uint8_t v[16];
    int size;

    explicit SmallTables(const FinraModel& m) : size(1 << m.structure().n)
    {
        for (int x = 0; x < size; ++x) {
            v[x] = static_cast<std::uint8_t>(m.conv(static_cast<RaElement>(x)));
            for (int y = 0; y < size; ++y)
                c[x][y] = static_cast<std::uint8_t>(m.comp(static_cast<RaElement>(x), static_cast<RaElement>(y)));
        }
    }
    std::uint8_t operator()(int x, int y) const { return c[x][y]; }
};

bool below(int x, int y) { return (x & ~y) == 0; }

void fail(LawReport& r, const FinraModel& m, const std::vector<std::string>& names, std::initializer_list<int> vals,
          const std::string& concl)
{
    r.pass = false;
    r.failed_conclusion = concl;
    auto it = vals.begin();
    for (auto& n : names) r.counterexample.emplace_back(n, m.show(static_cast<RaElement>(*it++)));
}

LawReport start(const char* id, const char* how)
{
    LawReport r;
    r.id = id;
    r.strategy = how;
    return r;
}

LawReport exhaustive_j(const FinraModel& m, const SmallTables& T, const std::vector<int>& D, const char* how)
{
    const Law& law = *find_law("J");
    LawReport r = start("J", how);
    for (int u : D)
        for (int x : D) {
            int ux = T(T.v[u], x);
            for (int v : D) {
                int uv = T(u, v);
                for (int y : D) {
                    int h = ux & T(v, T.v[y]);
                    int lhs = uv & T(x, y);
                    for (int a : D) {
                        int ca = T.v[a], uca = T(u, ca), av = T(a, v);
                        for (int b : D) {
                            ++r.attempted;
                            if (!below(h, T(ca, b))) continue;
                            ++r.tested;
                            int rhs = T(uca & T(x, T.v[b]), av & T(b, y));
                            if (!below(lhs, rhs)) {
                                fail(r, m, {"a", "b", "u", "v", "x", "y"}, {a, b, u, v, x, y}, law.concls[0].str());
                                return r;
                            }
                        }
                    }
                }
            }
        }
    return r;
}

LawReport exhaustive_l(const FinraModel& m, const SmallTables& T, const std::vector<int>& D, const char* how)
{
    const Law& law = *find_law("L");
    LawReport r = start("L", how);
    for (int x20 : D) {
        int x02 = T.v[x20];
        for (int x03 : D) {
            int p1 = T(x20, x03);
            for (int x21 : D) {
                int d21 = T(x02, x21);
                for (int x13 : D) {
                    int x31 = T.v[x13];
                    int l12 = p1 & T(x21, x13);
                    int s = d21 & T(x03, x31);
                    for (int x24 : D) {
                        int t1 = T(x02, x24), u1 = T(T.v[x24], x21);
                        for (int x43 : D) {
                            ++r.attempted;
                            ++r.tested;
                            int lhs = l12 & T(x24, x43);
                            int inner = s & T(t1 & T(x03, T.v[x43]), u1 & T(x43, x31));
                            int rhs = T(T(x20, inner), x13);
                            if (!below(lhs, rhs)) {
                                fail(r, m, law.vars, {x20, x03, x21, x13, x24, x43}, law.concls[0].str());
                                return r;
                            }
                        }
                    }
                }
            }
        }
    }
    return r;
}

LawReport exhaustive_m(const FinraModel& m, const SmallTables& T, const std::vector<int>& D, const char* how)
{
    const Law& law = *find_law("M");
    LawReport r = start("M", how);
    for (int x01 : D)
        for (int x02 : D)
            for (int x05 : D) {
                int x50 = T.v[x05], e1 = T(x50, x01);
                for (int x52 : D) {
                    int a = x02 & T(x05, x52);
                    for (int x21 : D) {
                        int e = e1 & T(x52, x21);
                        for (int x26 : D) {
                            int c = T(x52, x26), g = T(x02, x26);
                            for (int x61 : D) {
                                ++r.attempted;
                                ++r.tested;
                                int x16 = T.v[x61];
                                int lhs = x01 & T(a, x21 & T(x26, x61));
                                if (lhs == 0) continue;
                                int d = T(x50, T(x01, x16) & g);
                                int rhs = T(T(x05, T(e, x16) & c & d), x61);
                                if (!below(lhs, rhs)) {
                                    fail(r, m, law.vars, {x01, x02, x05, x52, x21, x26, x61}, law.concls[0].str());
                                    return r;
                                }
                            }
                        }
                    }
                }
            }
    return r;
}

}  // namespace

JlmVerdict check_jlm(const AtomStructure& s, JlmMode mode, std::size_t samples, std::uint64_t seed)
{
    if (mode != JlmMode::Sample && s.n > 4)
        throw std::invalid_argument("exhaustive (J)/(L)/(M) checking needs at most 4 atoms");
    FinraModel m(s);
    JlmVerdict v;
    if (mode == JlmMode::Sample) {
        Strategy st = Strategy::sample(samples, seed);
        v.j = check_law(m, *find_law("J"), st);
        v.l = check_law(m, *find_law("L"), st);
        v.m = check_law(m, *find_law("M"), st);
    } else {
        SmallTables t(m);
        std::vector<int> dom;
        for (int x = 0; x < t.size; ++x)
            if (mode == JlmMode::Exhaustive || std::has_single_bit(static_cast<unsigned>(x))) dom.push_back(x);
        const char* how = mode == JlmMode::Exhaustive ? "exhaustive" : "atoms";
        v.j = exhaustive_j(m, t, dom, how);
        v.l = exhaustive_l(m, t, dom, how);
        v.m = exhaustive_m(m, t, dom, how);
    }
    v.fail_j = !v.j.pass;
    v.fail_l = !v.l.pass;
    v.fail_m = !v.m.pass;
    return v;
}

JlmProfile jlm_profile(const std::string& label, const std::vector<AtomStructure>& structures, JlmMode mode)
{
    JlmProfile p;
    p.label = label;
    p.total = structures.size();
    p.counts.assign(jlm_columns().size(), 0);
    for (auto& s : structures) ++p.counts[static_cast<std::size_t>(jlm_column_index(check_jlm(s, mode)))];
    return p;
}

std::string jlm_table_tsv(const std::vector<JlmProfile>& rows)
{
    std::ostringstream os;
    os << "atoms\ttotal";
    for (auto& c : jlm_columns()) os << '\t' << c;
    os << '\n';
    for (auto& r : rows) {
        os << r.label << '\t' << r.total;
        for (auto c : r.counts) os << '\t' << c;
        os << '\n';
    }
    return os.str();
}

std::string KReport::str() const
{
    std::string out;
    for (auto& l : laws) out += l.line() + "\n";
    out += std::string("K ") + (pass ? "pass" : "fail") + "\n";
    return out;
}

KReport check_k(const AtomStructure& s, std::size_t samples, std::uint64_t seed)
{
    FinraModel m(s);
    KReport r;
    for (const char* id : {"K(i)", "K(ii)", "K(iii)", "K(iv)", "K(v)"}) {
        r.laws.push_back(check_law(m, *find_law(id), Strategy::sample(samples, seed)));
        r.pass = r.pass && r.laws.back().pass;
    }
    return r;
}

}  // namespace qra
