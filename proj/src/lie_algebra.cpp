#include "liecoh/lie_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "liecoh/errors.hpp"
#include "liecoh/polynomial.hpp"

namespace liecoh {

const char* to_string(CompletelySolvable v) {
    switch (v) {
        case CompletelySolvable::CertifiedYes: return "CERTIFIED_YES";
        case CompletelySolvable::NecessaryConditionsPass: return "NECESSARY_CONDITIONS_PASS";
        case CompletelySolvable::No: return "NO";
    }
    return "?";
}

LieAlgebra LieAlgebra::from_differentials(std::vector<Form> differentials, std::string name) {
    LieAlgebra L;
    L.n_ = static_cast<int>(differentials.size());
    L.name_ = std::move(name);
    L.dgen_ = std::move(differentials);
    for (int k = 1; k <= L.n_; ++k) {
        const Form& d = L.dgen_[static_cast<std::size_t>(k - 1)];
        if (d.degree() != 2 || d.ambient_dim() != L.n_)
            throw std::invalid_argument("LieAlgebra: d e^" + std::to_string(k) +
                                        " must be a 2-form in ambient dimension " +
                                        std::to_string(L.n_));
    }

    // brackets by duality: c^k_ij = -(coefficient of e^i^e^j in d e^k)
    for (int i = 1; i <= L.n_; ++i) {
        for (int j = i + 1; j <= L.n_; ++j) {
            Form b(L.n_, 1);
            IndexSet ij({i, j});
            for (int k = 1; k <= L.n_; ++k) {
                Rat c = L.dgen_[static_cast<std::size_t>(k - 1)].coefficient(ij);
                if (c != 0) b.add_term(IndexSet({k}), -c);
            }
            L.brackets_.emplace(std::make_pair(i, j), std::move(b));
        }
    }

    // Jacobi check on all triples, recorded once at construction.
    for (int i = 1; i <= L.n_; ++i)
        for (int j = i + 1; j <= L.n_; ++j)
            for (int k = j + 1; k <= L.n_; ++k) {
                Form ei = Form::generator(L.n_, i);
                Form ej = Form::generator(L.n_, j);
                Form ek = Form::generator(L.n_, k);
                Form jac = L.bracket_of(L.bracket(i, j), ek) +
                           L.bracket_of(L.bracket(j, k), ei) +
                           L.bracket_of(L.bracket_of(ek, ei), ej);
                if (!jac.is_zero()) L.jacobi_violations_.emplace_back(i, j, k);
            }
    return L;
}

const Form& LieAlgebra::generator_differential(int k) const {
    if (k < 1 || k > n_) throw std::out_of_range("generator_differential: index out of range");
    return dgen_[static_cast<std::size_t>(k - 1)];
}

const Form& LieAlgebra::bracket(int i, int j) const {
    if (!(1 <= i && i < j && j <= n_)) throw std::out_of_range("bracket: need 1 <= i < j <= n");
    return brackets_.at(std::make_pair(i, j));
}

Form LieAlgebra::bracket_of(const Form& v, const Form& w) const {
    if (v.ambient_dim() != n_ || w.ambient_dim() != n_)
        throw std::invalid_argument("bracket_of: ambient dimension mismatch");
    if (v.degree() != 1 || w.degree() != 1)
        throw std::invalid_argument("bracket_of: arguments must have degree 1");
    Form out(n_, 1);
    for (const auto& [vi, cv] : v.terms()) {
        for (const auto& [wj, cw] : w.terms()) {
            int i = vi.indices()[0], j = wj.indices()[0];
            if (i == j) continue;
            const Form& b = (i < j) ? bracket(i, j) : bracket(j, i);
            Rat f = cv * cw * (i < j ? 1 : -1);
            for (const auto& [lab, c] : b.terms()) out.add_term(lab, c * f);
        }
    }
    return out;
}

void LieAlgebra::require_jacobi() const {
    if (!jacobi_ok())
        throw std::domain_error("Lie algebra '" + name_ + "' violates the Jacobi identity");
}

Form LieAlgebra::ce_differential(const Form& a) const {
    if (a.ambient_dim() != n_)
        throw std::invalid_argument("ce_differential: ambient dimension mismatch");
    Form out(n_, a.degree() + 1);
    for (const auto& [label, c] : a.terms()) {
        const auto& idx = label.indices();
        // graded derivation: d(e^{i1..ik}) = sum_t (-1)^{t-1} e^{i1..} ^ d e^{it} ^ ..
        for (std::size_t t = 0; t < idx.size(); ++t) {
            const Form& dt = dgen_[static_cast<std::size_t>(idx[t] - 1)];
            if (dt.is_zero()) continue;
            std::vector<int> rest;
            rest.reserve(idx.size() - 1);
            for (std::size_t s = 0; s < idx.size(); ++s)
                if (s != t) rest.push_back(idx[s]);
            Rat f = c * ((t % 2 == 0) ? 1 : -1);
            IndexSet rest_label{rest};
            for (const auto& [dlab, dc] : dt.terms()) {
                auto merged = merge_with_sign(dlab, rest_label);
                if (!merged) continue;
                out.add_term(merged->first, f * dc * merged->second);
            }
        }
    }
    return out;
}

RatMatrix LieAlgebra::ad(const Form& v) const {
    if (v.degree() != 1) throw std::invalid_argument("ad: argument must have degree 1");
    if (v.ambient_dim() != n_) throw std::invalid_argument("ad: ambient dimension mismatch");
    RatMatrix m(n_, n_);
    for (int j = 1; j <= n_; ++j) {
        Form col = bracket_of(v, Form::generator(n_, j));
        for (const auto& [lab, c] : col.terms()) m.at(lab.indices()[0] - 1, j - 1) = c;
    }
    return m;
}

namespace {

std::vector<Rat> form_to_vector(const Form& f, int n) {
    std::vector<Rat> v(static_cast<std::size_t>(n), Rat(0));
    for (const auto& [lab, c] : f.terms()) v[static_cast<std::size_t>(lab.indices()[0] - 1)] = c;
    return v;
}

Form vector_to_form(const std::vector<Rat>& v, int n) {
    Form f(n, 1);
    for (int i = 0; i < n; ++i)
        if (v[static_cast<std::size_t>(i)] != 0) f.add_term(IndexSet({i + 1}), v[static_cast<std::size_t>(i)]);
    return f;
}

// Canonical basis (RREF rows) of the span of the given degree-1 forms.
std::vector<Form> span_basis(const std::vector<Form>& gens, int n) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& g : gens)
        if (!g.is_zero()) rows.push_back(form_to_vector(g, n));
    if (rows.empty()) return {};
    RatMatrix r = rref(RatMatrix::from_rows(rows));
    std::vector<Form> out;
    for (int i = 0; i < r.rows(); ++i) out.push_back(vector_to_form(r.row(i), n));
    return out;
}

}  // namespace

StructureReport LieAlgebra::structure_report() const {
    require_jacobi();
    StructureReport rep;
    rep.jacobi_ok = true;

    std::vector<Form> full;
    for (int i = 1; i <= n_; ++i) full.push_back(Form::generator(n_, i));

    // lower central series: g, [g,g], [g,[g,g]], ...
    {
        std::vector<Form> cur = full;
        int steps = 0;
        rep.nilpotent = cur.empty();
        while (!cur.empty() && steps <= n_ + 1) {
            std::vector<Form> next_gens;
            for (const auto& g : full)
                for (const auto& h : cur) next_gens.push_back(bracket_of(g, h));
            std::vector<Form> next = span_basis(next_gens, n_);
            ++steps;
            if (next.empty()) {
                rep.nilpotent = true;
                rep.nilpotency_class = steps;
                break;
            }
            if (next.size() == cur.size()) break;  // stabilized nonzero
            cur = std::move(next);
        }
        if (n_ == 0) {
            rep.nilpotent = true;
            rep.nilpotency_class = 0;
        }
    }

    // derived series: g, [g,g], [[g,g],[g,g]], ...
    {
        std::vector<Form> cur = full;
        int steps = 0;
        rep.solvable = cur.empty();
        while (!cur.empty() && steps <= n_ + 1) {
            std::vector<Form> next_gens;
            for (std::size_t i = 0; i < cur.size(); ++i)
                for (std::size_t j = i + 1; j < cur.size(); ++j)
                    next_gens.push_back(bracket_of(cur[i], cur[j]));
            std::vector<Form> next = span_basis(next_gens, n_);
            ++steps;
            if (next.empty()) {
                rep.solvable = true;
                rep.derived_length = steps;
                break;
            }
            if (next.size() == cur.size()) break;
            cur = std::move(next);
        }
        if (n_ == 0) {
            rep.solvable = true;
            rep.derived_length = 0;
        }
    }

    rep.unimodular = true;
    for (int i = 1; i <= n_ && rep.unimodular; ++i) {
        RatMatrix m = ad(Form::generator(n_, i));
        Rat tr(0);
        for (int d = 0; d < n_; ++d) tr += m.at(d, d);
        if (tr != 0) rep.unimodular = false;
    }

    if (rep.nilpotent) {
        // nilpotent ad operators have only the eigenvalue 0
        rep.completely_solvable = CompletelySolvable::CertifiedYes;
    } else if (!rep.solvable) {
        rep.completely_solvable = CompletelySolvable::No;
    } else {
        // Deterministic sample set {e_i} u {e_1+...+e_m : m <= n}; a non-real
        // eigenvalue of any sampled ad V certifies NO by Sturm counting, a
        // full pass is a necessary condition only.
        rep.completely_solvable = CompletelySolvable::NecessaryConditionsPass;
        std::vector<Form> samples;
        for (int i = 1; i <= n_; ++i) samples.push_back(Form::generator(n_, i));
        Form acc = Form::generator(n_, 1);
        for (int m = 2; m <= n_; ++m) {
            acc = acc + Form::generator(n_, m);
            samples.push_back(acc);
        }
        for (const auto& v : samples) {
            Poly chi = characteristic_polynomial(ad(v));
            if (!all_roots_real(chi)) {
                rep.completely_solvable = CompletelySolvable::No;
                break;
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// tuple grammar
// ---------------------------------------------------------------------------

namespace {

struct TupleScanner {
    std::string_view s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw CatalogError(msg, 0, static_cast<int>(pos) + 1);
    }
    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Int read_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return Int(std::string(s.substr(start, pos - start)), 10);
    }

    // pair is "ij" (single digits) or "(i,j)"
    std::pair<int, int> read_pair() {
        skip_ws();
        if (eat('(')) {
            Int i = read_integer();
            if (!eat(',')) fail("expected ',' in index pair");
            Int j = read_integer();
            if (!eat(')')) fail("expected ')' closing index pair");
            return {static_cast<int>(i.get_si()), static_cast<int>(j.get_si())};
        }
        if (pos + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])) &&
            std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
            int i = s[pos] - '0';
            int j = s[pos + 1] - '0';
            pos += 2;
            return {i, j};
        }
        fail("expected an index pair ij or (i,j)");
    }

    // term: [sign] [coeff SEP] pair, SEP one of '*', '.', or U+00B7
    // Returns (coefficient, i, j).
    std::tuple<Rat, int, int> read_term(bool first) {
        skip_ws();
        int sign = 1;
        if (eat('+')) {
            sign = 1;
        } else if (eat('-')) {
            sign = -1;
        } else if (!first) {
            fail("expected '+' or '-' between terms");
        }
        skip_ws();
        Rat coeff(1);
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            // lookahead: a bare two-digit pair has no separator after it
            std::size_t mark = pos;
            Int first_int = read_integer();
            skip_ws();
            bool is_coeff = false;
            if (pos < s.size()) {
                if (s[pos] == '*' || s[pos] == '.') {
                    ++pos;
                    is_coeff = true;
                } else if (pos + 1 < s.size() && static_cast<unsigned char>(s[pos]) == 0xC2 &&
                           static_cast<unsigned char>(s[pos + 1]) == 0xB7) {  // UTF-8 middle dot
                    pos += 2;
                    is_coeff = true;
                } else if (s[pos] == '/') {
                    ++pos;
                    Int den = read_integer();
                    if (den == 0) fail("zero denominator in coefficient");
                    Rat q(first_int, den);
                    q.canonicalize();
                    coeff = q;
                    skip_ws();
                    if (eat('*') || eat('.')) {
                        // fine, explicit separator
                    } else if (pos + 1 < s.size() && static_cast<unsigned char>(s[pos]) == 0xC2 &&
                               static_cast<unsigned char>(s[pos + 1]) == 0xB7) {
                        pos += 2;
                    } else {
                        fail("expected '*' after rational coefficient");
                    }
                    auto [i, j] = read_pair();
                    return {coeff * sign, i, j};
                }
            }
            if (is_coeff) {
                coeff = Rat(first_int);
                auto [i, j] = read_pair();
                return {coeff * sign, i, j};
            }
            // not a coefficient: rewind and read as a pair
            pos = mark;
            auto [i, j] = read_pair();
            return {coeff * sign, i, j};
        }
        auto [i, j] = read_pair();
        return {coeff * sign, i, j};
    }

    // entry: "0" or a signed sum of terms; ends at ',' or ')'
    std::vector<std::tuple<Rat, int, int>> read_entry() {
        skip_ws();
        if (peek() == '0') {
            std::size_t mark = pos;
            ++pos;
            skip_ws();
            if (peek() == ',' || peek() == ')') return {};
            pos = mark;  // "0..." begins a malformed term; let read_term report it
        }
        std::vector<std::tuple<Rat, int, int>> terms;
        bool first = true;
        while (true) {
            terms.push_back(read_term(first));
            first = false;
            char c = peek();
            if (c == ',' || c == ')' || c == '\0') break;
        }
        return terms;
    }
};

}  // namespace

LieAlgebra LieAlgebra::parse(std::string_view tuple_text, std::string name) {
    TupleScanner sc{tuple_text};
    if (!sc.eat('(')) sc.fail("expected '(' starting the tuple");
    std::vector<std::vector<std::tuple<Rat, int, int>>> entries;
    if (sc.peek() == ')') {
        sc.eat(')');
    } else {
        while (true) {
            entries.push_back(sc.read_entry());
            if (sc.eat(')')) break;
            if (!sc.eat(',')) sc.fail("expected ',' or ')' in tuple");
        }
    }
    sc.skip_ws();
    if (sc.pos != tuple_text.size()) sc.fail("trailing characters after tuple");

    const int n = static_cast<int>(entries.size());
    std::vector<Form> dgen;
    for (int k = 1; k <= n; ++k) {
        Form d(n, 2);
        std::map<std::pair<int, int>, bool> seen;
        for (const auto& [c, i, j] : entries[static_cast<std::size_t>(k - 1)]) {
            if (i < 1 || j < 1 || i > n || j > n)
                throw CatalogError("index out of range in slot " + std::to_string(k), 0, 1);
            if (i >= j)
                throw CatalogError("index pair must satisfy i < j in slot " + std::to_string(k), 0, 1);
            if (seen.count({i, j}))
                throw CatalogError("repeated index pair " + std::to_string(i) + "," +
                                       std::to_string(j) + " in slot " + std::to_string(k),
                                   0, 1);
            seen[{i, j}] = true;
            d.add_term(IndexSet({i, j}), c);
        }
        dgen.push_back(std::move(d));
    }
    return from_differentials(std::move(dgen), std::move(name));
}

std::string LieAlgebra::to_tuple_string() const {
    std::string s = "(";
    for (int k = 1; k <= n_; ++k) {
        if (k > 1) s += ",";
        const Form& d = dgen_[static_cast<std::size_t>(k - 1)];
        if (d.is_zero()) {
            s += "0";
            continue;
        }
        bool first = true;
        for (const auto& [lab, c] : d.terms()) {
            int i = lab.indices()[0], j = lab.indices()[1];
            Rat a = c;
            if (a < 0) {
                s += "-";
                a = -a;
            } else if (!first) {
                s += "+";
            }
            if (a != 1) s += liecoh::to_string(a) + "*";
            if (n_ <= 9)
                s += std::to_string(i) + std::to_string(j);
            else
                s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            first = false;
        }
    }
    s += ")";
    return s;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    const int n = a.dim() + b.dim();
    std::vector<Form> dgen;
    auto reindex = [&](const Form& f, int shift) {
        Form out(n, 2);
        for (const auto& [lab, c] : f.terms()) {
            std::vector<int> idx = lab.indices();
            for (int& x : idx) x += shift;
            out.add_term(IndexSet(idx), c);
        }
        return out;
    };
    for (int k = 1; k <= a.dim(); ++k) dgen.push_back(reindex(a.generator_differential(k), 0));
    for (int k = 1; k <= b.dim(); ++k) dgen.push_back(reindex(b.generator_differential(k), a.dim()));
    std::string nm = a.name().empty() && b.name().empty() ? std::string()
                                                          : a.name() + "+" + b.name();
    return LieAlgebra::from_differentials(std::move(dgen), std::move(nm));
}

}  // namespace liecoh
