#include "liecoh/form.hpp"

#include <stdexcept>

namespace liecoh {

Form::Form(int ambient_dim, int degree) : n_(ambient_dim), k_(degree) {
    if (ambient_dim < 0) throw std::invalid_argument("Form: negative ambient dimension");
    if (degree < 0) throw std::invalid_argument("Form: negative degree");
}

Form Form::monomial(int ambient_dim, const IndexSet& label, Rat coeff) {
    Form f(ambient_dim, label.degree());
    f.add_term(label, coeff);
    return f;
}

Form Form::generator(int ambient_dim, int i) {
    return monomial(ambient_dim, IndexSet({i}), Rat(1));
}

Form Form::scalar_one(int ambient_dim) { return monomial(ambient_dim, IndexSet(), Rat(1)); }

Rat Form::coefficient(const IndexSet& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? Rat(0) : it->second;
}

Form& Form::add_term(const IndexSet& label, const Rat& c) {
    if (label.degree() != k_)
        throw std::invalid_argument("Form::add_term: degree mismatch");
    if (label.max_index() > n_)
        throw std::invalid_argument("Form::add_term: index exceeds ambient dimension");
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(label, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

Form Form::operator+(const Form& other) const {
    if (n_ != other.n_ || k_ != other.k_)
        throw std::invalid_argument("Form::operator+: shape mismatch");
    Form out = *this;
    for (const auto& [label, c] : other.terms_) out.add_term(label, c);
    return out;
}

Form Form::operator-(const Form& other) const { return *this + (-other); }

Form Form::operator-() const {
    Form out(n_, k_);
    for (const auto& [label, c] : terms_) out.terms_.emplace(label, -c);
    return out;
}

Form Form::scaled(const Rat& c) const {
    Form out(n_, k_);
    if (c == 0) return out;
    for (const auto& [label, v] : terms_) out.terms_.emplace(label, v * c);
    return out;
}

bool Form::operator==(const Form& other) const {
    return n_ == other.n_ && k_ == other.k_ && terms_ == other.terms_;
}

std::string Form::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [label, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (a != 1 || label.degree() == 0)
            s += liecoh::to_string(a) + (label.degree() > 0 ? "*" : "");
        if (label.degree() > 0) s += label.to_string();
        first = false;
    }
    return s;
}

Form wedge(const Form& a, const Form& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("wedge: ambient dimension mismatch");
    Form out(a.ambient_dim(), a.degree() + b.degree());
    for (const auto& [labelA, ca] : a.terms()) {
        for (const auto& [labelB, cb] : b.terms()) {
            auto merged = merge_with_sign(labelA, labelB);
            if (!merged) continue;
            out.add_term(merged->first, ca * cb * merged->second);
        }
    }
    return out;
}

Form power(const Form& a, int m) {
    if (m < 0) throw std::invalid_argument("power: negative exponent");
    Form acc = Form::scalar_one(a.ambient_dim());
    for (int i = 0; i < m; ++i) {
        acc = wedge(acc, a);
        if (acc.is_zero()) return Form(a.ambient_dim(), a.degree() * m);
    }
    return acc;
}

}  // namespace liecoh
