#pragma once

#include <map>
#include <string>

#include "liecoh/index_set.hpp"
#include "liecoh/rational.hpp"

namespace liecoh {

/// A degree-homogeneous element of Lambda^k of an n-dimensional dual space,
/// stored as a canonical sparse map basis-label -> coefficient. No key ever
/// maps to zero, so two forms are equal iff their term maps are equal.
class Form {
public:
    Form() = default;
    Form(int ambient_dim, int degree);

    static Form monomial(int ambient_dim, const IndexSet& label, Rat coeff);
    static Form generator(int ambient_dim, int i);  // e^i
    static Form scalar_one(int ambient_dim);        // degree-0 unit

    int ambient_dim() const { return n_; }
    int degree() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<IndexSet, Rat>& terms() const { return terms_; }

    Rat coefficient(const IndexSet& label) const;

    /// Adds c on the given label, erasing the entry if it cancels.
    /// Throws on degree / dimension mismatch.
    Form& add_term(const IndexSet& label, const Rat& c);

    Form operator+(const Form& other) const;
    Form operator-(const Form& other) const;
    Form operator-() const;
    Form scaled(const Rat& c) const;

    bool operator==(const Form& other) const;
    bool operator!=(const Form& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    int n_ = 0;
    int k_ = 0;
    std::map<IndexSet, Rat> terms_;
};

/// Bilinear extension of e^I ^ e^J = sign(I,J) e^{I u J}, zero on overlap.
/// Graded commutativity a^b = (-1)^{|a||b|} b^a holds by construction.
/// Throws std::invalid_argument on mismatched ambient dimension.
Form wedge(const Form& a, const Form& b);

/// m-fold wedge of a with itself; power(a, 0) is the scalar unit.
Form power(const Form& a, int m);

}  // namespace liecoh
