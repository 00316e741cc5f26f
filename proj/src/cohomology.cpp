#include "liecoh/cohomology.hpp"

#include <map>
#include <stdexcept>

namespace liecoh {

namespace {

std::vector<Rat> form_coordinates(const Form& f, const std::vector<IndexSet>& basis) {
    std::vector<Rat> v(basis.size(), Rat(0));
    std::map<IndexSet, std::size_t> pos;
    for (std::size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], i);
    for (const auto& [lab, c] : f.terms()) v[pos.at(lab)] = c;
    return v;
}

Form coordinates_to_form(const std::vector<Rat>& v, const std::vector<IndexSet>& basis, int n,
                         int k) {
    Form f(n, k);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) f.add_term(basis[i], v[i]);
    return f;
}

}  // namespace

RatMatrix differential_matrix(const LieAlgebra& L, int k) {
    const int n = L.dim();
    auto cols = exterior_basis(n, k);
    auto rows = exterior_basis(n, k + 1);
    std::map<IndexSet, int> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], static_cast<int>(i));

    RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t b = 0; b < cols.size(); ++b) {
        Form d = L.ce_differential(Form::monomial(n, cols[b], Rat(1)));
        for (const auto& [lab, c] : d.terms()) m.at(row_index.at(lab), static_cast<int>(b)) = c;
    }
    return m;
}

std::vector<long> betti(const LieAlgebra& L) {
    L.require_jacobi();
    const int n = L.dim();
    std::vector<int> ranks(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k <= n; ++k) ranks[static_cast<std::size_t>(k)] = rank(differential_matrix(L, k));
    std::vector<long> b(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k <= n; ++k) {
        long ker = binomial(n, k) - ranks[static_cast<std::size_t>(k)];
        long img = k > 0 ? ranks[static_cast<std::size_t>(k - 1)] : 0;
        b[static_cast<std::size_t>(k)] = ker - img;
    }
    return b;
}

bool CohomologyClass::is_zero() const {
    for (const auto& c : coordinates)
        if (c != 0) return false;
    return true;
}

CohomologyRing::CohomologyRing(const LieAlgebra& L) : L_(L) {
    L_.require_jacobi();
    const int n = L_.dim();
    betti_.resize(static_cast<std::size_t>(n) + 1);
    reps_.resize(static_cast<std::size_t>(n) + 1);
    image_rref_.resize(static_cast<std::size_t>(n) + 1);
    image_pivots_.resize(static_cast<std::size_t>(n) + 1);
    solve_matrix_.resize(static_cast<std::size_t>(n) + 1);

    RatMatrix d_prev;  // d_{k-1}
    for (int k = 0; k <= n; ++k) {
        RatMatrix d_k = differential_matrix(L_, k);
        const int dim_k = d_k.cols();
        auto labels = exterior_basis(n, k);

        // image of d_{k-1} as canonical RREF rows
        std::vector<std::vector<Rat>> img_rows;
        if (k > 0)
            for (int c = 0; c < d_prev.cols(); ++c) {
                auto v = d_prev.col(c);
                bool nonzero = false;
                for (const auto& x : v)
                    if (x != 0) {
                        nonzero = true;
                        break;
                    }
                if (nonzero) img_rows.push_back(std::move(v));
            }
        std::vector<int> img_piv;
        RatMatrix img =
            img_rows.empty() ? RatMatrix(0, dim_k) : rref(RatMatrix::from_rows(img_rows), &img_piv);

        // kernel of d_k as canonical RREF rows; representatives are the rows
        // whose pivot is not an image pivot (an RREF completion of the image
        // basis inside the kernel)
        std::vector<int> ker_piv;
        auto ker = kernel_basis(d_k);
        RatMatrix kerm = ker.empty() ? RatMatrix(0, dim_k) : rref(RatMatrix::from_rows(ker), &ker_piv);

        std::vector<bool> is_img_piv(static_cast<std::size_t>(dim_k), false);
        for (int p : img_piv) is_img_piv[static_cast<std::size_t>(p)] = true;

        std::vector<Form> reps;
        std::vector<std::vector<Rat>> rep_vecs;
        for (int i = 0; i < kerm.rows(); ++i) {
            if (is_img_piv[static_cast<std::size_t>(ker_piv[static_cast<std::size_t>(i)])]) continue;
            auto v = kerm.row(i);
            reps.push_back(coordinates_to_form(v, labels, n, k));
            rep_vecs.push_back(std::move(v));
        }

        betti_[static_cast<std::size_t>(k)] =
            static_cast<long>(kerm.rows()) - static_cast<long>(img.rows());
        if (betti_[static_cast<std::size_t>(k)] != static_cast<long>(reps.size()))
            throw std::logic_error("CohomologyRing: representative count disagrees with Betti number");

        // solve matrix: columns are image basis then representatives
        RatMatrix A(dim_k, img.rows() + static_cast<int>(rep_vecs.size()));
        for (int c = 0; c < img.rows(); ++c)
            for (int r = 0; r < dim_k; ++r) A.at(r, c) = img.at(c, r);
        for (std::size_t c = 0; c < rep_vecs.size(); ++c)
            for (int r = 0; r < dim_k; ++r)
                A.at(r, img.rows() + static_cast<int>(c)) = rep_vecs[c][static_cast<std::size_t>(r)];

        reps_[static_cast<std::size_t>(k)] = std::move(reps);
        image_rref_[static_cast<std::size_t>(k)] = std::move(img);
        image_pivots_[static_cast<std::size_t>(k)] = std::move(img_piv);
        solve_matrix_[static_cast<std::size_t>(k)] = std::move(A);
        d_prev = std::move(d_k);
    }
}

ClassResult CohomologyRing::class_of(const Form& a) const {
    const int n = L_.dim();
    if (a.ambient_dim() != n) throw std::invalid_argument("class_of: ambient dimension mismatch");
    const int k = a.degree();
    if (k > n) {
        // everything above the top degree is zero
        CohomologyClass z;
        z.degree = k;
        z.representative = Form(n, k);
        return {ClassResult::Kind::Class, std::move(z)};
    }
    if (!L_.ce_differential(a).is_zero()) return {ClassResult::Kind::NotClosed, std::nullopt};

    auto labels = exterior_basis(n, k);
    auto vec = form_coordinates(a, labels);
    auto x = solve_unique(solve_matrix_[static_cast<std::size_t>(k)], vec);
    if (!x) throw std::logic_error("class_of: cocycle outside kernel span");

    const long b = betti_[static_cast<std::size_t>(k)];
    const std::size_t img_rank = x->size() - static_cast<std::size_t>(b);
    CohomologyClass cls;
    cls.degree = k;
    cls.representative = a;
    cls.coordinates.assign(x->begin() + static_cast<long>(img_rank), x->end());

    if (!a.is_zero() && cls.is_zero()) return {ClassResult::Kind::IsExact, std::nullopt};
    return {ClassResult::Kind::Class, std::move(cls)};
}

CohomologyClass CohomologyRing::basis_class(int k, int i) const {
    CohomologyClass c;
    c.degree = k;
    c.representative = reps_.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(i));
    c.coordinates.assign(static_cast<std::size_t>(betti_[static_cast<std::size_t>(k)]), Rat(0));
    c.coordinates[static_cast<std::size_t>(i)] = 1;
    return c;
}

CohomologyClass CohomologyRing::cup(const CohomologyClass& x, const CohomologyClass& y) const {
    Form w = wedge(x.representative, y.representative);
    const int k = x.degree + y.degree;
    if (k > L_.dim()) {
        CohomologyClass z;
        z.degree = k;
        z.representative = Form(L_.dim(), k);
        return z;
    }
    ClassResult r = class_of(w);
    if (r.kind == ClassResult::Kind::NotClosed)
        throw std::logic_error("cup: product of cocycles is not closed");
    if (r.kind == ClassResult::Kind::IsExact) {
        CohomologyClass z;
        z.degree = k;
        z.representative = w;
        z.coordinates.assign(static_cast<std::size_t>(betti_[static_cast<std::size_t>(k)]), Rat(0));
        return z;
    }
    return *r.cls;
}

std::vector<std::vector<std::vector<Rat>>> CohomologyRing::cup_table(int p, int q) const {
    const auto& bp = reps_.at(static_cast<std::size_t>(p));
    const auto& bq = reps_.at(static_cast<std::size_t>(q));
    std::vector<std::vector<std::vector<Rat>>> table(bp.size());
    for (std::size_t i = 0; i < bp.size(); ++i) {
        table[i].resize(bq.size());
        for (std::size_t j = 0; j < bq.size(); ++j)
            table[i][j] = cup(basis_class(p, static_cast<int>(i)), basis_class(q, static_cast<int>(j)))
                              .coordinates;
    }
    return table;
}

bool CohomologyRing::is_exact(const Form& a) const {
    const int k = a.degree();
    if (a.is_zero()) return true;
    if (k > L_.dim()) return true;
    auto labels = exterior_basis(L_.dim(), k);
    auto res = reduce_against_rref(image_rref_[static_cast<std::size_t>(k)],
                                   image_pivots_[static_cast<std::size_t>(k)],
                                   form_coordinates(a, labels));
    for (const auto& c : res)
        if (c != 0) return false;
    return true;
}

PoincareResult poincare_check(const LieAlgebra& L) {
    StructureReport rep = L.structure_report();
    if (!rep.unimodular) return PoincareResult::NotApplicable;
    const int n = L.dim();
    CohomologyRing ring(L);
    const auto& b = ring.betti();
    for (int k = 0; k <= n; ++k)
        if (b[static_cast<std::size_t>(k)] != b[static_cast<std::size_t>(n - k)])
            return PoincareResult::False;
    if (b[static_cast<std::size_t>(n)] != 1)
        throw std::logic_error("poincare_check: unimodular algebra with top Betti != 1");

    // Top-degree forms are never exact here, so the pairing is read off the
    // coefficient of e^{1..n} in products of representatives.
    IndexSet top(([n] {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
        return v;
    })());
    for (int k = 0; k <= n; ++k) {
        const auto& bk = ring.bases()[static_cast<std::size_t>(k)];
        const auto& bnk = ring.bases()[static_cast<std::size_t>(n - k)];
        RatMatrix pairing(static_cast<int>(bk.size()), static_cast<int>(bnk.size()));
        for (std::size_t i = 0; i < bk.size(); ++i)
            for (std::size_t j = 0; j < bnk.size(); ++j)
                pairing.at(static_cast<int>(i), static_cast<int>(j)) =
                    wedge(bk[i], bnk[j]).coefficient(top);
        if (rank(pairing) != static_cast<int>(bk.size())) return PoincareResult::False;
    }
    return PoincareResult::True;
}

ClassResult class_of(const LieAlgebra& L, const Form& a) { return CohomologyRing(L).class_of(a); }

CohomologyClass cup(const LieAlgebra& L, const CohomologyClass& x, const CohomologyClass& y) {
    return CohomologyRing(L).cup(x, y);
}

}  // namespace liecoh
