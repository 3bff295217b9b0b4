#include "eislat/form.hpp"

namespace eislat {

RMat Form::gram() const {
    RMat g(dim, dim);
    std::size_t n = definite_dim();
    for (std::size_t i = 0; i < n; ++i) g(i, i) = Erat(Rat(-1, den), Rat(0));
    if (hyperbolic) {
        g(n, n + 1) = to_rat(Eint::theta().conj());
        g(n + 1, n) = to_rat(Eint::theta());
    }
    return g;
}

RMat Form::gram_of(const std::vector<EVec>& rows) const {
    RMat out(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) out(i, j) = ip(rows[i], rows[j]);
    return out;
}

bool Form::preserved_by(const RMat& m) const {
    if (m.rows != dim || m.cols != dim) return false;
    RMat g = gram();
    return m.adjoint() * g * m == g;
}

bool Form::preserved_by(const EMat& m) const { return preserved_by(to_rat(m)); }

Form form_3e8h() { return Form{14, 1, true}; }
Form form_lh() { return Form{14, 3, true}; }
Form form_leech() { return Form{12, 3, false}; }
Form form_e8() { return Form{4, 1, false}; }
Form form_h() { return Form{2, 1, true}; }

}  // namespace eislat
