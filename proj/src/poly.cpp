#include "rq/poly.hpp"

namespace rq {

TriForm partial_derivative(const TriForm& f, Var v) { return f.derivative(v); }

std::optional<TriForm> form_square_root(const TriForm& f) { return f.sqrt(); }

std::optional<TriForm> divide_form(const TriForm& f, const TriForm& d) { return f.divide(d); }

ScalarK eval_scalar(const TriForm& f, const std::array<ScalarK, 3>& p) { return f.eval(p); }

uint64_t eval_form(const FormFq& f, const std::array<uint64_t, 3>& p) {
    Field F = f.field();
    uint64_t acc = 0;
    for (auto& [e, c] : f.terms()) {
        uint64_t t = c.v;
        for (int i = 0; i < 3 && t; ++i)
            if (e[i]) t = F->mul(t, F->pow(p[i], e[i]));
        acc ^= t;
    }
    return acc;
}

std::optional<FormFq> to_fq(const TriForm& f) {
    FormFq r(f.field());
    for (auto& [e, c] : f.terms()) {
        if (!c.is_constant()) return std::nullopt;
        r.add_term(e, Fq(f.field(), c.constant_value()));
    }
    return r;
}

TriForm from_fq(const FormFq& f) {
    return f.map_coeffs(f.field(), [&](const Fq& c) { return ScalarK(f.field(), c.v); });
}

FormFq embed_form(const FormFq& f, const Embedding& e) {
    return f.map_coeffs(e.to(), [&](const Fq& c) { return Fq(e.to(), e(c.v)); });
}

}  // namespace rq
