#pragma once

#include <string>

#include "rq/poly.hpp"
#include "rq/scalar.hpp"

namespace rq {

// Grammar: sums, products and quotients of integer literals (read mod 2),
// t, the field generator g, the variables x, y, z, powers with nonnegative
// integer exponents, and parentheses. Division is only by nonzero scalars.
ScalarK parse_element(const std::string& text, Field f);
TriForm parse_form(const std::string& text, Field f);
FormFq parse_form_fq(const std::string& text, Field f);

// Terms in the polynomial's own order, variable i printed as names[i].
template <class R, int N>
std::string poly_to_string(const Poly<R, N>& f, const char* names) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto& [e, c] : f.terms()) {
        std::string mono;
        for (int i = 0; i < N; ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string cs = c.to_string();
        bool compound = cs.find_first_of("+*/ ") != std::string::npos;
        std::string term;
        if (mono.empty())
            term = compound ? "(" + cs + ")" : cs;
        else if (c.is_one())
            term = mono;
        else
            term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

// Canonical text: terms in grevlex order joined by " + ".
std::string form_to_string(const TriForm& f);
std::string form_to_string(const FormFq& f);

}  // namespace rq
