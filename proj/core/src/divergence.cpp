#include "loopalg/divergence.hpp"

namespace loopalg {

TripOmega& TripOmega::operator+=(const TripOmega& o) {
    a_omega.insert(a_omega.end(), o.a_omega.begin(), o.a_omega.end());
    omega_a.insert(omega_a.end(), o.omega_a.begin(), o.omega_a.end());
    return *this;
}

TripOmega& TripOmega::operator-=(const TripOmega& o) {
    for (const auto& [x, w] : o.a_omega)
        a_omega.emplace_back(-x, w);
    for (const auto& [w, y] : o.omega_a)
        omega_a.emplace_back(-w, y);
    return *this;
}

TripOmegaFlat flatten(const TripOmega& t) {
    TripOmegaFlat r;
    for (const auto& [x, form] : t.a_omega)
        for (const auto& [wx, qx] : x.terms())
            for (const auto& [c, coeff] : form.coeffs)
                for (const auto& [uw, q] : coeff.terms())
                    r.add({0, wx, c, uw.first, uw.second}, qx * q);
    for (const auto& [form, y] : t.omega_a)
        for (const auto& [wy, qy] : y.terms())
            for (const auto& [c, coeff] : form.coeffs)
                for (const auto& [uw, q] : coeff.terms())
                    r.add({1, wy, c, uw.first, uw.second}, qy * q);
    return r;
}

OneForm lie_der(const Signature& sig, const Derivation& f, const OneForm& omega) {
    OneForm r;
    for (const auto& [c, t] : omega.coeffs) {
        const AlgElem fc = f.gen_values.count(c) ? f.gen_values.at(c) : AlgElem{};
        for (const auto& [uw, q] : t.terms()) {
            const Word &u = uw.first, &w = uw.second;
            const Word v = d_cofactor(sig, c, w);
            // f(u) (dc) v
            const AlgElem fu = f.eval(u);
            for (const auto& [x, qx] : fu.terms())
                r.add(c, x, w, q * qx);
            // u d(f(c)) v
            if (!fc.is_zero()) {
                OneForm mid = differential(sig, fc);
                mid = form_act_left(u, mid);
                mid = form_act_right(mid, v);
                mid *= q;
                r += mid;
            }
            // u (dc) f(v)
            const AlgElem fv = stored_right(sig, c, f.eval(v));
            for (const auto& [x, qx] : fv.terms())
                r.add(c, u, x, q * qx);
        }
    }
    return r;
}

TripOmega lie_double(const Signature& sig, const DoubleDerivation& theta, const OneForm& omega) {
    TripOmega r;
    for (const auto& [c, t] : omega.coeffs) {
        const Tensor2 theta_c =
            theta.gen_values.count(c) ? theta.gen_values.at(c) : Tensor2{};
        for (const auto& [uw, q] : t.terms()) {
            const Word &u = uw.first, &w = uw.second;
            const Word v = d_cofactor(sig, c, w);
            // Theta'(u) (x) Theta''(u) . B_c . w
            const Tensor2 theta_u = theta.eval(u);
            for (const auto& [pq, qq] : theta_u.terms()) {
                OneForm form;
                form.add(c, pq.second, w, q * qq);
                r.a_omega.emplace_back(alg_word(pq.first), std::move(form));
            }
            // u d(Theta'(c)) (x) Theta''(c) v   and   u Theta'(c) (x) d(Theta''(c)) v
            for (const auto& [pq, qq] : theta_c.terms()) {
                OneForm dleft = differential(sig, pq.first);
                if (!dleft.is_zero()) {
                    dleft = form_act_left(u, dleft);
                    dleft *= q * qq;
                    if (auto qv = compose(pq.second, v))
                        r.omega_a.emplace_back(std::move(dleft), alg_word(*qv));
                }
                OneForm dright = differential(sig, pq.second);
                if (!dright.is_zero()) {
                    dright = form_act_right(dright, v);
                    dright *= q * qq;
                    if (auto up = compose(u, pq.first))
                        r.a_omega.emplace_back(alg_word(*up), std::move(dright));
                }
            }
            // u (dc) Theta'(v) (x) Theta''(v)
            const Tensor2 theta_v = theta.eval(v);
            for (const auto& [pq, qq] : theta_v.terms()) {
                OneForm form;
                form.add(c, u, stored_right(sig, c, pq.first), q * qq);
                r.omega_a.emplace_back(std::move(form), alg_word(pq.second));
            }
        }
    }
    return r;
}

TripOmega contract_nabla(const Signature&, const DoubleDerivation& theta,
                         const Connection& conn, const OneForm& omega) {
    require_basis_flat(conn);
    TripOmega r;
    for (const auto& [c, t] : omega.coeffs) {
        for (const auto& [uw, q] : t.terms()) {
            const Word &u = uw.first, &w = uw.second;
            const Tensor2 theta_u = theta.eval(u);
            for (const auto& [pq, qq] : theta_u.terms()) {
                OneForm form;
                form.add(c, pq.second, w, q * qq);
                r.a_omega.emplace_back(alg_word(pq.first), std::move(form));
            }
            const Tensor2 theta_w = theta.eval(w);
            for (const auto& [pq, qq] : theta_w.terms()) {
                OneForm form;
                form.add(c, u, pq.first, q * qq);
                r.omega_a.emplace_back(std::move(form), alg_word(pq.second));
            }
        }
    }
    return r;
}

namespace {

// Diagonal trace extraction at generator c, mapping x (x) (u.B_c.w) to
// ux (x) |w| and (u.B_c.w) (x) y to |u| (x) yw.
void accumulate_trace(const TripOmega& x, int c, TripleTrace& out) {
    for (const auto& [a, form] : x.a_omega) {
        auto it = form.coeffs.find(c);
        if (it == form.coeffs.end())
            continue;
        for (const auto& [uw, q] : it->second.terms()) {
            if (!uw.second.is_loop())
                continue;
            CyclicWord cls = CyclicWord::of_loop(uw.second);
            for (const auto& [wx, qx] : a.terms())
                if (auto ux = compose(uw.first, wx))
                    out.right.add({*ux, cls}, q * qx);
        }
    }
    for (const auto& [form, y] : x.omega_a) {
        auto it = form.coeffs.find(c);
        if (it == form.coeffs.end())
            continue;
        for (const auto& [uw, q] : it->second.terms()) {
            if (!uw.first.is_loop())
                continue;
            CyclicWord cls = CyclicWord::of_loop(uw.first);
            for (const auto& [wy, qy] : y.terms())
                if (auto yw = compose(wy, uw.second))
                    out.left.add({cls, *yw}, q * qy);
        }
    }
}

} // namespace

TripleTrace tdiv(const Signature& sig, const DoubleDerivation& theta, const Connection& conn) {
    require_basis_flat(conn);
    TripleTrace out;
    for (int c = 0; c < sig.num_generators(); ++c) {
        OneForm e_c = basis_form(sig, c);
        TripOmega x = contract_nabla(sig, theta, conn, e_c);
        x -= lie_double(sig, theta, e_c);
        accumulate_trace(x, c, out);
    }
    return out;
}

TraceTensor2 div_map(const Signature& sig, const Derivation& f, const Connection& conn) {
    require_basis_flat(conn);
    TraceTensor2 out;
    for (int c = 0; c < sig.num_generators(); ++c) {
        // nabla kills B_c, so the contraction term vanishes on the basis and
        // the diagonal coefficient comes from -L_f alone.
        OneForm y = lie_der(sig, f, basis_form(sig, c));
        auto it = y.coeffs.find(c);
        if (it == y.coeffs.end())
            continue;
        for (const auto& [uw, q] : it->second.terms()) {
            if (!uw.first.is_loop() || !uw.second.is_loop())
                continue;
            out.add({CyclicWord::of_loop(uw.first), CyclicWord::of_loop(uw.second)}, -q);
        }
    }
    return out;
}

TripleTrace phi_map(const Signature& sig, const DoubleBracket& pi, const Connection& conn,
                    const AlgElem& a) {
    return tdiv(sig, as_double_derivation(sig, pi, a), conn);
}

TripleTrace phi_map(const Signature& sig, const DoubleBracket& pi, const Connection& conn,
                    const Word& a) {
    return phi_map(sig, pi, conn, alg_word(a));
}

TraceTensor2 delta_map(const Signature& sig, const DoubleBracket& pi, const Connection& conn,
                       const TraceElem& t) {
    TraceTensor2 out;
    for (const auto& [cls, q] : t.terms()) {
        TripleTrace p = phi_map(sig, pi, conn, trace_representative(cls));
        p *= q;
        out += mult_trace(p);
    }
    return out;
}

TripleTrace modular(const Signature& sig, const DoubleBracket& pi, const Connection& conn,
                    const DoubleDerivation& theta, const AlgElem& a) {
    TripleTrace out = fold(phi_map(sig, pi, conn, a));
    const Tensor2 theta_a = theta.eval(a);
    for (const auto& [pq, q] : theta_a.terms())
        if (pq.second.is_loop())
            out.right.add({pq.first, CyclicWord::of_loop(pq.second)}, q);
    return out;
}

} // namespace loopalg
