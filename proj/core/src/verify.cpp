#include "loopalg/verify.hpp"

#include "loopalg/textio.hpp"

#include <stdexcept>

namespace loopalg {

int SuiteReport::failures() const {
    int n = 0;
    for (const CaseResult& c : cases)
        if (!c.pass)
            ++n;
    return n;
}

namespace {

void push_case(SuiteReport& rep, const std::string& inputs, const std::string& residual,
               bool pass) {
    CaseResult c;
    c.id = int(rep.cases.size());
    c.inputs = inputs;
    c.residual = pass ? "0" : residual;
    c.pass = pass;
    rep.cases.push_back(std::move(c));
}

template <class T>
void check_zero(SuiteReport& rep, const Signature& sig, const std::string& inputs, const T& residual) {
    push_case(rep, inputs, show(sig, residual), residual.is_zero());
}

std::string surface_tag(int g, int n) {
    return "S(g=" + std::to_string(g) + ",n=" + std::to_string(n) + ")";
}

} // namespace

Tensor2 kappa_expected(const Signature& sig, int c1, int c2) {
    const Generator &g1 = sig.gen(c1), &g2 = sig.gen(c2);
    const int i = g1.index, j = g2.index;
    const Word one0 = Word::identity(0);
    auto w = [&](int id) { return sig.gen_word(id); };
    auto ww = [&](int a, int b) { return *compose(sig.gen_word(a), sig.gen_word(b)); };
    auto K = [&](GenKind k1, GenKind k2) {
        return g1.kind == k1 && g2.kind == k2;
    };
    Tensor2 t;

    if (K(GenKind::alpha, GenKind::alpha)) {
        if (i == j) {
            t.add({w(c1), w(c1)}, 1);
            t.add({one0, ww(c1, c1)}, -1);
        } else if (i > j) {
            t.add({w(c1), w(c2)}, 1);
            t.add({w(c2), w(c1)}, 1);
            t.add({ww(c2, c1), one0}, -1);
            t.add({one0, ww(c1, c2)}, -1);
        }
    } else if (K(GenKind::alpha, GenKind::beta)) {
        if (i == j) {
            t.add({w(c2), w(c1)}, 1);
        } else if (i > j) {
            t.add({w(c1), w(c2)}, 1);
            t.add({w(c2), w(c1)}, 1);
            t.add({ww(c2, c1), one0}, -1);
            t.add({one0, ww(c1, c2)}, -1);
        }
    } else if (K(GenKind::alpha, GenKind::gamma) || K(GenKind::alpha, GenKind::delta) ||
               K(GenKind::beta, GenKind::gamma) || K(GenKind::beta, GenKind::delta)) {
        // zero
    } else if (K(GenKind::beta, GenKind::alpha)) {
        if (i == j) {
            t.add({w(c1), w(c2)}, 1);
            t.add({ww(c2, c1), one0}, -1);
            t.add({one0, ww(c1, c2)}, -1);
        } else if (i > j) {
            t.add({w(c1), w(c2)}, 1);
            t.add({w(c2), w(c1)}, 1);
            t.add({ww(c2, c1), one0}, -1);
            t.add({one0, ww(c1, c2)}, -1);
        }
    } else if (K(GenKind::beta, GenKind::beta)) {
        if (i == j) {
            t.add({w(c1), w(c1)}, 1);
            t.add({ww(c1, c1), one0}, -1);
        } else if (i > j) {
            t.add({w(c1), w(c2)}, 1);
            t.add({w(c2), w(c1)}, 1);
            t.add({ww(c2, c1), one0}, -1);
            t.add({one0, ww(c1, c2)}, -1);
        }
    } else if (K(GenKind::gamma, GenKind::alpha) || K(GenKind::gamma, GenKind::beta)) {
        t.add({w(c1), w(c2)}, 1);
        t.add({w(c2), w(c1)}, 1);
        t.add({ww(c2, c1), one0}, -1);
        t.add({one0, ww(c1, c2)}, -1);
    } else if (K(GenKind::gamma, GenKind::gamma)) {
        if (i == j) {
            t.add({w(c1), w(c1)}, 1);
            t.add({one0, ww(c1, c1)}, -1);
        } else if (i > j) {
            t.add({w(c1), w(c2)}, 1);
            t.add({w(c2), w(c1)}, 1);
            t.add({ww(c2, c1), one0}, -1);
            t.add({one0, ww(c1, c2)}, -1);
        }
    } else if (K(GenKind::gamma, GenKind::delta)) {
        if (i == j) {
            t.add({w(c2), w(c1)}, 1);
        } else if (i > j) {
            t.add({ww(c2, c1), one0}, -1);
            t.add({w(c2), w(c1)}, 1);
        }
    } else if (K(GenKind::delta, GenKind::alpha) || K(GenKind::delta, GenKind::beta)) {
        t.add({w(c2), w(c1)}, 1);
        t.add({one0, ww(c1, c2)}, -1);
    } else if (K(GenKind::delta, GenKind::gamma)) {
        if (i == j) {
            t.add({one0, ww(c1, c2)}, -1);
        } else if (i > j) {
            t.add({w(c2), w(c1)}, 1);
            t.add({one0, ww(c1, c2)}, -1);
        }
    } else if (K(GenKind::delta, GenKind::delta)) {
        if (i == j) {
            t.add({w(c1), w(c1)}, 1);
        } else if (i > j) {
            t.add({w(c2), w(c1)}, 1);
        }
    }
    return t;
}

SuiteReport suite_kappa_table(const SuiteOptions& opt) {
    SuiteReport rep;
    rep.suite = "kappa-table";
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    for (auto [g, n] : opt.surfaces) {
        Signature sig = make_surface(g, n);
        DoubleBracket kappa = kappa_bracket(sig);
        for (int c1 = 0; c1 < sig.num_generators(); ++c1)
            for (int c2 = 0; c2 < sig.num_generators(); ++c2) {
                Tensor2 got = kappa.eval(sig.gen_word(c1), sig.gen_word(c2));
                Tensor2 want = kappa_expected(sig, c1, c2);
                check_zero(rep, sig,
                           surface_tag(g, n) + " kappa(" + sig.gen_name(c1) + "," +
                               sig.gen_name(c2) + ")",
                           Tensor2(got - want));
            }
    }
    return rep;
}

SuiteReport suite_defect(const SuiteOptions& opt) {
    SuiteReport rep;
    rep.suite = "defect";
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    for (auto [g, n] : opt.surfaces) {
        Signature sig = make_surface(g, n);
        DoubleBracket kappa = kappa_bracket(sig);
        Sampler rnd(sig, opt.seed);
        for (int s = 0; s < opt.samples; ++s) {
            Word a = rnd.word(opt.max_len), b = rnd.word(opt.max_len);
            Tensor2 lhs = kappa.eval(a, b) + flip(kappa.eval(b, a));
            Tensor2 rhs = ad_ad_e(sig, alg_word(a), alg_word(b));
            check_zero(rep, sig,
                       surface_tag(g, n) + " a=" + show(sig, a) + " b=" + show(sig, b),
                       Tensor2(lhs - rhs));
        }
    }
    return rep;
}

SuiteReport suite_main_theorem(const SuiteOptions& opt) {
    SuiteReport rep;
    rep.suite = "main-theorem";
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    for (auto [g, n] : opt.surfaces) {
        Signature sig = make_surface(g, n);
        FramingData framing = FramingData::standard(sig);
        if (opt.delta_rot_override)
            for (int id = 0; id < sig.num_generators(); ++id)
                if (sig.gen(id).kind == GenKind::delta)
                    framing.rot[id] = *opt.delta_rot_override;
        MuOperator mu(sig, framing);
        Sampler rnd(sig, opt.seed);
        std::vector<Word> words;
        for (int c = 0; c < sig.num_generators(); ++c)
            words.push_back(sig.gen_word(c));
        for (int s = 0; s < opt.samples; ++s)
            words.push_back(rnd.word(opt.max_len));
        for (const auto& chk : mu.verify_main_theorem(words))
            push_case(rep, surface_tag(g, n) + " w=" + show(sig, chk.word),
                      show(sig, chk.residual), chk.ok);
    }
    return rep;
}

SuiteReport suite_modular_vanishing(const SuiteOptions& opt) {
    SuiteReport rep;
    rep.suite = "modular";
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    for (auto [g, n] : opt.surfaces) {
        Signature sig = make_surface(g, n);
        DoubleBracket kappa = kappa_bracket(sig);
        Connection conn = nabla_basis(sig);
        DoubleDerivation theta = ad_e(sig);
        Sampler rnd(sig, opt.seed);
        std::vector<Word> words;
        for (int c = 0; c < sig.num_generators(); ++c)
            words.push_back(sig.gen_word(c));
        for (int s = 0; s < opt.samples; ++s)
            words.push_back(rnd.word(opt.max_len));
        for (const Word& w : words) {
            TripleTrace m = modular(sig, kappa, conn, theta, alg_word(w));
            check_zero(rep, sig, surface_tag(g, n) + " w=" + show(sig, w), m);
        }
    }
    return rep;
}

SuiteReport suite_lift(const SuiteOptions& opt) {
    SuiteReport rep;
    rep.suite = "lift";
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    for (auto [g, n] : opt.surfaces) {
        Signature sig = make_surface(g, n);
        Connection conn = nabla_basis(sig);
        Sampler rnd(sig, opt.seed);
        for (int s = 0; s < opt.samples; ++s) {
            DoubleDerivation theta = rnd.dd_table(3);
            TraceTensor2 lhs = mult_trace(tdiv(sig, theta, conn));
            TraceTensor2 rhs = div_map(sig, mult_compose(theta), conn);
            check_zero(rep, sig, surface_tag(g, n) + " case " + std::to_string(s),
                       TraceTensor2(lhs - rhs));
        }
    }
    return rep;
}

SuiteReport suite_tdiv_mult(const SuiteOptions& opt) {
    SuiteReport rep;
    rep.suite = "tdiv-mult";
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    for (auto [g, n] : opt.surfaces) {
        Signature sig = make_surface(g, n);
        Connection conn = nabla_basis(sig);
        Sampler rnd(sig, opt.seed);
        for (int s = 0; s < opt.samples; ++s) {
            DoubleDerivation theta = rnd.dd_table(2);
            Word a = rnd.word(opt.max_len / 2), b = rnd.word(opt.max_len / 2);
            AlgElem ae = alg_word(a), be = alg_word(b);
            TripleTrace lhs = tdiv(sig, dd_inner_act(ae, theta, be), conn);
            TripleTrace rhs = triple_act(ae, tdiv(sig, theta, conn), be);
            const Tensor2 theta_b = theta.eval(b);
            for (const auto& [pq, q] : theta_b.terms()) {
                if (!pq.first.is_loop())
                    continue;
                if (auto aq = compose(a, pq.second))
                    rhs.left.add({CyclicWord::of_loop(pq.first), *aq}, -q);
            }
            const Tensor2 theta_a = theta.eval(a);
            for (const auto& [pq, q] : theta_a.terms()) {
                if (!pq.second.is_loop())
                    continue;
                if (auto pb = compose(pq.first, b))
                    rhs.right.add({*pb, CyclicWord::of_loop(pq.second)}, -q);
            }
            check_zero(rep, sig,
                       surface_tag(g, n) + " a=" + show(sig, a) + " b=" + show(sig, b),
                       TripleTrace(lhs - rhs));
        }
    }
    return rep;
}

SuiteReport suite_product_rules(const SuiteOptions& opt) {
    SuiteReport rep;
    rep.suite = "product-rules";
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    for (auto [g, n] : opt.surfaces) {
        Signature sig = make_surface(g, n);
        DoubleBracket kappa = kappa_bracket(sig);
        Connection conn = nabla_basis(sig);
        MuOperator mu(sig);
        Sampler rnd(sig, opt.seed);
        for (int s = 0; s < opt.samples; ++s) {
            auto [a, b] = rnd.composable_pair(opt.max_len / 2);
            AlgElem ab = word_compose(a, b);
            AlgElem ae = alg_word(a), be = alg_word(b);
            const std::string inputs =
                surface_tag(g, n) + " a=" + show(sig, a) + " b=" + show(sig, b);

            // phi(ab) = phi(a).b + a.phi(b) - (|.|(x)id) kappa(a,b) - (id(x)|.|) kappa(b,a)
            TripleTrace phi_lhs = phi_map(sig, kappa, conn, ab);
            TripleTrace phi_rhs =
                triple_act(alg_unit(a.source()), phi_map(sig, kappa, conn, a), be) +
                triple_act(ae, phi_map(sig, kappa, conn, b), alg_unit(b.target()));
            phi_rhs -= trace_left(kappa.eval(ae, be));
            phi_rhs -= trace_right(kappa.eval(be, ae));
            check_zero(rep, sig, inputs + " [phi]", TripleTrace(phi_lhs - phi_rhs));

            // mu(ab) = mu(a).b + a.mu(b) + (|.|(x)id) kappa(a,b) + (id(x)|.|) kappa(b,a)
            TripleTrace mu_lhs = mu.eval(ab);
            TripleTrace mu_rhs =
                triple_act(alg_unit(a.source()), mu.eval(a), be) +
                triple_act(ae, mu.eval(b), alg_unit(b.target())) +
                trace_left(kappa.eval(a, b)) + trace_right(kappa.eval(b, a));
            check_zero(rep, sig, inputs + " [mu]", TripleTrace(mu_lhs - mu_rhs));

            // Leibniz in each slot of the bracket at a random split.
            Word c = rnd.word(opt.max_len / 2);
            Tensor2 second_lhs = kappa.eval(alg_word(c), ab);
            Tensor2 second_rhs = outer_act(alg_unit(a.source()), kappa.eval(c, a), be) +
                                 outer_act(ae, kappa.eval(c, b), alg_unit(b.target()));
            check_zero(rep, sig, inputs + " [second-slot]", Tensor2(second_lhs - second_rhs));

            Tensor2 first_lhs = kappa.eval(ab, alg_word(c));
            Tensor2 first_rhs = inner_act(alg_unit(a.source()), kappa.eval(a, c), be) +
                                inner_act(ae, kappa.eval(b, c), alg_unit(b.target()));
            check_zero(rep, sig, inputs + " [first-slot]", Tensor2(first_lhs - first_rhs));

            // Split-position independence: recombining mu(w) from any split
            // reproduces the direct evaluation exactly.
            Word w = rnd.word(opt.max_len);
            TripleTrace direct = mu.eval(w);
            TripleTrace worst;
            bool all_equal = true;
            for (std::size_t k = 1; k < w.size(); ++k) {
                Word x = w.prefix(k), y = w.suffix(k);
                TripleTrace combo =
                    triple_act(alg_unit(x.source()), mu.eval(x), alg_word(y)) +
                    triple_act(alg_word(x), mu.eval(y), alg_unit(y.target())) +
                    trace_left(kappa.eval(x, y)) + trace_right(kappa.eval(y, x));
                if (!(combo == direct)) {
                    all_equal = false;
                    worst = combo - direct;
                }
            }
            push_case(rep, surface_tag(g, n) + " [mu-split] w=" + show(sig, w),
                      show(sig, worst), all_equal);
        }
    }
    return rep;
}

SuiteReport suite_modular_derivation(const SuiteOptions& opt) {
    SuiteReport rep;
    rep.suite = "modular-derivation";
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    for (auto [g, n] : opt.surfaces) {
        Signature sig = make_surface(g, n);
        Connection conn = nabla_basis(sig);
        DoubleDerivation theta = ad_e(sig);
        Sampler rnd(sig, opt.seed);
        for (int s = 0; s < opt.samples; ++s) {
            DoubleBracket pi = rnd.bracket_with_ad_defect(2);
            auto [a, b] = rnd.composable_pair(opt.max_len / 2);
            AlgElem ab = word_compose(a, b);
            TripleTrace lhs = modular(sig, pi, conn, theta, ab);
            TripleTrace rhs =
                triple_act(alg_unit(a.source()), modular(sig, pi, conn, theta, alg_word(a)),
                           alg_word(b)) +
                triple_act(alg_word(a), modular(sig, pi, conn, theta, alg_word(b)),
                           alg_unit(b.target()));
            check_zero(rep, sig,
                       surface_tag(g, n) + " a=" + show(sig, a) + " b=" + show(sig, b),
                       TripleTrace(lhs - rhs));

            // Theorem link: sym(delta(|ab|)) = sym(|m(ab)|) when ab is a loop.
            if (a.target() == a.source() && b.target() == b.source() && s % 5 == 0) {
                TraceElem cls = trace_project(ab);
                TraceTensor2 link_lhs = sym(delta_map(sig, pi, conn, cls));
                TraceTensor2 link_rhs = sym(mult_trace(modular(sig, pi, conn, theta, ab)));
                check_zero(rep, sig, surface_tag(g, n) + " [sym-link]",
                           TraceTensor2(link_lhs - link_rhs));
            }
        }
    }
    return rep;
}

SuiteReport suite_skew(const SuiteOptions& opt) {
    SuiteReport rep;
    rep.suite = "skew";
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    for (auto [g, n] : opt.surfaces) {
        Signature sig = make_surface(g, n);
        DoubleBracket kappa = kappa_bracket(sig);
        Connection conn = nabla_basis(sig);
        MuOperator mu(sig);
        Sampler rnd(sig, opt.seed);
        for (int s = 0; s < opt.samples; ++s) {
            Word w = rnd.loop(opt.max_len);
            TraceTensor2 d = delta_map(sig, kappa, conn, trace_project(w));
            check_zero(rep, sig, surface_tag(g, n) + " sym(delta(|" + show(sig, w) + "|))",
                       sym(d));
            TraceTensor2 viamu = mult_trace(mu.eval(w));
            check_zero(rep, sig, surface_tag(g, n) + " delta+|mu| at " + show(sig, w),
                       TraceTensor2(d + viamu));
        }
    }
    return rep;
}

SuiteReport suite_tensor(const SuiteOptions& opt) {
    SuiteReport rep;
    rep.suite = "tensor";
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    Signature sig = Signature::tensor_algebra(opt.tensor_dim);
    Sampler rnd(sig, opt.seed);
    PairingMatrix p = PairingMatrix::zero(opt.tensor_dim);
    p.entries = rnd.skew_entries(opt.tensor_dim);
    DoubleBracket pi = pairing_bracket(sig, p);

    // Skew pairing gives a skew bracket.
    for (int s = 0; s < opt.samples; ++s) {
        Word a = rnd.word(opt.max_len), b = rnd.word(opt.max_len);
        Tensor2 defect = pi.eval(a, b) + flip(pi.eval(b, a));
        check_zero(rep, sig, "skew a=" + show(sig, a) + " b=" + show(sig, b), defect);
    }
    // phi vanishes on letters.
    for (int c = 0; c < sig.num_generators(); ++c)
        check_zero(rep, sig, "phi(" + sig.gen_name(c) + ")", phi_tensor(sig, p, sig.gen_word(c)));
    // sym(delta) vanishes on random cyclic words.
    for (int s = 0; s < opt.samples; ++s) {
        Word w = rnd.word(opt.max_len);
        TraceTensor2 d = delta_tensor(sig, p, trace_project(w));
        check_zero(rep, sig, "sym(delta(|" + show(sig, w) + "|))", sym(d));
    }
    // Leibniz rules of the induced bracket.
    for (int s = 0; s < opt.samples; ++s) {
        Word a = rnd.word(opt.max_len / 2), b = rnd.word(opt.max_len / 2),
             c = rnd.word(opt.max_len / 2);
        AlgElem be = alg_word(b);
        Tensor2 second = pi.eval(alg_word(c), word_compose(a, b)) -
                         outer_act(alg_unit(0), pi.eval(c, a), be) -
                         outer_act(alg_word(a), pi.eval(c, b), alg_unit(0));
        check_zero(rep, sig, "second-slot Leibniz case " + std::to_string(s), second);
        Tensor2 first = pi.eval(word_compose(a, b), alg_word(c)) -
                        inner_act(alg_unit(0), pi.eval(a, c), be) -
                        inner_act(alg_word(a), pi.eval(b, c), alg_unit(0));
        check_zero(rep, sig, "first-slot Leibniz case " + std::to_string(s), first);
    }
    // Trace space: |empty| is not zero and |uv| = |vu|.
    {
        TraceElem unit = trace_project(Word::identity(0));
        push_case(rep, "|1| != 0", show(sig, unit), !unit.is_zero());
        for (int s = 0; s < opt.samples; ++s) {
            Word u = rnd.word(opt.max_len / 2), v = rnd.word(opt.max_len / 2);
            TraceElem lhs = trace_project(word_compose(u, v));
            TraceElem rhs = trace_project(word_compose(v, u));
            check_zero(rep, sig, "cyclic |uv|-|vu| case " + std::to_string(s),
                       TraceElem(lhs - rhs));
        }
    }
    return rep;
}

SuiteReport suite_structural(const SuiteOptions& opt) {
    SuiteReport rep;
    rep.suite = "structural";
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    for (auto [g, n] : opt.surfaces) {
        Signature sig = make_surface(g, n);
        Sampler rnd(sig, opt.seed);

        // Word reduction is confluent: cancelling any reducible pair first
        // gives the same normal form as the left-to-right stack reduction.
        for (int s = 0; s < opt.samples; ++s) {
            std::vector<Letter> chain = rnd.raw_chain(opt.max_len + 4);
            if (chain.empty())
                continue;
            Word reference = Word::of_letters(chain);
            std::vector<Letter> work = chain;
            while (true) {
                std::vector<std::size_t> reducible;
                for (std::size_t i = 0; i + 1 < work.size(); ++i)
                    if (work[i].is_inverse_of(work[i + 1]))
                        reducible.push_back(i);
                if (reducible.empty())
                    break;
                std::size_t at = reducible[rnd.draw(reducible.size())];
                work.erase(work.begin() + std::ptrdiff_t(at),
                           work.begin() + std::ptrdiff_t(at) + 2);
            }
            Word random_order = Word::of_letters(work, chain.front().src);
            push_case(rep, surface_tag(g, n) + " confluence case " + std::to_string(s),
                      show(sig, reference) + " vs " + show(sig, random_order),
                      reference == random_order);
        }

        // Trace cyclicity and vanishing of commutator traces.
        for (int s = 0; s < opt.samples; ++s) {
            Word x = rnd.word(opt.max_len);
            Word y = rnd.word_between(x.target(), x.source(), opt.max_len);
            TraceElem lhs = trace_project(word_compose(x, y));
            TraceElem rhs = trace_project(word_compose(y, x));
            check_zero(rep, sig, surface_tag(g, n) + " |xy|-|yx| case " + std::to_string(s),
                       TraceElem(lhs - rhs));
        }
        for (int s = 0; s < opt.samples; ++s) {
            Word a = rnd.word(opt.max_len), x = rnd.word(opt.max_len);
            AlgElem comm = alg_mul(alg_word(a), alg_word(x)) - alg_mul(alg_word(x), alg_word(a));
            check_zero(rep, sig, surface_tag(g, n) + " |ax-xa| case " + std::to_string(s),
                       trace_project(comm));
        }

        // Bimodule axioms for the outer and inner structures.
        for (int s = 0; s < opt.samples; ++s) {
            Word a = rnd.word(opt.max_len / 2), b = rnd.word(opt.max_len / 2);
            Word p = rnd.word(opt.max_len / 2), q = rnd.word(opt.max_len / 2);
            Tensor2 t = tensor2(p, q, rnd.coeff());
            AlgElem ab = word_compose(a, b);
            AlgElem one = alg_one(sig);
            Tensor2 outer_assoc = outer_act(ab, t, one) -
                                  outer_act(alg_word(a), outer_act(alg_word(b), t, one), one);
            Tensor2 inner_assoc = inner_act(ab, t, one) -
                                  inner_act(alg_word(a), inner_act(alg_word(b), t, one), one);
            Tensor2 unit_outer = outer_act(one, t, one) - t;
            Tensor2 commute = outer_act(alg_word(a), inner_act(alg_word(b), t, one), one) -
                              inner_act(alg_word(b), outer_act(alg_word(a), t, one), one);
            const std::string tag = surface_tag(g, n) + " bimodule case " + std::to_string(s);
            check_zero(rep, sig, tag + " [outer-assoc]", outer_assoc);
            check_zero(rep, sig, tag + " [inner-assoc]", inner_assoc);
            check_zero(rep, sig, tag + " [unit]", unit_outer);
            check_zero(rep, sig, tag + " [commute]", commute);
        }

        // Dual-basis reconstruction.
        for (int s = 0; s < opt.samples; ++s) {
            OneForm omega = rnd.one_form(2, opt.max_len / 2);
            OneForm back = reconstruct(sig, omega);
            check_zero(rep, sig, surface_tag(g, n) + " duality case " + std::to_string(s),
                       OneForm(back - omega));
        }
    }
    return rep;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "kappa-table",    "defect", "main-theorem", "modular",
        "lift",           "tdiv-mult", "product-rules", "modular-derivation",
        "skew",           "tensor", "structural"};
    return names;
}

std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& opt) {
    using Runner = SuiteReport (*)(const SuiteOptions&);
    static const std::vector<std::pair<std::string, Runner>> table = {
        {"kappa-table", suite_kappa_table},
        {"defect", suite_defect},
        {"main-theorem", suite_main_theorem},
        {"modular", suite_modular_vanishing},
        {"lift", suite_lift},
        {"tdiv-mult", suite_tdiv_mult},
        {"product-rules", suite_product_rules},
        {"modular-derivation", suite_modular_derivation},
        {"skew", suite_skew},
        {"tensor", suite_tensor},
        {"structural", suite_structural},
    };
    std::vector<SuiteReport> out;
    if (name == "all") {
        for (const auto& [nm, fn] : table)
            out.push_back(fn(opt));
        return out;
    }
    for (const auto& [nm, fn] : table)
        if (nm == name) {
            out.push_back(fn(opt));
            return out;
        }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace loopalg
