#include "dtn/construction.hpp"

#include <stdexcept>
#include <utility>

#include "dtn/quadring.hpp"

namespace dtn {

namespace {

void validate(const ConstructionParams& p) {
    if (p.m < 1 || p.n < 1) {
        throw std::invalid_argument(
            "construction: parameters require m >= 1 and n >= 1, got m=" +
            p.m.get_str() + " n=" + p.n.get_str());
    }
}

void check_certificate(const mpz_class& ta, const mpz_class& tb,
                       const mpz_class& m2, const mpz_class& root,
                       const char* label) {
    if (ta * tb + m2 != root * root) {
        throw invariant_violation(std::string("construction: certificate ") +
                                  label + " failed: root=" + root.get_str());
    }
}

// Triple at step k is carried by the state at k+1:
// indices (N_0, N_{k+1}, N_{k+2}), roots (s_k, s_{k+1}, t_{k+1}).
TripleRecord record_from_state(const ConstructionState& st) {
    const mpz_class m2 = st.params.m * st.params.m;
    const mpz_class t0 = triangular(st.params.n);
    const mpz_class ta = triangular(st.N_k);
    const mpz_class tb = triangular(st.N_k1);
    TripleRecord rec;
    rec.n_param = m2;
    rec.indices = {st.params.n, st.N_k, st.N_k1};
    rec.certificates = {SquareCertificate{t0 * ta + m2, st.s_prev},
                        SquareCertificate{t0 * tb + m2, st.s_cur},
                        SquareCertificate{ta * tb + m2, st.t_cur}};
    rec.provenance = {ProvenanceTag::constructed, st.k - 1};
    return rec;
}

mpz_class radicand_of(const ConstructionParams& p) { return p.n * (p.n + 1); }

QuadElem alpha_of(const ConstructionParams& p, const mpz_class& d) {
    return QuadElem(2 * p.n + 1, 2, 0, d);
}

QuadElem lambda1_of(const ConstructionParams& p, const mpz_class& d) {
    return QuadElem(4 * p.m, 1, 3, d); // m/2 + sqrt(d)/8
}

} // namespace

mpz_class pair_root(const ConstructionParams& p) {
    validate(p);
    mpz_class r1 = p.n * p.n + (4 * p.m + 1) * p.n + 2 * p.m;
    mpz_divexact_ui(r1.get_mpz_t(), r1.get_mpz_t(), 2); // n^2+n even, rest even
    check_certificate(triangular(p.n), triangular(p.n + 4 * p.m), p.m * p.m, r1,
                      "r_1 (seed pair)");
    return r1;
}

InitialExtension initial_extension(const ConstructionParams& p) {
    validate(p);
    const mpz_class r1 = pair_root(p);
    InitialExtension ext;
    ext.N2 = 8 * r1;
    ext.s1 = 2 * r1 * (2 * p.n + 1) - p.m;
    ext.t1 = 2 * r1 * (2 * (p.n + 4 * p.m) + 1) + p.m;

    const mpz_class m2 = p.m * p.m;
    const mpz_class tN2 = triangular(ext.N2);
    check_certificate(triangular(p.n), tN2, m2, ext.s1, "s_1");
    check_certificate(triangular(p.n + 4 * p.m), tN2, m2, ext.t1, "t_1");
    return ext;
}

ConstructionState initial_state(const ConstructionParams& p) {
    validate(p);
    const mpz_class r1 = pair_root(p);
    const InitialExtension ext = initial_extension(p);
    ConstructionState st;
    st.params = p;
    st.k = 1;
    st.N_k = p.n + 4 * p.m;
    st.N_k1 = ext.N2;
    st.s_prev = r1;
    st.s_cur = ext.s1;
    st.t_cur = ext.t1;
    if (!(p.n < st.N_k && st.N_k < st.N_k1)) {
        throw invariant_violation("construction: seed indices not increasing");
    }
    return st;
}

ConstructionState step(const ConstructionState& st, bool self_check) {
    const mpz_class& n0 = st.params.n;
    ConstructionState nx;
    nx.params = st.params;
    nx.k = st.k + 1;
    nx.N_k = st.N_k1;
    nx.N_k1 = 8 * st.s_cur + st.N_k;
    nx.s_prev = st.s_cur;
    nx.s_cur = 2 * st.s_cur * (2 * n0 + 1) - st.s_prev;
    nx.t_cur = 2 * st.s_cur * (2 * st.N_k1 + 1) + st.t_cur;

    if (nx.N_k1 <= nx.N_k) {
        throw invariant_violation("construction: index growth failed at k=" +
                                  std::to_string(nx.k));
    }
    if (self_check) {
        const mpz_class m2 = st.params.m * st.params.m;
        const mpz_class t0 = triangular(n0);
        const mpz_class ta = triangular(nx.N_k);
        const mpz_class tb = triangular(nx.N_k1);
        check_certificate(t0, ta, m2, nx.s_prev, "s_k (window low)");
        check_certificate(t0, tb, m2, nx.s_cur, "s_{k+1} (window high)");
        check_certificate(ta, tb, m2, nx.t_cur, "t_{k+1} (window pair)");
    }
    return nx;
}

TripleRecord triple_at(const ConstructionParams& p, unsigned long k,
                       bool self_check) {
    ConstructionState st = initial_state(p);
    for (unsigned long i = 0; i < k; ++i) {
        st = step(st, self_check);
    }
    return record_from_state(st);
}

TripleRecord family_triple(const ConstructionParams& p) {
    validate(p);
    const mpz_class r1 = pair_root(p);
    const InitialExtension ext = initial_extension(p);
    const mpz_class c_index = 4 * (p.n * p.n + (4 * p.m + 1) * p.n + 2 * p.m);
    if (c_index != ext.N2) {
        throw invariant_violation("family_triple: third index != 8 r_1");
    }
    const mpz_class m2 = p.m * p.m;
    const mpz_class t0 = triangular(p.n);
    const mpz_class t1 = triangular(p.n + 4 * p.m);
    const mpz_class t2 = triangular(c_index);
    TripleRecord rec;
    rec.n_param = m2;
    rec.indices = {p.n, p.n + 4 * p.m, c_index};
    rec.certificates = {SquareCertificate{t0 * t1 + m2, r1},
                        SquareCertificate{t0 * t2 + m2, ext.s1},
                        SquareCertificate{t1 * t2 + m2, ext.t1}};
    rec.provenance = {ProvenanceTag::family, 0};
    return rec;
}

TripleStream::TripleStream(ConstructionParams p, bool self_check)
    : self_check_(self_check), st_(initial_state(p)) {}

TripleRecord TripleStream::next() {
    if (emitted_) {
        st_ = step(st_, self_check_);
    }
    emitted_ = true;
    return record_from_state(st_);
}

mpz_class closed_form_s(const ConstructionParams& p, long k) {
    validate(p);
    if (k < -1) {
        throw std::invalid_argument("closed_form_s: k must be >= -1");
    }
    const mpz_class d = radicand_of(p);
    const QuadElem a = alpha_of(p, d);
    const QuadElem l1 = lambda1_of(p, d);
    const auto exp = static_cast<unsigned long>(k + 1);
    const QuadElem s = l1 * a.pow(exp) + l1.conj() * a.conj().pow(exp);
    return s.to_integer();
}

mpz_class closed_form_N(const ConstructionParams& p, unsigned long k) {
    validate(p);
    if (k == 0) {
        // The alpha-orbit starts at k = 1; at k = 0 the formula evaluates to
        // 0, while the seed is N_0 = n.
        return p.n;
    }
    const mpz_class d = radicand_of(p);
    const QuadElem a = alpha_of(p, d);
    const QuadElem l1 = lambda1_of(p, d);
    const QuadElem y = l1 * a.pow(k) - l1.conj() * a.conj().pow(k);
    if (y.num_rational() != 0) {
        throw invariant_violation(
            "closed_form_N: bracket is not a pure sqrt(D) multiple");
    }
    const QuadElem z = y.div_sqrt_d(); // exact: 8a/(a^2-1) = 2/sqrt(D)
    const QuadElem half(1, 0, 1, d);
    return (z + z - half).to_integer();
}

mpz_class closed_form_t(const ConstructionParams& p, unsigned long k) {
    validate(p);
    if (k == 0) {
        throw std::invalid_argument("closed_form_t: k must be >= 1");
    }
    const mpz_class d = radicand_of(p);
    const QuadElem a = alpha_of(p, d);
    const QuadElem b = a.conj();
    const QuadElem l1 = lambda1_of(p, d);
    const QuadElem l2 = l1.conj();
    const QuadElem one = QuadElem::integer(1, d);
    // (alpha^2-1)^2 = 16 D alpha^2 collapses all coefficients to /D.
    const QuadElem u = a * l1 * l1 * (a.pow(2 * k) - one) +
                       b * l2 * l2 * (b.pow(2 * k) - one);
    const QuadElem v = (u + u).div_int(d);
    return (v + QuadElem::integer(p.m, d)).to_integer();
}

bool identity_check_s(const ConstructionState& st) {
    const mpz_class lhs = (2 * st.N_k + 1) * triangular(st.params.n);
    const mpz_class rhs = st.s_cur - st.s_prev * (2 * st.params.n + 1);
    return lhs == rhs;
}

bool identity_check_t(const ConstructionState& st) {
    const mpz_class lhs = triangular(st.N_k1) * (2 * st.N_k + 1);
    const mpz_class rhs = st.s_cur + st.t_cur * (2 * st.N_k1 + 1);
    return lhs == rhs;
}

namespace {

ConstructionState state_at(const ConstructionParams& p, unsigned long k) {
    if (k == 0) {
        throw std::invalid_argument("identity checks require k >= 1");
    }
    ConstructionState st = initial_state(p);
    for (unsigned long i = 1; i < k; ++i) {
        st = step(st);
    }
    return st;
}

} // namespace

bool identity_check_s(const ConstructionParams& p, unsigned long k) {
    validate(p);
    return identity_check_s(state_at(p, k));
}

bool identity_check_t(const ConstructionParams& p, unsigned long k) {
    validate(p);
    return identity_check_t(state_at(p, k));
}

ClosedFormAgreement closed_form_agreement(const ConstructionParams& p,
                                          unsigned long k_max) {
    validate(p);
    if (k_max < 1) {
        throw std::invalid_argument("closed_form_agreement: k_max must be >= 1");
    }

    ClosedFormAgreement out;

    // Recurrence route: s_{-1}..s_{k_max}, N_0..N_{k_max+2}, t_1..t_{k_max},
    // with both identities evaluated at every state.
    std::vector<mpz_class> s_seq; // s_seq[i] = s_{i-1}
    std::vector<mpz_class> n_seq; // n_seq[k] = N_k
    std::vector<mpz_class> t_seq; // t_seq[i] = t_{i+1}
    s_seq.push_back(p.m);
    n_seq.push_back(p.n);

    ConstructionState st = initial_state(p);
    s_seq.push_back(st.s_prev); // s_0
    s_seq.push_back(st.s_cur);  // s_1
    n_seq.push_back(st.N_k);    // N_1
    n_seq.push_back(st.N_k1);   // N_2
    t_seq.push_back(st.t_cur);  // t_1
    out.identity_s.push_back(identity_check_s(st));
    out.identity_t.push_back(identity_check_t(st));

    for (unsigned long k = 2; k <= k_max + 1; ++k) {
        st = step(st);
        s_seq.push_back(st.s_cur);
        n_seq.push_back(st.N_k1);
        t_seq.push_back(st.t_cur);
        if (k <= k_max) {
            out.identity_s.push_back(identity_check_s(st));
            out.identity_t.push_back(identity_check_t(st));
        }
    }

    for (long k = -1; k <= static_cast<long>(k_max); ++k) {
        out.s_agree.push_back(closed_form_s(p, k) == s_seq[k + 1]);
    }
    for (unsigned long k = 0; k <= k_max + 2; ++k) {
        out.N_agree.push_back(closed_form_N(p, k) == n_seq[k]);
    }
    for (unsigned long k = 1; k <= k_max; ++k) {
        out.t_agree.push_back(closed_form_t(p, k) == t_seq[k - 1]);
    }

    for (const auto& v :
         {out.s_agree, out.N_agree, out.t_agree, out.identity_s, out.identity_t}) {
        for (bool ok : v) {
            out.all = out.all && ok;
        }
    }
    return out;
}

} // namespace dtn
