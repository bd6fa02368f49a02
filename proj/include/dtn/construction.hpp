#pragma once

#include <gmpxx.h>

#include <array>
#include <vector>

#include "dtn/bigmath.hpp"

namespace dtn {

// Parameters of one construction run: build D(m^2)-triples of triangular
// numbers that all contain T_n.
struct ConstructionParams {
    mpz_class m; // the D(m^2) parameter, >= 1
    mpz_class n; // the preserved starting index N_0, >= 1
};

enum class ProvenanceTag { constructed, family, sporadic };

struct Provenance {
    ProvenanceTag tag = ProvenanceTag::constructed;
    unsigned long k = 0; // step, meaningful only for constructed

    bool operator==(const Provenance& o) const {
        return tag == o.tag && (tag != ProvenanceTag::constructed || k == o.k);
    }
};

// A verified D(n_param)-triple of triangular numbers: indices a < b < c and
// the three square certificates for T_a*T_b, T_a*T_c, T_b*T_c + n_param.
struct TripleRecord {
    mpz_class n_param;
    std::array<mpz_class, 3> indices;
    std::array<SquareCertificate, 3> certificates; // (ab, ac, bc)
    Provenance provenance;
};

// Sliding window of the recurrence engine at step k >= 1. Holds
// N_k, N_{k+1}, s_{k-1}, s_k and t_k; the certified triple at this state is
// {T_{N_0}, T_{N_k}, T_{N_{k+1}}} with roots (s_{k-1}, s_k, t_k).
struct ConstructionState {
    ConstructionParams params;
    unsigned long k = 1;
    mpz_class N_k;
    mpz_class N_k1;
    mpz_class s_prev; // s_{k-1}
    mpz_class s_cur;  // s_k
    mpz_class t_cur;  // t_k
};

// r_1 = (n^2 + (4m+1)n + 2m)/2, the root certifying the seed pair
// {T_n, T_{n+4m}}: T_n*T_{n+4m} + m^2 = r_1^2. Also equals T_n + m(2n+1).
mpz_class pair_root(const ConstructionParams& p);

// Extension of the seed pair to the seed triple {T_n, T_{n+4m}, T_{8 r_1}}:
// N_2 = 8 r_1, s_1 = 2 r_1(2n+1) - m, t_1 = 2 r_1(2(n+4m)+1) + m. Both new
// certificates are asserted by exact multiplication.
struct InitialExtension {
    mpz_class N2;
    mpz_class s1;
    mpz_class t1;
};
InitialExtension initial_extension(const ConstructionParams& p);

// State at k = 1. Seed certificates are always asserted.
ConstructionState initial_state(const ConstructionParams& p);

// Advance one step:
//   N_{k+2} = 8 s_k + N_k
//   s_{k+1} = 2 s_k (2 N_0     + 1) - s_{k-1}
//   t_{k+1} = 2 s_k (2 N_{k+1} + 1) + t_k
// With self_check (the default) all three certificates of the new window are
// re-verified by exact multiplication, and strict index growth is asserted.
ConstructionState step(const ConstructionState& st, bool self_check = true);

// The triple {T_{N_0}, T_{N_{k+1}}, T_{N_{k+2}}} produced at step k >= 0,
// with certificates (s_k, s_{k+1}, t_{k+1}). Recomputes from the seeds in
// O(k) big-integer steps.
TripleRecord triple_at(const ConstructionParams& p, unsigned long k,
                       bool self_check = true);

// The one-shot family triple {T_n, T_{n+4m}, T_{4(n^2+(4m+1)n+2m)}}; its
// third index equals 8 r_1, so it coincides with triple_at(p, 0) up to the
// provenance tag.
TripleRecord family_triple(const ConstructionParams& p);

// Stream of triples for k = 0, 1, 2, ... over one construction run.
class TripleStream {
public:
    explicit TripleStream(ConstructionParams p, bool self_check = true);

    // Next TripleRecord; first call yields k = 0.
    TripleRecord next();

    const ConstructionState& state() const { return st_; }

private:
    bool self_check_;
    bool emitted_ = false;
    ConstructionState st_;
};

// Closed forms, evaluated exactly in the quadratic ring with radicand
// D = n(n+1) and converted to integers with mandatory exactness checks.
//
//   s_k = lambda1 * alpha^{k+1} + lambda2 * beta^{k+1}        (k >= -1)
//   N_k = (2/sqrt(D)) (lambda1 alpha^k - lambda2 beta^k) - 1/2 (k >= 1)
//   t_k = (2/D) [alpha lambda1^2 (alpha^{2k} - 1)
//              + beta  lambda2^2 (beta^{2k}  - 1)] + m         (k >= 1)
//
// where alpha = 2n+1 + 2 sqrt(D), beta = conj(alpha) = alpha^{-1}, and
// lambda1 = (4m + sqrt(D))/8, lambda2 = conj(lambda1). The N_k and t_k forms
// are the alpha-orbit solutions reduced via alpha^2 - 1 = 4 alpha sqrt(D);
// N's orbit starts at k = 1 (its k = 0 value is 0, not n), so
// closed_form_N(p, 0) returns the seed N_0 = n directly.
mpz_class closed_form_s(const ConstructionParams& p, long k);
mpz_class closed_form_N(const ConstructionParams& p, unsigned long k);
mpz_class closed_form_t(const ConstructionParams& p, unsigned long k);

// Reduction identities behind the certificates, evaluated on recurrence
// values at step k >= 1; both hold for every k.
//   (2 N_k + 1) T_{N_0} == s_k - s_{k-1} (2 N_0 + 1)
//   T_{N_{k+1}} (2 N_k + 1) == s_k + t_k (2 N_{k+1} + 1)
bool identity_check_s(const ConstructionParams& p, unsigned long k);
bool identity_check_t(const ConstructionParams& p, unsigned long k);
bool identity_check_s(const ConstructionState& st);
bool identity_check_t(const ConstructionState& st);

// Closed-form-vs-recurrence agreement over one parameter set:
// s for k in [-1, k_max], N for k in [0, k_max+2], t for k in [1, k_max],
// plus both reduction identities for k in [1, k_max].
struct ClosedFormAgreement {
    long s_k_start = -1;
    std::vector<bool> s_agree;
    long N_k_start = 0;
    std::vector<bool> N_agree;
    long t_k_start = 1;
    std::vector<bool> t_agree;
    long id_k_start = 1;
    std::vector<bool> identity_s;
    std::vector<bool> identity_t;
    bool all = true;
};
ClosedFormAgreement closed_form_agreement(const ConstructionParams& p,
                                          unsigned long k_max);

} // namespace dtn
