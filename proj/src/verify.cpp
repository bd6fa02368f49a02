#include "dtn/verify.hpp"

#include <stdexcept>

namespace dtn {

namespace {

VerifyReport verify_impl(const std::vector<mpz_class>& inputs,
                         const mpz_class& n_param, bool raw) {
    if (inputs.size() < 2) {
        throw std::invalid_argument("verify: need at least two entries");
    }
    if (n_param == 0) {
        throw std::invalid_argument("verify: n must be nonzero");
    }
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (inputs[i] < 1) {
            throw std::invalid_argument("verify: entries must be positive, got " +
                                        inputs[i].get_str());
        }
        if (i > 0 && inputs[i] <= inputs[i - 1]) {
            throw std::invalid_argument(
                "verify: entries must be strictly increasing (" +
                inputs[i - 1].get_str() + " then " + inputs[i].get_str() + ")");
        }
    }

    std::vector<mpz_class> elements;
    elements.reserve(inputs.size());
    for (const auto& v : inputs) {
        elements.push_back(raw ? v : triangular(v));
    }

    VerifyReport rep;
    rep.n_param = n_param;
    rep.inputs = inputs;
    rep.raw = raw;
    rep.verdict = true;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = i + 1; j < elements.size(); ++j) {
            PairCheck pc;
            pc.x = inputs[i];
            pc.y = inputs[j];
            pc.value = elements[i] * elements[j] + n_param;
            if (auto cert = square_certificate(pc.value)) {
                pc.root = cert->root;
            } else {
                rep.verdict = false;
            }
            rep.pairs.push_back(std::move(pc));
        }
    }
    return rep;
}

} // namespace

VerifyReport verify_tuple(const std::vector<mpz_class>& indices,
                          const mpz_class& n_param) {
    return verify_impl(indices, n_param, /*raw=*/false);
}

VerifyReport verify_raw_tuple(const std::vector<mpz_class>& elements,
                              const mpz_class& n_param) {
    return verify_impl(elements, n_param, /*raw=*/true);
}

std::optional<mpz_class> extension_candidate(const mpz_class& a,
                                             const mpz_class& b,
                                             const mpz_class& m) {
    if (m < 1) {
        throw std::invalid_argument("extension_candidate: m must be >= 1");
    }
    if (!(a >= 1 && a < b)) {
        throw std::invalid_argument("extension_candidate: need 1 <= a < b");
    }
    const mpz_class ta = triangular(a);
    const mpz_class tb = triangular(b);
    const auto cert = square_certificate(ta * tb + m * m);
    if (!cert) {
        throw std::invalid_argument(
            "extension_candidate: {T_a, T_b} is not a D(m^2)-pair");
    }
    const mpz_class& r = cert->root;
    // The mechanism needs the root in both certificate shapes at once:
    // r = T_a + m(2a+1) makes T_a*T_{8r} + m^2 = (2r(2a+1)-m)^2, and
    // r = T_b - m(2b+1) makes T_b*T_{8r} + m^2 = (2r(2b+1)+m)^2.
    if (r != ta + m * (2 * a + 1) || r != tb - m * (2 * b + 1)) {
        return std::nullopt;
    }
    const mpz_class c = 8 * r;
    const auto rep = verify_tuple({a, b, c}, m * m);
    if (!rep.verdict) {
        throw invariant_violation(
            "extension_candidate: extension failed verification");
    }
    return c;
}

} // namespace dtn
