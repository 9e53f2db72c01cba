#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cluster/fixtures.hpp"
#include "cluster/json_io.hpp"
#include "cluster/seed.hpp"
#include "cluster/word.hpp"

namespace cluster {

/// A step's signed column left the non-negative cone, so sign coherence
/// failed upstream of identity construction.
struct ConeViolation : std::domain_error {
    explicit ConeViolation(const std::string& what) : std::domain_error(what) {}
};

/**
 * Tropical-form word of a closed loop: factor t has argument ε_t·c_t,
 * base exponent d_{k_t}, and power sign ε_t. The full word multiplies
 * to the constant series over Λ = D·B of the initial seed.
 */
inline DilogWord identity_from_loop(const std::vector<StepTrace>& trace,
                                    const std::vector<Int>& d) {
    DilogWord w;
    w.reserve(trace.size());
    for (const StepTrace& st : trace) {
        DilogFactor f;
        f.alpha.resize(st.c.size());
        for (std::size_t i = 0; i < st.c.size(); ++i) {
            Int v = checked_mul(static_cast<Int>(st.eps), st.c[i]);
            if (v < 0) throw ConeViolation("identity_from_loop: signed column has mixed signs");
            f.alpha[i] = v;
        }
        if (st.k < 0 || st.k >= static_cast<int>(d.size()))
            throw std::invalid_argument("identity_from_loop: symmetrizer size mismatch");
        f.k = static_cast<int>(d[static_cast<std::size_t>(st.k)]);
        f.sign = st.eps;
        w.push_back(std::move(f));
    }
    return w;
}

/**
 * Presents a constant-series loop word as an lhs = rhs pair: the word
 * must consist of a sign +1 prefix followed by a sign -1 suffix; the
 * suffix is inverted (reversed, signs flipped) onto the right side.
 */
inline std::pair<DilogWord, DilogWord> split_identity(const DilogWord& w) {
    std::size_t cut = 0;
    while (cut < w.size() && w[cut].sign == 1) ++cut;
    for (std::size_t t = cut; t < w.size(); ++t)
        if (w[t].sign != -1)
            throw std::invalid_argument(
                "split_identity: signs are not a positive prefix then negative suffix");
    DilogWord lhs(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
    DilogWord rhs;
    rhs.reserve(w.size() - cut);
    for (std::size_t t = w.size(); t-- > cut;) {
        DilogFactor f = w[t];
        f.sign = 1;
        rhs.push_back(std::move(f));
    }
    return {std::move(lhs), std::move(rhs)};
}

/// Printed identity pair for a finite rank-2 class, loaded from the
/// shipped fixture data.
inline IdentityFile rank2_identity(Rank2Class cls) {
    const char* name = nullptr;
    switch (cls) {
        case Rank2Class::A1xA1: name = "a1a1"; break;
        case Rank2Class::A2: name = "a2"; break;
        case Rank2Class::B2: name = "b2"; break;
        case Rank2Class::G2: name = "g2"; break;
        default:
            throw std::invalid_argument("rank2_identity: class has no finite loop identity");
    }
    const Fixture* fx = find_fixture(name);
    if (fx == nullptr || fx->identity_file.empty())
        throw std::runtime_error("rank2_identity: fixture data missing");
    return load_identity_file(fixture_dir() + "/" + fx->identity_file);
}

}  // namespace cluster
