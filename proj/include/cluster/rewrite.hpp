#pragma once

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cluster/json_io.hpp"
#include "cluster/word.hpp"

namespace cluster {

enum class MoveKind { commute_swap, pentagon_expand, pentagon_contract };

inline std::string move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::commute_swap: return "commute_swap";
        case MoveKind::pentagon_expand: return "pentagon_expand";
        default: return "pentagon_contract";
    }
}

inline MoveKind move_kind_from_name(const std::string& s) {
    if (s == "commute_swap") return MoveKind::commute_swap;
    if (s == "pentagon_expand") return MoveKind::pentagon_expand;
    if (s == "pentagon_contract") return MoveKind::pentagon_contract;
    throw std::invalid_argument("unknown move kind: " + s);
}

struct RewriteMove {
    MoveKind kind = MoveKind::commute_swap;
    int pos = 0;

    friend bool operator==(const RewriteMove& a, const RewriteMove& b) {
        return a.kind == b.kind && a.pos == b.pos;
    }
};

struct MoveNotApplicable : std::domain_error {
    explicit MoveNotApplicable(const std::string& what) : std::domain_error(what) {}
};

/**
 * Applies one rewrite move in place.
 *
 * commute_swap at p: factors p, p+1 swap; requires Λ(α_p, α_{p+1}) = 0.
 * pentagon_expand at p: [f, g] with signs +1, equal base k and
 * Λ(α_f, α_g) = -k becomes [g, f+g, f].
 * pentagon_contract at p: [g, m, f] with m = f+g under the same
 * conditions becomes [f, g].
 */
inline void apply_move(DilogWord& w, const RewriteMove& m, const IntMat& L) {
    auto need = [&](bool cond, const char* what) {
        if (!cond) throw MoveNotApplicable(what);
    };
    int len = static_cast<int>(w.size());
    switch (m.kind) {
        case MoveKind::commute_swap: {
            need(m.pos >= 0 && m.pos + 1 < len, "commute_swap: position out of range");
            DilogFactor& a = w[static_cast<std::size_t>(m.pos)];
            DilogFactor& b = w[static_cast<std::size_t>(m.pos) + 1];
            need(pairing_form(L, a.alpha, b.alpha) == 0, "commute_swap: factors do not commute");
            std::swap(a, b);
            return;
        }
        case MoveKind::pentagon_expand: {
            need(m.pos >= 0 && m.pos + 1 < len, "pentagon_expand: position out of range");
            DilogFactor f = w[static_cast<std::size_t>(m.pos)];
            DilogFactor g = w[static_cast<std::size_t>(m.pos) + 1];
            need(f.sign == 1 && g.sign == 1, "pentagon_expand: factor signs must be +1");
            need(f.k == g.k, "pentagon_expand: base exponents differ");
            need(pairing_form(L, f.alpha, g.alpha) == -static_cast<Int>(f.k),
                 "pentagon_expand: pairing is not -k");
            DilogFactor mid;
            mid.alpha.resize(f.alpha.size());
            for (std::size_t i = 0; i < f.alpha.size(); ++i)
                mid.alpha[i] = checked_add(f.alpha[i], g.alpha[i]);
            mid.k = f.k;
            w[static_cast<std::size_t>(m.pos)] = std::move(g);
            w[static_cast<std::size_t>(m.pos) + 1] = std::move(mid);
            w.insert(w.begin() + m.pos + 2, std::move(f));
            return;
        }
        case MoveKind::pentagon_contract: {
            need(m.pos >= 0 && m.pos + 2 < len, "pentagon_contract: position out of range");
            DilogFactor g = w[static_cast<std::size_t>(m.pos)];
            const DilogFactor& mid = w[static_cast<std::size_t>(m.pos) + 1];
            DilogFactor f = w[static_cast<std::size_t>(m.pos) + 2];
            need(f.sign == 1 && g.sign == 1 && mid.sign == 1,
                 "pentagon_contract: factor signs must be +1");
            need(f.k == g.k && mid.k == f.k, "pentagon_contract: base exponents differ");
            for (std::size_t i = 0; i < f.alpha.size(); ++i)
                need(mid.alpha[i] == checked_add(f.alpha[i], g.alpha[i]),
                     "pentagon_contract: middle factor is not the sum");
            need(pairing_form(L, f.alpha, g.alpha) == -static_cast<Int>(f.k),
                 "pentagon_contract: pairing is not -k");
            w[static_cast<std::size_t>(m.pos)] = std::move(f);
            w[static_cast<std::size_t>(m.pos) + 1] = std::move(g);
            w.erase(w.begin() + m.pos + 2);
            return;
        }
    }
    throw MoveNotApplicable("unknown move kind");
}

/// Word list w_0..w_T with the T moves connecting them, over one pairing.
struct RewriteTrace {
    IntMat Lambda;
    std::vector<DilogWord> words;
    std::vector<RewriteMove> moves;
};

/// Replay outcome; failures are values, not exceptions.
struct TraceCheck {
    bool ok = true;
    std::size_t step = 0;
    std::string reason;
};

inline TraceCheck check_trace(const RewriteTrace& tr) {
    TraceCheck out;
    if (tr.words.size() != tr.moves.size() + 1) {
        out.ok = false;
        out.reason = "word count must be move count plus one";
        return out;
    }
    for (std::size_t t = 0; t < tr.moves.size(); ++t) {
        DilogWord w = tr.words[t];
        try {
            apply_move(w, tr.moves[t], tr.Lambda);
        } catch (const MoveNotApplicable& e) {
            out.ok = false;
            out.step = t;
            out.reason = e.what();
            return out;
        }
        if (w != tr.words[t + 1]) {
            out.ok = false;
            out.step = t;
            out.reason = "applied move does not reproduce the next word";
            return out;
        }
    }
    return out;
}

namespace detail {
inline bool factor_less(const DilogFactor& a, const DilogFactor& b) {
    Int da = vector_degree(a.alpha), db = vector_degree(b.alpha);
    if (da != db) return da < db;
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    if (a.k != b.k) return a.k < b.k;
    return a.sign < b.sign;
}
}  // namespace detail

/**
 * Least word of the commutation class: greedily extract the smallest
 * factor that commutes with everything before it. The result is the
 * unique lexicographic normal form, so two words are related by commute
 * moves exactly when their canonical forms coincide.
 */
inline DilogWord canonical_form(DilogWord w, const IntMat& L) {
    DilogWord out;
    out.reserve(w.size());
    while (!w.empty()) {
        std::size_t best = w.size();
        for (std::size_t j = 0; j < w.size(); ++j) {
            bool movable = true;
            for (std::size_t t = 0; t < j && movable; ++t)
                movable = pairing_form(L, w[t].alpha, w[j].alpha) == 0;
            if (movable && (best == w.size() || detail::factor_less(w[j], w[best])))
                best = j;
        }
        out.push_back(std::move(w[best]));
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
}

inline bool words_equivalent_up_to_commutes(const DilogWord& a, const DilogWord& b,
                                            const IntMat& L) {
    return canonical_form(a, L) == canonical_form(b, L);
}

/**
 * Commute-only plan transforming `from` into exactly `to`: for each
 * target slot, some matching factor bubbles left through commuting
 * neighbours. Trying every matching occurrence makes this a decision
 * procedure: a plan exists exactly when the words are related by
 * commute moves.
 */
inline std::optional<std::vector<RewriteMove>> commute_transform(DilogWord from,
                                                                 const DilogWord& to,
                                                                 const IntMat& L) {
    if (from.size() != to.size()) return std::nullopt;
    std::vector<RewriteMove> moves;
    for (std::size_t i = 0; i < to.size(); ++i) {
        // Any later occurrence of the target factor may be the movable
        // one, so each candidate gets a bubble attempt.
        bool placed = false;
        for (std::size_t j = i; j < from.size() && !placed; ++j) {
            if (from[j] != to[i]) continue;
            bool clear = true;
            for (std::size_t t = j; t > i; --t) {
                if (pairing_form(L, from[t - 1].alpha, from[j].alpha) != 0) {
                    clear = false;
                    break;
                }
            }
            if (!clear) continue;
            for (std::size_t t = j; t > i; --t) {
                std::swap(from[t - 1], from[t]);
                moves.push_back({MoveKind::commute_swap, static_cast<int>(t - 1)});
            }
            placed = true;
        }
        if (!placed) return std::nullopt;
    }
    return from == to ? std::optional(std::move(moves)) : std::nullopt;
}

/**
 * Trace file: first line {"n", "Lambda", "words"}, then one line per
 * word {"word": [shorthand...]} with {"move": {"kind", "pos"}} from the
 * second word on. Shorthand carries base 1 and sign +1 factors only.
 */
inline RewriteTrace load_trace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty trace file: " + path);
    Json header = Json::parse(line);
    RewriteTrace tr;
    int n = header.at("n").get<int>();
    tr.Lambda = int_matrix_from_json(header.at("Lambda"));
    std::size_t count = header.at("words").get<std::size_t>();
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Json j = Json::parse(line);
        DilogWord w;
        for (const auto& s : j.at("word")) {
            DilogFactor f;
            f.alpha = parse_shorthand(s.get<std::string>(), n);
            w.push_back(std::move(f));
        }
        if (!tr.words.empty()) {
            const Json& mv = j.at("move");
            tr.moves.push_back({move_kind_from_name(mv.at("kind").get<std::string>()),
                                mv.at("pos").get<int>()});
        }
        tr.words.push_back(std::move(w));
    }
    if (tr.words.size() != count)
        throw std::runtime_error("trace file word count mismatch: " + path);
    return tr;
}

inline void save_trace_file(const std::string& path, const RewriteTrace& tr) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    Json header;
    header["n"] = static_cast<int>(tr.Lambda.size());
    header["Lambda"] = int_matrix_to_json(tr.Lambda);
    header["words"] = tr.words.size();
    out << header.dump() << "\n";
    for (std::size_t t = 0; t < tr.words.size(); ++t) {
        Json j;
        Json word = Json::array();
        for (const DilogFactor& f : tr.words[t]) {
            if (f.k != 1 || f.sign != 1)
                throw std::invalid_argument(
                    "save_trace_file: shorthand requires base 1, sign +1 factors");
            word.push_back(format_shorthand(f.alpha));
        }
        j["word"] = std::move(word);
        if (t > 0)
            j["move"] = Json{{"kind", move_kind_name(tr.moves[t - 1].kind)},
                             {"pos", tr.moves[t - 1].pos}};
        out << j.dump() << "\n";
    }
}

}  // namespace cluster
