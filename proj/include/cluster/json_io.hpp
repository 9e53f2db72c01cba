#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cluster/seed.hpp"
#include "cluster/word.hpp"

namespace cluster {

using Json = nlohmann::json;

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

inline IntMat int_matrix_from_json(const Json& j) {
    IntMat m;
    for (const auto& row : j) m.push_back(row.get<std::vector<Int>>());
    return m;
}

inline Json int_matrix_to_json(const IntMat& m) {
    Json j = Json::array();
    for (const auto& row : m) j.push_back(row);
    return j;
}

inline DilogFactor factor_from_json(const Json& j) {
    DilogFactor f;
    f.alpha = j.at("alpha").get<std::vector<Int>>();
    f.k = j.at("k").get<int>();
    f.sign = j.at("sign").get<int>();
    if (f.sign != 1 && f.sign != -1) throw std::runtime_error("factor sign must be +1 or -1");
    if (f.k < 1) throw std::runtime_error("factor base exponent must be positive");
    return f;
}

inline Json factor_to_json(const DilogFactor& f) {
    return Json{{"alpha", f.alpha}, {"k", f.k}, {"sign", f.sign}};
}

inline DilogWord word_from_json(const Json& j) {
    DilogWord w;
    for (const auto& e : j) w.push_back(factor_from_json(e));
    return w;
}

inline Json word_to_json(const DilogWord& w) {
    Json j = Json::array();
    for (const auto& f : w) j.push_back(factor_to_json(f));
    return j;
}

/// An lhs = rhs pair of dilogarithm words over one pairing, with the
/// seed data it came from.
struct IdentityFile {
    int n = 0;
    IntMat Lambda;
    DilogWord lhs, rhs;
    IntMat B;
    std::vector<Int> d;
};

inline IdentityFile load_identity_file(const std::string& path) {
    Json j = load_json_file(path);
    IdentityFile f;
    f.n = j.at("n").get<int>();
    f.Lambda = int_matrix_from_json(j.at("Lambda"));
    f.lhs = word_from_json(j.at("lhs"));
    f.rhs = word_from_json(j.at("rhs"));
    f.B = int_matrix_from_json(j.at("B"));
    f.d = j.at("d").get<std::vector<Int>>();
    return f;
}

/// Seed JSON: coefficients as decimal numerator and denominator strings
/// so arbitrary precision round-trips.
inline Json seed_to_json(const SeedState& s) {
    Json j;
    j["n"] = s.B.n;
    j["B"] = int_matrix_to_json(s.B.b);
    Json num = Json::array(), den = Json::array();
    for (const auto& y : s.y) {
        num.push_back(y.num().str());
        den.push_back(y.den().str());
    }
    j["y_num"] = std::move(num);
    j["y_den"] = std::move(den);
    return j;
}

inline SeedState seed_from_json(const Json& j) {
    ExchangeMatrix B(int_matrix_from_json(j.at("B")));
    std::vector<Rat> y;
    const Json& num = j.at("y_num");
    const Json& den = j.at("y_den");
    if (num.size() != den.size() || static_cast<int>(num.size()) != B.n)
        throw std::runtime_error("seed JSON: coefficient count mismatch");
    for (std::size_t i = 0; i < num.size(); ++i)
        y.push_back(Rat::from_strings(num[i].get<std::string>(), den[i].get<std::string>()));
    return make_seed(B, y);
}

}  // namespace cluster
