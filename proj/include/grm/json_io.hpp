#pragma once

// JSON and CSV serialization for the command line tool and report exchange.
// Polynomials travel as {"n", "q", "terms": [{"e": [...], "c": k}]} with terms
// in graded-lex order; field elements appear as decimal integer codes and a
// field itself as {"p", "m", "modulus": [digits]} with the modulus digits in
// little-endian order.

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

#include "grm/affine.hpp"
#include "grm/gf.hpp"
#include "grm/oracle.hpp"
#include "grm/poly.hpp"
#include "grm/projective.hpp"

namespace grm {

using ordered_json = nlohmann::ordered_json;

inline ordered_json field_to_json(const Field& f) {
    ordered_json j;
    j["p"] = f.p();
    j["m"] = f.m();
    j["modulus"] = f.spec().modulus;
    return j;
}

inline ordered_json poly_to_json(const ReducedPoly& f) {
    ordered_json j;
    j["n"] = f.nvars();
    j["q"] = f.field().q();
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : f.terms()) {
        ordered_json t;
        t["e"] = e;
        t["c"] = c;
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

namespace detail {

inline void expect_poly(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("malformed polynomial JSON: " + what);
}

inline std::int64_t poly_int(const ordered_json& j, const char* key,
                             std::int64_t lo, std::int64_t hi) {
    expect_poly(j.contains(key), std::string("missing \"") + key + "\"");
    const auto& v = j.at(key);
    expect_poly(v.is_number_integer(), std::string("\"") + key + "\" must be an integer");
    auto x = v.get<std::int64_t>();
    expect_poly(x >= lo && x <= hi,
                std::string("\"") + key + "\" = " + std::to_string(x) + " out of range [" +
                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return x;
}

}  // namespace detail

inline ReducedPoly poly_from_json(const ordered_json& j) {
    detail::expect_poly(j.is_object(), "top level must be an object");
    auto n = static_cast<std::uint32_t>(detail::poly_int(j, "n", 1, 64));
    auto q = static_cast<std::uint32_t>(detail::poly_int(j, "q", 2, 65536));
    Field field = [&] {
        try {
            return Field::from_order(q);
        } catch (const std::invalid_argument&) {
            detail::expect_poly(false, "\"q\" = " + std::to_string(q) + " is not a prime power");
            throw;
        }
    }();
    detail::expect_poly(j.contains("terms") && j.at("terms").is_array(),
                        "\"terms\" must be an array");
    ReducedPoly f(field, n);
    for (const auto& t : j.at("terms")) {
        detail::expect_poly(t.is_object(), "each term must be an object");
        detail::expect_poly(t.contains("e") && t.at("e").is_array(),
                            "term \"e\" must be an array");
        const auto& ev = t.at("e");
        detail::expect_poly(ev.size() == n, "term \"e\" must list one exponent per variable");
        Monomial e(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            detail::expect_poly(ev[i].is_number_integer(), "exponents must be integers");
            auto x = ev[i].get<std::int64_t>();
            detail::expect_poly(x >= 0 && x <= 65535, "exponent " + std::to_string(x) +
                                                          " out of range [0, 65535]");
            e[i] = static_cast<std::uint16_t>(x);
        }
        auto c = detail::poly_int(t, "c", 0, static_cast<std::int64_t>(q) - 1);
        f.add_term(e, static_cast<felem>(c));
    }
    return f;
}

inline ordered_json params_to_json(const GrmParams& p) {
    ordered_json j;
    j["length"] = p.length;
    j["dimension"] = p.dimension;
    j["w1"] = p.min_distance;
    j["w2"] = p.second_weight;
    return j;
}

inline ordered_json params_to_json(const PgrmParams& p,
                                   std::optional<std::int64_t> w2_oracle = std::nullopt) {
    ordered_json j;
    j["length"] = p.length;
    j["dimension"] = p.dimension;
    j["w1"] = p.min_distance;
    if (p.second_weight_lower) j["w2_lower"] = *p.second_weight_lower;
    if (p.second_weight_upper) j["w2_upper"] = *p.second_weight_upper;
    if (w2_oracle) j["w2_oracle"] = *w2_oracle;
    return j;
}

inline ordered_json gridpoint_to_json(const GridPoint& gp) {
    ordered_json j;
    j["variant"] = to_string(gp.variant);
    j["q"] = gp.q;
    j["n"] = gp.n;
    j["d"] = gp.d;
    return j;
}

inline ordered_json spectrum_to_json(const GridPoint& gp, const WeightDistribution& w) {
    ordered_json j = gridpoint_to_json(gp);
    ordered_json rows = ordered_json::array();
    for (const auto& [weight, count] : w.counts) {
        ordered_json r;
        r["weight"] = weight;
        r["count"] = count;
        rows.push_back(std::move(r));
    }
    j["spectrum"] = std::move(rows);
    return j;
}

inline std::string spectrum_to_csv(const WeightDistribution& w) {
    std::ostringstream out;
    out << "weight,count\n";
    for (const auto& [weight, count] : w.counts) out << weight << ',' << count << '\n';
    return out.str();
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += '"';
    return out;
}

}  // namespace detail

inline ordered_json report_to_json(const VerificationReport& rep) {
    ordered_json j;
    j["suite"] = rep.suite;
    ordered_json grid = ordered_json::array();
    for (const auto& gp : rep.grid) grid.push_back(gridpoint_to_json(gp));
    j["grid"] = std::move(grid);
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks) {
        ordered_json row;
        row["name"] = c.name;
        row["status"] = to_string(c.status);
        if (c.status == CheckStatus::flagged) row["flag"] = c.flag;
        row["details"] = c.details;
        checks.push_back(std::move(row));
    }
    j["checks"] = std::move(checks);
    j["ok"] = rep.ok();
    return j;
}

inline std::string report_to_csv(const VerificationReport& rep) {
    std::ostringstream out;
    out << "name,status,flag,details\n";
    for (const auto& c : rep.checks)
        out << detail::csv_field(c.name) << ',' << to_string(c.status) << ','
            << detail::csv_field(c.flag) << ',' << detail::csv_field(c.details) << '\n';
    return out.str();
}

}  // namespace grm
