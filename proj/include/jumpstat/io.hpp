#pragma once

// JSON and CSV renderings used by the command-line tool. Every exact rational
// is written as a "p/q" (or "p") string, never as a float.

#include "jumpstat/genfunc.hpp"
#include "jumpstat/guess.hpp"
#include "jumpstat/moments.hpp"
#include "jumpstat/poly2.hpp"
#include "jumpstat/rational_function.hpp"
#include "jumpstat/series.hpp"
#include "jumpstat/tree.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace jumpstat {

using Json = nlohmann::ordered_json;

inline Json to_json(const TreeStats& s) {
    return Json{{"v", s.v}, {"j", s.j}, {"d", s.d}, {"jd", s.jd}};
}

inline Json to_json(const Poly2& p) {
    Json terms = Json::array();
    for (const auto& term : p.terms()) {
        terms.push_back(Json{{"et", term.et},
                             {"eq", term.eq},
                             {"num", term.coeff.get_num().get_str()},
                             {"den", term.coeff.get_den().get_str()}});
    }
    return terms;
}

inline Poly2 poly2_from_json(const Json& terms) {
    std::vector<Poly2::Term> out;
    for (const auto& term : terms) {
        Rational c(Integer(term.at("num").get<std::string>()),
                   Integer(term.at("den").get<std::string>()));
        c.canonicalize();
        out.push_back(Poly2::Term{term.at("et").get<unsigned>(), term.at("eq").get<unsigned>(), c});
    }
    return Poly2::from_terms(std::move(out));
}

/// [{n, terms: [{et, eq, num, den}]}] for n = 0..order.
inline Json to_json(const Series& s) {
    Json out = Json::array();
    for (unsigned n = 0; n <= s.order(); ++n) out.push_back(Json{{"n", n}, {"terms", to_json(s[n])}});
    return out;
}

inline Series series_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ContractViolation("series JSON must be a non-empty array");
    std::vector<Poly2> coeffs(j.size());
    for (const auto& entry : j) {
        const auto n = entry.at("n").get<std::size_t>();
        if (n >= coeffs.size()) throw ContractViolation("series JSON index out of range");
        coeffs[n] = poly2_from_json(entry.at("terms"));
    }
    return Series(std::move(coeffs));
}

inline Json to_json(const Verdict& v) {
    Json out{{"theorem", v.theorem}, {"order", v.order}, {"pass", v.pass}};
    if (v.first_failure) {
        out["first_failure"] = Json{{"n", v.first_failure->n},
                                    {"residual_terms", to_json(v.first_failure->residual)}};
    } else {
        out["first_failure"] = nullptr;
    }
    return out;
}

inline Json to_json(const PolyN& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    return coeffs;
}

/// {numerator: [c0, c1, ...], denominator: [...], text}, coefficients low to high.
inline Json to_json(const RationalFunctionN& f) {
    return Json{{"numerator", to_json(f.numerator())},
                {"denominator", to_json(f.denominator())},
                {"text", to_string(f)}};
}

inline RationalFunctionN rational_function_from_json(const Json& j) {
    const auto read = [](const Json& coeffs) {
        std::vector<Integer> out;
        for (const auto& c : coeffs) out.emplace_back(c.get<std::string>());
        return PolyN(std::move(out));
    };
    return RationalFunctionN(read(j.at("numerator")), read(j.at("denominator")));
}

inline Json to_json(const Limit& limit) {
    switch (limit.kind) {
        case Limit::Kind::zero:
            return Json{{"kind", "zero"}, {"value", "0"}};
        case Limit::Kind::divergent:
            return Json{{"kind", "divergent"}, {"value", nullptr}};
        case Limit::Kind::finite:
            break;
    }
    return Json{{"kind", "finite"}, {"value", to_string(limit.value)}};
}

inline Json to_json(const MomentTable& table) {
    Json rows = Json::array();
    for (const auto& row : table.rows) {
        Json raw = Json::array();
        Json central = Json::array();
        Json scaled = Json::array();
        for (unsigned r = 1; r <= table.max_order; ++r) raw.push_back(to_string(row.raw[r]));
        for (unsigned r = 2; r <= table.max_order; ++r) central.push_back(to_string(row.central[r]));
        for (unsigned r = 2; r <= table.max_order; ++r) {
            if (r % 2 == 0) {
                const auto v = row.scaled_even(r);
                scaled.push_back(Json{{"order", r},
                                      {"value", v ? Json(to_string(*v)) : Json(nullptr)}});
            } else {
                const auto v = row.scaled_odd(r);
                scaled.push_back(Json{{"order", r},
                                      {"sign", v ? Json(v->sign) : Json(nullptr)},
                                      {"square", v ? Json(to_string(v->square)) : Json(nullptr)}});
            }
        }
        rows.push_back(Json{{"n", row.n},
                            {"b_n", to_string(row.count)},
                            {"raw", std::move(raw)},
                            {"central", std::move(central)},
                            {"scaled_defined", row.scaled_defined()},
                            {"scaled", std::move(scaled)}});
    }
    return Json{{"stat", to_string(table.stat)}, {"R", table.max_order}, {"rows", std::move(rows)}};
}

/*
 * Columns: n, b_n, m_1..m_R, mu_2..mu_R, then per scaled order r >= 2
 * "s_r" for even r and "s_r_sq", "s_r_sign" for odd r. Undefined scaled
 * moments are written as NA.
 */
inline std::string to_csv(const MomentTable& table) {
    std::ostringstream out;
    out << "n,b_n";
    for (unsigned r = 1; r <= table.max_order; ++r) out << ",m_" << r;
    for (unsigned r = 2; r <= table.max_order; ++r) out << ",mu_" << r;
    for (unsigned r = 2; r <= table.max_order; ++r) {
        if (r % 2 == 0) {
            out << ",s_" << r;
        } else {
            out << ",s_" << r << "_sq,s_" << r << "_sign";
        }
    }
    out << '\n';
    for (const auto& row : table.rows) {
        out << row.n << ',' << row.count.get_str();
        for (unsigned r = 1; r <= table.max_order; ++r) out << ',' << to_string(row.raw[r]);
        for (unsigned r = 2; r <= table.max_order; ++r) out << ',' << to_string(row.central[r]);
        for (unsigned r = 2; r <= table.max_order; ++r) {
            if (r % 2 == 0) {
                const auto v = row.scaled_even(r);
                out << ',' << (v ? to_string(*v) : "NA");
            } else {
                const auto v = row.scaled_odd(r);
                out << ',' << (v ? to_string(v->square) : "NA") << ','
                    << (v ? std::to_string(v->sign) : "NA");
            }
        }
        out << '\n';
    }
    return out.str();
}

inline Json to_json(const ClosedFormCheck& c) {
    return Json{{"theorem", c.theorem},
                {"pass", c.pass},
                {"n_min", c.n_min},
                {"n_max", c.n_max},
                {"first_mismatch", c.first_mismatch ? Json(*c.first_mismatch) : Json(nullptr)}};
}

inline Json to_json(const GuessResult& g) {
    Json out{{"found", g.formula.has_value()},
             {"attempted", Json{{"max_total_degree", g.max_total_degree},
                                {"attempts", g.attempts},
                                {"fit_points", g.fit_points},
                                {"holdout_points", g.holdout_points}}}};
    if (g.formula) {
        out["formula"] = to_json(*g.formula);
        out["degrees"] = Json{{"numerator", g.formula->numerator().degree()},
                              {"denominator", g.formula->denominator().degree()}};
        out["limit"] = to_json(limit_at_infinity(*g.formula));
    } else {
        out["formula"] = nullptr;
    }
    return out;
}

}  // namespace jumpstat
