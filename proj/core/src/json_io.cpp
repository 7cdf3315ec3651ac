#include "toric/json_io.hpp"

#include <limits>
#include <utility>

#include "json.hpp"
#include "toric/error.hpp"

namespace toric {
namespace {

using nlohmann::json;

json int_out(const Int& n) {
    static const Int lo = Int(std::numeric_limits<long long>::min());
    static const Int hi = Int(std::numeric_limits<long long>::max());
    if (n >= lo && n <= hi) return n.convert_to<long long>();
    return to_string(n);
}

json ivec_out(const IVec& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(int_out(x));
    return out;
}

json qvec_out(const QVec& v) {
    json out = json::array();
    for (const Rat& x : v) out.push_back(to_string(x));
    return out;
}

Int int_in(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return parse_integer(j.get<std::string>());
    fail("ParseError", "expected an integer, got " + j.dump());
}

Rat rat_in(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    fail("ParseError", "expected a rational, got " + j.dump());
}

IVec ivec_in(const json& j) {
    if (!j.is_array()) fail("ParseError", "expected an integer vector, got " + j.dump());
    IVec out;
    for (const json& x : j) out.push_back(int_in(x));
    return out;
}

QVec qvec_in(const json& j) {
    if (!j.is_array()) fail("ParseError", "expected a rational vector, got " + j.dump());
    QVec out;
    for (const json& x : j) out.push_back(rat_in(x));
    return out;
}

json parse_document(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail("ParseError", "malformed JSON document");
    return j;
}

// Rethrows nlohmann type/key errors as ParseError with the library message.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error&) {
        throw;
    } catch (const json::exception& e) {
        fail("ParseError", e.what());
    }
}

}  // namespace

std::string polynomial_to_json(const InvertiblePolynomial& w) {
    json terms = json::array();
    for (size_t i = 0; i < w.exponents.rows(); ++i) {
        terms.push_back({{"coeff", to_string(w.coeffs[i])}, {"exps", ivec_out(w.exponents.row(i))}});
    }
    return json{{"vars", w.vars}, {"terms", std::move(terms)}}.dump();
}

InvertiblePolynomial polynomial_from_json(const std::string& text) {
    return guarded([&] {
        const json j = parse_document(text);
        std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
        std::vector<Rat> coeffs;
        std::vector<IVec> exps;
        for (const json& t : j.at("terms")) {
            coeffs.push_back(t.contains("coeff") ? rat_in(t.at("coeff")) : Rat(1));
            exps.push_back(ivec_in(t.at("exps")));
        }
        IMat e(exps.size(), vars.size());
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i].size() != vars.size()) {
                fail("ParseError", "term " + std::to_string(i) + " has the wrong arity");
            }
            for (size_t k = 0; k < vars.size(); ++k) e(i, k) = exps[i][k];
        }
        return make_polynomial(std::move(vars), std::move(coeffs), std::move(e));
    });
}

std::string group_to_json(const DiagonalGroup& g) {
    json elements = json::array();
    for (const DiagonalElement& e : g.elements) elements.push_back(qvec_out(e.phases));
    return json{{"elements", std::move(elements)}}.dump();
}

std::string superpotential_to_json(const LaurentSuperpotential& w) {
    json terms = json::array();
    for (const LaurentTerm& t : w.terms) {
        json jt{{"coeff", to_string(t.coeff)}, {"exps", ivec_out(t.exponents)}};
        if (!t.params.empty()) {
            json ps = json::object();
            for (const auto& [name, e] : t.params) ps[name] = to_string(e);
            jt["coeff_params"] = std::move(ps);
        }
        terms.push_back(std::move(jt));
    }
    json logs = json::array();
    for (const LogTerm& lt : w.log_terms) {
        if (lt.coeffs.size() == 1 && lt.coeffs.begin()->second == 1) {
            logs.push_back({{"var", lt.var}, {"param", lt.coeffs.begin()->first}});
        } else {
            json cs = json::object();
            for (const auto& [name, c] : lt.coeffs) cs[name] = to_string(c);
            logs.push_back({{"var", lt.var}, {"coeffs", std::move(cs)}});
        }
    }
    json out{{"vars", w.vars}, {"terms", std::move(terms)}};
    if (!logs.empty()) out["log_terms"] = std::move(logs);
    return out.dump();
}

LaurentSuperpotential superpotential_from_json(const std::string& text) {
    return guarded([&] {
        const json j = parse_document(text);
        std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
        std::vector<LaurentTerm> terms;
        for (const json& t : j.at("terms")) {
            LaurentTerm lt;
            if (t.contains("coeff")) lt.coeff = rat_in(t.at("coeff"));
            if (t.contains("coeff_params")) {
                for (const auto& [name, e] : t.at("coeff_params").items()) {
                    lt.params[name] = rat_in(e);
                }
            }
            lt.exponents = ivec_in(t.at("exps"));
            terms.push_back(std::move(lt));
        }
        std::vector<LogTerm> logs;
        if (j.contains("log_terms")) {
            for (const json& l : j.at("log_terms")) {
                LogTerm lt;
                lt.var = l.at("var").get<size_t>();
                if (l.contains("param")) {
                    lt.coeffs[l.at("param").get<std::string>()] = 1;
                } else {
                    for (const auto& [name, c] : l.at("coeffs").items()) {
                        lt.coeffs[name] = rat_in(c);
                    }
                }
                logs.push_back(std::move(lt));
            }
        }
        return make_superpotential(std::move(vars), std::move(terms), std::move(logs));
    });
}

std::string state_space_to_json(const GradedStateSpace& s) {
    json elements = json::array();
    for (const SectorBasisElement& e : s.elements) {
        elements.push_back({{"sector", qvec_out(e.sector.phases)},
                            {"monomial", ivec_out(e.monomial)},
                            {"degB", json::array({to_string(e.bidegree_B.first),
                                                  to_string(e.bidegree_B.second)})},
                            {"degA", json::array({to_string(e.bidegree_A.first),
                                                  to_string(e.bidegree_A.second)})}});
    }
    std::map<std::pair<Rat, Rat>, size_t> pb, pa;
    for (const SectorBasisElement& e : s.elements) {
        ++pb[e.bidegree_B];
        ++pa[e.bidegree_A];
    }
    auto poincare = [](const std::map<std::pair<Rat, Rat>, size_t>& p) {
        json out = json::array();
        for (const auto& [deg, dim] : p) {
            out.push_back({{"deg", json::array({to_string(deg.first), to_string(deg.second)})},
                           {"dim", dim}});
        }
        return out;
    };
    return json{{"elements", std::move(elements)},
                {"total_dim", s.total_dim},
                {"poincare_B", poincare(pb)},
                {"poincare_A", poincare(pa)}}
        .dump();
}

std::string polytope_to_json(const Polytope& p) {
    json vertices = json::array();
    for (const QVec& v : p.vertices) {
        json row = json::array();
        for (const Rat& x : v) {
            if (is_integer(x)) {
                row.push_back(int_out(num(x)));
            } else {
                row.push_back(to_string(x));
            }
        }
        vertices.push_back(std::move(row));
    }
    return json{{"dim", p.dim}, {"vertices", std::move(vertices)}}.dump();
}

Polytope polytope_from_json(const std::string& text) {
    return guarded([&] {
        const json j = parse_document(text);
        std::vector<QVec> vertices;
        for (const json& v : j.at("vertices")) vertices.push_back(qvec_in(v));
        size_t dim = 0;
        if (j.contains("dim")) {
            dim = j.at("dim").get<size_t>();
        } else if (!vertices.empty()) {
            dim = vertices[0].size();
        }
        return make_polytope(dim, vertices);
    });
}

std::string fan_to_json(const Fan& f) {
    json rays = json::array();
    for (const IVec& r : f.rays) rays.push_back(ivec_out(r));
    json cones = json::array();
    for (const Cone& c : f.max_cones) cones.push_back(c.rays);
    return json{{"rank", f.rank}, {"rays", std::move(rays)}, {"cones", std::move(cones)}}.dump();
}

Fan fan_from_json(const std::string& text) {
    return guarded([&] {
        const json j = parse_document(text);
        Fan f;
        for (const json& r : j.at("rays")) f.rays.push_back(ivec_in(r));
        if (j.contains("rank")) {
            f.rank = j.at("rank").get<size_t>();
        } else if (!f.rays.empty()) {
            f.rank = f.rays[0].size();
        }
        for (const json& c : j.at("cones")) {
            Cone cone;
            cone.rays = c.get<std::vector<size_t>>();
            f.max_cones.push_back(std::move(cone));
        }
        return f;
    });
}

}  // namespace toric
