#include "cli_lib.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "toric/error.hpp"
#include "toric/fan.hpp"
#include "toric/group.hpp"
#include "toric/hori_vafa.hpp"
#include "toric/json_io.hpp"
#include "toric/lg.hpp"
#include "toric/linalg.hpp"
#include "toric/polytope.hpp"
#include "toric/state_space.hpp"

namespace toric::cli {
namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("ParseError", "cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

IVec ivec_arg(const std::string& s) {
    IVec out;
    for (const std::string& p : split(s, ',')) out.push_back(parse_integer(p));
    return out;
}

QVec qvec_arg(const std::string& s) {
    QVec out;
    for (const std::string& p : split(s, ',')) out.push_back(parse_rational(p));
    return out;
}

IMat imat_arg(const std::string& s) {
    std::vector<IVec> rows;
    for (const std::string& row : split(s, ';')) rows.push_back(ivec_arg(row));
    for (const IVec& r : rows) {
        if (r.size() != rows[0].size()) fail("ParseError", "ragged matrix literal '" + s + "'");
    }
    return IMat(rows);
}

std::vector<size_t> indices_arg(const std::string& s) {
    std::vector<size_t> out;
    for (const std::string& p : split(s, ',')) {
        Int n = parse_integer(p);
        if (n < 0) fail("ParseError", "negative index in '" + s + "'");
        out.push_back(n.convert_to<size_t>());
    }
    return out;
}

std::map<std::string, Rat> assignments_arg(const std::string& s) {
    std::map<std::string, Rat> out;
    if (s.empty()) return out;
    for (const std::string& p : split(s, ',')) {
        auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0) {
            fail("ParseError", "expected name=rational, got '" + p + "'");
        }
        out[p.substr(0, eq)] = parse_rational(p.substr(eq + 1));
    }
    return out;
}

std::vector<std::string> names_arg(const std::string& s, size_t n, const std::string& stem) {
    if (s.empty()) {
        std::vector<std::string> out;
        for (size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
        return out;
    }
    std::vector<std::string> out = split(s, ',');
    if (out.size() != n) {
        fail("ParseError", "expected " + std::to_string(n) + " names, got '" + s + "'");
    }
    return out;
}

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

json imat_out(const IMat& m) {
    json out = json::array();
    for (size_t i = 0; i < m.rows(); ++i) out.push_back(ivec_out(m.row(i)));
    return out;
}

json element_out(const SectorBasisElement& e) {
    return {{"sector", qvec_out(e.sector.phases)},
            {"monomial", ivec_out(e.monomial)},
            {"degB", json::array({to_string(e.bidegree_B.first), to_string(e.bidegree_B.second)})},
            {"degA", json::array({to_string(e.bidegree_A.first), to_string(e.bidegree_A.second)})}};
}

// Option storage shared by all subcommands; each leaf registers only the
// flags it reads.
struct Ctx {
    std::string file;
    std::string coarse;
    std::string expr;
    std::string out_path;
    std::string group;
    std::string params;
    std::string convention = "form-pullback";
    std::string weights;
    std::string divisor;
    std::string gens;
    std::string charges;
    std::string degrees;
    std::string subset;
    std::string lambdas;
    std::string names;
    std::string param = "t";
    size_t cone = 0;
    size_t nvars = 0;
    long degree = 0;
};

InvertiblePolynomial poly_in(const Ctx& c) {
    if (!c.expr.empty()) return parse_polynomial(c.expr);
    if (!c.file.empty()) return polynomial_from_json(read_file(c.file));
    fail("ParseError", "need --expr or --file");
}

Fan fan_in(const Ctx& c) {
    if (c.file.empty()) fail("ParseError", "need --file");
    return fan_from_json(read_file(c.file));
}

Polytope polytope_in(const Ctx& c) {
    if (c.file.empty()) fail("ParseError", "need --file");
    return polytope_from_json(read_file(c.file));
}

IVec weights_in(const Ctx& c) {
    if (c.weights.empty()) fail("ParseError", "need --weights");
    return ivec_arg(c.weights);
}

IMat charges_in(const Ctx& c) {
    if (!c.charges.empty()) return imat_arg(c.charges);
    if (!c.file.empty()) {
        const json j = json::parse(read_file(c.file), nullptr, false);
        if (j.is_discarded() || !j.contains("charges")) {
            fail("ParseError", "need --charges or a file with a \"charges\" matrix");
        }
        std::vector<IVec> rows;
        for (const json& r : j.at("charges")) {
            IVec row;
            for (const json& x : r) {
                row.push_back(x.is_string() ? parse_integer(x.get<std::string>())
                                            : Int(x.get<long long>()));
            }
            rows.push_back(std::move(row));
        }
        return IMat(rows);
    }
    fail("ParseError", "need --charges or --file");
}

DiagonalGroup group_in(const InvertiblePolynomial& w, const std::string& text) {
    DiagonalGroup gmax = max_symmetry_group(w);
    if (text.empty() || text == "trivial") return subgroup_generated({}, gmax);
    if (text == "max") return gmax;
    if (text == "J") return subgroup_generated({element_J(w)}, gmax);
    if (text == "sl") return sl_subgroup(gmax);
    std::vector<DiagonalElement> gens;
    for (const std::string& row : split(text, ';')) gens.push_back({qvec_arg(row)});
    return subgroup_generated(gens, gmax);
}

InvarianceConvention convention_in(const std::string& s) {
    if (s == "form-pullback") return InvarianceConvention::FormPullback;
    if (s == "det-twist") return InvarianceConvention::DeterminantTwist;
    fail("ParseError", "unknown convention '" + s + "' (form-pullback or det-twist)");
}

json group_report(const DiagonalGroup& g) {
    json elements = json::array();
    for (const DiagonalElement& e : g.elements) elements.push_back(qvec_out(e.phases));
    return {{"elements", std::move(elements)}, {"order", g.elements.size()}};
}

json superpotential_report(const LaurentSuperpotential& w) {
    json out = json::parse(superpotential_to_json(w));
    out["text"] = superpotential_to_string(w);
    return out;
}

json run_fan_analyze(const Ctx& c) {
    const Fan f = fan_in(c);
    const FanValidation v = validate_fan(f);
    json out{{"valid", v.ok}, {"problems", v.problems}};
    if (v.ok) {
        const FanClassification k = classify_fan(f);
        out["simplicial"] = k.simplicial;
        out["smooth"] = k.smooth;
        out["complete"] = k.complete;
    }
    return out;
}

json run_fan_charge(const Ctx& c) {
    const IMat q = charge_matrix(fan_in(c));
    json columns = json::array();
    for (size_t j = 0; j < q.cols(); ++j) columns.push_back(ivec_out(q.col(j)));
    return {{"rays", q.rows()}, {"relations", q.cols()}, {"columns", std::move(columns)}};
}

json run_fan_classgroup(const Ctx& c) {
    const ClassGroupReport r = divisor_class_group(fan_in(c));
    json torsion = json::array();
    for (const Int& d : r.group.torsion) torsion.push_back(int_out(d));
    return {{"free_rank", r.group.free_rank},
            {"torsion", std::move(torsion)},
            {"rays_span", r.rays_span}};
}

json run_fan_resolve2d(const Ctx& c) {
    const Fan f = fan_in(c);
    json rays = json::array();
    for (const IVec& r : resolve_cone_2d(f, c.cone)) rays.push_back(ivec_out(r));
    return {{"cone", c.cone}, {"added_rays", std::move(rays)}};
}

json run_fan_refine(const Ctx& c) {
    if (c.gens.empty()) fail("ParseError", "need --gens");
    std::vector<QVec> gens;
    for (const std::string& row : split(c.gens, ';')) gens.push_back(qvec_arg(row));
    return json::parse(fan_to_json(refine_lattice(fan_in(c), gens)));
}

json run_fan_subdivides(const Ctx& c) {
    if (c.coarse.empty()) fail("ParseError", "need --coarse");
    const Fan fine = fan_in(c);
    const Fan coarse = fan_from_json(read_file(c.coarse));
    return {{"subdivides", is_subdivision(fine, coarse)}};
}

json run_polytope_facets(const Ctx& c) {
    json out = json::array();
    for (const FacetInequality& f : facets(polytope_in(c))) {
        out.push_back({{"normal", ivec_out(f.normal)}, {"offset", to_string(f.offset)}});
    }
    return {{"facets", std::move(out)}};
}

json run_polytope_points(const Ctx& c) {
    const std::vector<IVec> pts = lattice_points(polytope_in(c));
    json out = json::array();
    for (const IVec& p : pts) out.push_back(ivec_out(p));
    return {{"count", pts.size()}, {"points", std::move(out)}};
}

json run_polytope_dual(const Ctx& c) {
    return json::parse(polytope_to_json(polar_dual(polytope_in(c))));
}

json run_polytope_reflexive(const Ctx& c) {
    const Polytope p = polytope_in(c);
    return {{"reflexive", is_reflexive(p)},
            {"integral", is_integral(p)},
            {"full_dimensional", is_full_dimensional(p)}};
}

json run_polytope_normalfan(const Ctx& c) {
    return json::parse(fan_to_json(normal_fan(polytope_in(c))));
}

json run_polytope_divisor(const Ctx& c) {
    if (c.divisor.empty()) fail("ParseError", "need --divisor");
    return json::parse(polytope_to_json(divisor_polytope(fan_in(c), ivec_arg(c.divisor))));
}

json run_polytope_batyrev(const Ctx& c) {
    const BatyrevData b = batyrev_mirror_data(polytope_in(c));
    json dual_rays = json::array(), points = json::array(), monomials = json::array();
    for (const IVec& r : b.dual_rays) dual_rays.push_back(ivec_out(r));
    for (const IVec& p : b.points) points.push_back(ivec_out(p));
    for (const IVec& m : b.monomials) monomials.push_back(ivec_out(m));
    return {{"dual", json::parse(polytope_to_json(b.dual))},
            {"dual_rays", std::move(dual_rays)},
            {"points", std::move(points)},
            {"monomials", std::move(monomials)}};
}

json run_wps_gorenstein(const Ctx& c) {
    const IVec w = weights_in(c);
    const WpsGorensteinReport r = wps_gorenstein({w.begin(), w.end()});
    json weights = json::array();
    for (const Int& x : r.weights) weights.push_back(int_out(x));
    return {{"gorenstein", r.gorenstein}, {"weights", std::move(weights)},
            {"total", int_out(r.total)}};
}

json run_wps_chenruan(const Ctx& c) {
    const WpsChenRuanData d = chen_ruan_wps_dimension(weights_in(c));
    json sectors = json::array();
    for (const WpsSector& s : d.sectors) {
        sectors.push_back({{"phase", to_string(s.phase)}, {"weights", ivec_out(s.weights)}});
    }
    return {{"total", int_out(d.total_dim)}, {"sectors", std::move(sectors)}};
}

json run_lg_charges(const Ctx& c) {
    const ChargeData d = charges(poly_in(c));
    return {{"q", qvec_out(d.q)}, {"weights", ivec_out(d.weights)}, {"d", int_out(d.degree)}};
}

json run_lg_decompose(const Ctx& c) {
    const InvertiblePolynomial w = poly_in(c);
    const AtomicDecomposition d = ks_decompose(w);
    json pieces = json::array();
    for (const AtomicPiece& p : d.pieces) {
        std::string type = p.type == AtomicPiece::Type::Fermat ? "fermat"
                           : p.type == AtomicPiece::Type::Loop ? "loop"
                                                               : "chain";
        json vars = json::array();
        for (size_t i : p.variable_indices) vars.push_back(w.vars[i]);
        json exps = json::array();
        for (const Int& e : p.exponents) exps.push_back(int_out(e));
        pieces.push_back(
            {{"type", type}, {"variables", std::move(vars)}, {"exponents", std::move(exps)}});
    }
    return {{"pieces", std::move(pieces)}};
}

json run_lg_milnor(const Ctx& c) {
    const InvertiblePolynomial w = poly_in(c);
    return {{"milnor", int_out(milnor_number(w))},
            {"central_charge", to_string(central_charge(w))},
            {"calabi_yau", is_calabi_yau(w)}};
}

json run_lg_jacobian(const Ctx& c) {
    const JacobianBasis b = jacobian_basis(poly_in(c));
    json monomials = json::array();
    for (const IVec& m : b.monomials) monomials.push_back(ivec_out(m));
    json degrees = json::array();
    for (const Rat& d : b.degrees) degrees.push_back(to_string(d));
    return {{"dim", b.monomials.size()}, {"monomials", std::move(monomials)},
            {"degrees", std::move(degrees)}};
}

json run_lg_transpose(const Ctx& c) {
    const InvertiblePolynomial t = transpose(poly_in(c));
    json out = json::parse(polynomial_to_json(t));
    out["text"] = polynomial_to_string(t);
    return out;
}

json run_group_max(const Ctx& c) { return group_report(max_symmetry_group(poly_in(c))); }

json run_group_j(const Ctx& c) {
    const InvertiblePolynomial w = poly_in(c);
    const DiagonalElement j = element_J(w);
    const DiagonalGroup g = subgroup_generated({j}, max_symmetry_group(w));
    return {{"element", qvec_out(j.phases)}, {"order", g.elements.size()}};
}

json run_group_sl(const Ctx& c) { return group_report(sl_subgroup(max_symmetry_group(poly_in(c)))); }

json run_group_generate(const Ctx& c) {
    const InvertiblePolynomial w = poly_in(c);
    return group_report(group_in(w, c.group));
}

json run_group_transpose(const Ctx& c) {
    const InvertiblePolynomial w = poly_in(c);
    const DiagonalGroup gt = transpose_group(group_in(w, c.group), w);
    json out = group_report(gt);
    out["acts_on"] = polynomial_to_string(transpose(w));
    return out;
}

json run_group_cy(const Ctx& c) {
    const InvertiblePolynomial w = poly_in(c);
    return {{"cy", check_cy_condition(group_in(w, c.group), w)}};
}

json run_statespace(const Ctx& c, bool a_model) {
    const InvertiblePolynomial w = poly_in(c);
    const DiagonalGroup g = group_in(w, c.group);
    const InvarianceConvention conv = convention_in(c.convention);
    const GradedStateSpace s =
        a_model ? a_model_state_space(w, g, conv) : b_model_state_space(w, g, conv);
    return json::parse(state_space_to_json(s));
}

json run_statespace_bhk(const Ctx& c) {
    const InvertiblePolynomial w = poly_in(c);
    const NondegeneracyReport nd = nondegeneracy_check(w);
    if (!nd.ok) {
        std::string detail;
        for (const std::string& r : nd.reasons) {
            if (!detail.empty()) detail += "; ";
            detail += r;
        }
        fail("NotNondegenerate", detail);
    }
    const DiagonalGroup g = group_in(w, c.group);
    const std::vector<MirrorMapEntry> table = bhk_mirror_map(w, g, convention_in(c.convention));
    json rows = json::array();
    for (const MirrorMapEntry& e : table) {
        rows.push_back({{"source", element_out(e.source)}, {"image", element_out(e.image)}});
    }
    return {{"count", table.size()}, {"rows", std::move(rows)}};
}

json run_statespace_pairing(const Ctx& c) {
    const InvertiblePolynomial w = poly_in(c);
    const DiagonalGroup g = group_in(w, c.group);
    const PairingDegreeReport r =
        pairing_degree_report(b_model_state_space(w, g, convention_in(c.convention)));
    return {{"ok", r.ok}, {"pairs_checked", r.pairs_checked}, {"violations", r.violations}};
}

json run_hv_mirror(const Ctx& c) {
    const IMat q = charges_in(c);
    const std::vector<std::string> names = names_arg(c.names, q.cols(), "q");
    const ToricMirror m = hv_mirror_toric(q, names);
    const LaurentSuperpotential solved = solve_constraints(m.system, m.w);
    json constraints = json::array();
    for (const MirrorConstraint& k : m.system.constraints) {
        constraints.push_back({{"exponents", ivec_out(k.exponents)}, {"param", k.param}});
    }
    return {{"constraints", std::move(constraints)},
            {"w", superpotential_report(m.w)},
            {"solved", superpotential_report(solved)}};
}

json run_hv_equivariant(const Ctx& c) {
    const IMat q = charges_in(c);
    const std::vector<std::string> names = names_arg(c.names, q.cols(), "q");
    const std::vector<std::string> lambdas = names_arg(c.lambdas, q.rows(), "l");
    std::vector<size_t> subset;
    if (c.subset.empty()) {
        for (size_t i = 0; i < q.rows(); ++i) subset.push_back(i);
    } else {
        subset = indices_arg(c.subset);
    }
    return superpotential_report(equivariant_hv_mirror(q, names, lambdas, subset));
}

json run_hv_hypersurface(const Ctx& c) {
    const InvertiblePolynomial a = poly_in(c);
    if (!c.weights.empty()) {
        if (c.degree <= 0) fail("ParseError", "need a positive --degree");
        const std::vector<std::string> names = names_arg(c.names, 1, "t");
        return superpotential_report(
            pre_hv_mirror_hypersurface(a, weights_in(c), Int(c.degree), names[0]));
    }
    const IMat q = charges_in(c);
    if (c.degrees.empty()) fail("ParseError", "need --degrees with --charges");
    const std::vector<std::string> names = names_arg(c.names, q.cols(), "t");
    return superpotential_report(pre_hv_mirror_hypersurface(a, q, ivec_arg(c.degrees), names));
}

json run_hv_ci(const Ctx& c) {
    if (c.file.empty()) fail("ParseError", "need --file");
    const json j = json::parse(read_file(c.file), nullptr, false);
    if (j.is_discarded()) fail("ParseError", "malformed JSON document");
    try {
        auto matrix_in = [](const json& rows) {
            std::vector<IVec> out;
            for (const json& r : rows) {
                IVec row;
                for (const json& x : r) {
                    row.push_back(x.is_string() ? parse_integer(x.get<std::string>())
                                                : Int(x.get<long long>()));
                }
                out.push_back(std::move(row));
            }
            return IMat(out);
        };
        std::vector<IMat> systems;
        for (const json& s : j.at("systems")) systems.push_back(matrix_in(s));
        const IMat q = matrix_in(j.at("charges"));
        const IMat degrees = matrix_in(j.at("degrees"));
        std::vector<std::string> params;
        if (j.contains("params")) {
            params = j.at("params").get<std::vector<std::string>>();
        } else {
            params = names_arg("", systems.size(), "t");
        }
        return superpotential_report(pre_hv_mirror_complete_intersection(systems, q, degrees, params));
    } catch (const Error&) {
        throw;
    } catch (const json::exception& e) {
        fail("ParseError", e.what());
    }
}

json run_hv_count(const Ctx& c) {
    if (c.file.empty()) fail("ParseError", "need --file");
    const LaurentSuperpotential w = superpotential_from_json(read_file(c.file));
    const CriticalCountResult r = critical_count(w, assignments_arg(c.params));
    return {{"count", int_out(r.count)}, {"degenerate", r.degenerate}};
}

json run_hv_phases(const Ctx& c) {
    if (c.charges.empty()) fail("ParseError", "need --charges");
    const GlsmPhases p = glsm_rank1_phases(ivec_arg(c.charges));
    json weights = json::array();
    for (const Int& x : p.weights) weights.push_back(int_out(x));
    return {{"weights", std::move(weights)},
            {"degree", int_out(p.degree)},
            {"positive", p.positive_phase},
            {"negative", p.negative_phase},
            {"j_phases", qvec_out(p.negative_j_phases)}};
}

json run_hv_symmetry(const Ctx& c) {
    if (c.file.empty()) fail("ParseError", "need --file");
    const LaurentSuperpotential w = superpotential_from_json(read_file(c.file));
    const SuperpotentialSymmetry s = superpotential_symmetry_group(w);
    return {{"full", group_report(s.full)}, {"sl", group_report(s.sl)}};
}

json run_hv_batyrev_cy(const Ctx& c) {
    if (c.nvars == 0) fail("ParseError", "need --nvars");
    const Int degree = c.degree > 0 ? Int(c.degree) : Int(c.nvars);
    const BatyrevCyCheck b = batyrev_consistency_cy(c.nvars, degree, c.param);
    json hv = json::array(), batyrev = json::array();
    for (const IVec& m : b.hv_monomials) hv.push_back(ivec_out(m));
    for (const IVec& m : b.batyrev_monomials) batyrev.push_back(ivec_out(m));
    return {{"coincide", b.coincide},
            {"w", superpotential_report(b.w)},
            {"hv_monomials", std::move(hv)},
            {"batyrev_monomials", std::move(batyrev)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for toric geometry and mirror constructions"};
    app.require_subcommand(1);
    Ctx c;
    json result;
    bool have_result = false;
    auto handler = [&](json (*f)(const Ctx&)) {
        return [&, f]() {
            result = f(c);
            have_result = true;
        };
    };

    auto add_file = [&](CLI::App* s) { s->add_option("--file", c.file, "input JSON file"); };
    auto add_expr = [&](CLI::App* s) {
        s->add_option("--expr", c.expr, "inline polynomial text");
        s->add_option("--file", c.file, "polynomial JSON file");
    };
    auto add_out = [&](CLI::App* s) { s->add_option("--out", c.out_path, "output file"); };
    auto add_group = [&](CLI::App* s) {
        s->add_option("--group", c.group,
                      "generators as p/q,...;... or one of J, sl, max, trivial");
    };
    auto add_convention = [&](CLI::App* s) {
        s->add_option("--convention", c.convention, "form-pullback or det-twist");
    };
    auto add_charges = [&](CLI::App* s) {
        s->add_option("--charges", c.charges, "charge matrix rows a,b;c,d;...");
    };
    auto add_names = [&](CLI::App* s) {
        s->add_option("--names", c.names, "parameter names, comma separated");
    };

    CLI::App* fan = app.add_subcommand("fan", "fan validation, invariants, resolutions");
    {
        CLI::App* s = fan->add_subcommand("analyze", "validate and classify");
        add_file(s), add_out(s), s->callback(handler(run_fan_analyze));
        s = fan->add_subcommand("charge", "charge matrix of the ray relations");
        add_file(s), add_out(s), s->callback(handler(run_fan_charge));
        s = fan->add_subcommand("classgroup", "divisor class group");
        add_file(s), add_out(s), s->callback(handler(run_fan_classgroup));
        s = fan->add_subcommand("resolve2d", "rays resolving a 2d cone");
        add_file(s), add_out(s);
        s->add_option("--cone", c.cone, "index of the maximal cone");
        s->callback(handler(run_fan_resolve2d));
        s = fan->add_subcommand("refine", "rewrite on a refined lattice");
        add_file(s), add_out(s);
        s->add_option("--gens", c.gens, "new lattice generators p/q,...;...");
        s->callback(handler(run_fan_refine));
        s = fan->add_subcommand("subdivides", "does --file subdivide --coarse");
        add_file(s), add_out(s);
        s->add_option("--coarse", c.coarse, "coarse fan JSON file");
        s->callback(handler(run_fan_subdivides));
    }

    CLI::App* polytope = app.add_subcommand("polytope", "lattice polytope toolkit");
    {
        CLI::App* s = polytope->add_subcommand("facets", "facet inequalities");
        add_file(s), add_out(s), s->callback(handler(run_polytope_facets));
        s = polytope->add_subcommand("points", "lattice points");
        add_file(s), add_out(s), s->callback(handler(run_polytope_points));
        s = polytope->add_subcommand("dual", "polar dual");
        add_file(s), add_out(s), s->callback(handler(run_polytope_dual));
        s = polytope->add_subcommand("reflexive", "reflexivity report");
        add_file(s), add_out(s), s->callback(handler(run_polytope_reflexive));
        s = polytope->add_subcommand("normalfan", "normal fan");
        add_file(s), add_out(s), s->callback(handler(run_polytope_normalfan));
        s = polytope->add_subcommand("divisor", "divisor polytope of a fan");
        add_file(s), add_out(s);
        s->add_option("--divisor", c.divisor, "divisor coefficients a0,a1,...");
        s->callback(handler(run_polytope_divisor));
        s = polytope->add_subcommand("batyrev", "mirror family data of a reflexive polytope");
        add_file(s), add_out(s), s->callback(handler(run_polytope_batyrev));
    }

    CLI::App* wps = app.add_subcommand("wps", "weighted projective space reports");
    {
        CLI::App* s = wps->add_subcommand("gorenstein", "divisibility criterion");
        add_out(s);
        s->add_option("--weights", c.weights, "weights c0,c1,...");
        s->callback(handler(run_wps_gorenstein));
        s = wps->add_subcommand("chenruan", "inertia sector dimensions");
        add_out(s);
        s->add_option("--weights", c.weights, "weights c0,c1,...");
        s->callback(handler(run_wps_chenruan));
    }

    CLI::App* lg = app.add_subcommand("lg", "invertible polynomial invariants");
    {
        CLI::App* s = lg->add_subcommand("charges", "charges and degree");
        add_expr(s), add_out(s), s->callback(handler(run_lg_charges));
        s = lg->add_subcommand("decompose", "fermat/loop/chain pieces");
        add_expr(s), add_out(s), s->callback(handler(run_lg_decompose));
        s = lg->add_subcommand("milnor", "milnor number and central charge");
        add_expr(s), add_out(s), s->callback(handler(run_lg_milnor));
        s = lg->add_subcommand("jacobian", "graded jacobian basis");
        add_expr(s), add_out(s), s->callback(handler(run_lg_jacobian));
        s = lg->add_subcommand("transpose", "transpose polynomial");
        add_expr(s), add_out(s), s->callback(handler(run_lg_transpose));
    }

    CLI::App* group = app.add_subcommand("group", "diagonal symmetry groups");
    {
        CLI::App* s = group->add_subcommand("max", "maximal symmetry group");
        add_expr(s), add_out(s), s->callback(handler(run_group_max));
        s = group->add_subcommand("j", "exponential grading element");
        add_expr(s), add_out(s), s->callback(handler(run_group_j));
        s = group->add_subcommand("sl", "determinant-one subgroup");
        add_expr(s), add_out(s), s->callback(handler(run_group_sl));
        s = group->add_subcommand("generate", "subgroup generated by phase vectors");
        add_expr(s), add_out(s), add_group(s), s->callback(handler(run_group_generate));
        s = group->add_subcommand("transpose", "mirror dual subgroup");
        add_expr(s), add_out(s), add_group(s), s->callback(handler(run_group_transpose));
        s = group->add_subcommand("cy", "calabi-yau condition");
        add_expr(s), add_out(s), add_group(s), s->callback(handler(run_group_cy));
    }

    CLI::App* statespace = app.add_subcommand("statespace", "orbifolded state spaces");
    {
        CLI::App* s = statespace->add_subcommand("b", "b-model state space");
        add_expr(s), add_out(s), add_group(s), add_convention(s);
        s->callback([&]() {
            result = run_statespace(c, false);
            have_result = true;
        });
        s = statespace->add_subcommand("a", "a-model state space");
        add_expr(s), add_out(s), add_group(s), add_convention(s);
        s->callback([&]() {
            result = run_statespace(c, true);
            have_result = true;
        });
        s = statespace->add_subcommand("bhk", "transpose mirror basis table");
        add_expr(s), add_out(s), add_group(s), add_convention(s);
        s->callback(handler(run_statespace_bhk));
        s = statespace->add_subcommand("check-pairing", "pairing degree report");
        add_expr(s), add_out(s), add_group(s), add_convention(s);
        s->callback(handler(run_statespace_pairing));
    }

    CLI::App* hv = app.add_subcommand("hv", "hori-vafa mirror constructions");
    {
        CLI::App* s = hv->add_subcommand("mirror", "toric mirror and its solved form");
        add_file(s), add_out(s), add_charges(s), add_names(s);
        s->callback(handler(run_hv_mirror));
        s = hv->add_subcommand("equivariant", "solved mirror with log corrections");
        add_file(s), add_out(s), add_charges(s), add_names(s);
        s->add_option("--lambdas", c.lambdas, "equivariant parameter names");
        s->add_option("--subset", c.subset, "coordinate indices carrying logs");
        s->callback(handler(run_hv_equivariant));
        s = hv->add_subcommand("hypersurface", "pre-mirror of an invertible hypersurface");
        add_expr(s), add_out(s), add_charges(s), add_names(s);
        s->add_option("--weights", c.weights, "ambient weights c0,c1,...");
        s->add_option("--degree", c.degree, "hypersurface degree");
        s->add_option("--degrees", c.degrees, "degrees d1,d2,... for --charges");
        s->callback(handler(run_hv_hypersurface));
        s = hv->add_subcommand("ci", "pre-mirror of an invertible complete intersection");
        add_file(s), add_out(s), s->callback(handler(run_hv_ci));
        s = hv->add_subcommand("count", "critical point count");
        add_file(s), add_out(s);
        s->add_option("--params", c.params, "parameter assignment name=p/q,...");
        s->callback(handler(run_hv_count));
        s = hv->add_subcommand("phases", "rank-one glsm phases");
        add_out(s), add_charges(s), s->callback(handler(run_hv_phases));
        s = hv->add_subcommand("symmetry", "diagonal symmetries of a superpotential");
        add_file(s), add_out(s), s->callback(handler(run_hv_symmetry));
        s = hv->add_subcommand("batyrev-cy", "consistency with the polar-dual family");
        add_out(s);
        s->add_option("--nvars", c.nvars, "number of variables");
        s->add_option("--degree", c.degree, "degree (defaults to --nvars)");
        s->add_option("--param", c.param, "parameter name");
        s->callback(handler(run_hv_batyrev_cy));
    }

    std::vector<const char*> argv;
    argv.push_back("toricmirror");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        err << json{{"error", e.code()}, {"detail", e.detail()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << json{{"error", "Internal"}, {"detail", e.what()}}.dump() << "\n";
        return 1;
    }
    if (!have_result) return 2;
    const std::string text = result.dump();
    if (!c.out_path.empty()) {
        std::ofstream f(c.out_path, std::ios::binary);
        if (!f) {
            err << json{{"error", "ParseError"},
                        {"detail", "cannot write file '" + c.out_path + "'"}}
                       .dump()
                << "\n";
            return 1;
        }
        f << text << "\n";
        return 0;
    }
    out << text << "\n";
    return 0;
}

}  // namespace toric::cli
