#include "toric/hori_vafa.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "toric/error.hpp"
#include "toric/polytope.hpp"

namespace toric {

namespace {

void drop_zero_entries(std::map<std::string, Rat>& m) {
    for (auto it = m.begin(); it != m.end();) {
        if (it->second == 0) {
            it = m.erase(it);
        } else {
            ++it;
        }
    }
}

std::string default_var(const std::string& stem, size_t i) {
    return stem + std::to_string(i + 1);
}

std::string rat_factor(const std::string& name, const Rat& e) {
    if (e == 1) return name;
    return name + "^(" + to_string(e) + ")";
}

std::string combo_to_string(const std::map<std::string, Rat>& coeffs) {
    std::string out;
    bool first = true;
    for (const auto& [name, c] : coeffs) {
        Rat a = c;
        if (first) {
            if (a < 0) out += "-";
        } else {
            out += a < 0 ? " - " : " + ";
        }
        if (a < 0) a = -a;
        if (a != 1) out += to_string(a) + "*";
        out += name;
        first = false;
    }
    return out;
}

// Constraint rows as an integer matrix, validated against the system size.
IMat constraint_matrix(const MirrorConstraintSystem& sys) {
    IMat c(sys.constraints.size(), sys.nvars);
    for (size_t j = 0; j < sys.constraints.size(); ++j) {
        if (sys.constraints[j].exponents.size() != sys.nvars) {
            fail("DimensionMismatch", "constraint " + std::to_string(j) + " has " +
                                          std::to_string(sys.constraints[j].exponents.size()) +
                                          " exponents over " + std::to_string(sys.nvars) +
                                          " variables");
        }
        for (size_t i = 0; i < sys.nvars; ++i) c(j, i) = sys.constraints[j].exponents[i];
    }
    return c;
}

// Monomial substitution data for one original variable: x_i maps to
// coeff-params times the product of the new variables to integer powers.
struct Section {
    std::map<std::string, Rat> params;
    IVec exponents;
};

LaurentSuperpotential substitute(const LaurentSuperpotential& w,
                                 const std::vector<Section>& sections,
                                 std::vector<std::string> new_vars) {
    std::vector<LaurentTerm> terms;
    for (const LaurentTerm& t : w.terms) {
        LaurentTerm out;
        out.coeff = t.coeff;
        out.params = t.params;
        out.exponents.assign(new_vars.size(), 0);
        for (size_t i = 0; i < t.exponents.size(); ++i) {
            const Int& e = t.exponents[i];
            if (e == 0) continue;
            const Section& s = sections[i];
            for (size_t m = 0; m < new_vars.size(); ++m) out.exponents[m] += e * s.exponents[m];
            for (const auto& [name, p] : s.params) out.params[name] += Rat(e) * p;
        }
        drop_zero_entries(out.params);
        terms.push_back(std::move(out));
    }
    // Distinct monomials can land on the same exponent vector; merge when the
    // symbolic coefficients agree and let validation reject the rest.
    for (size_t a = 0; a < terms.size(); ++a) {
        for (size_t b = a + 1; b < terms.size();) {
            if (terms[b].exponents == terms[a].exponents && terms[b].params == terms[a].params) {
                terms[a].coeff += terms[b].coeff;
                terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(b));
            } else {
                ++b;
            }
        }
    }
    for (size_t a = 0; a < terms.size();) {
        if (terms[a].coeff == 0) {
            terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(a));
        } else {
            ++a;
        }
    }
    std::vector<LogTerm> logs;
    for (const LogTerm& lt : w.log_terms) {
        const Section& s = sections[lt.var];
        for (size_t m = 0; m < new_vars.size(); ++m) {
            if (s.exponents[m] == 0) continue;
            LogTerm out;
            out.var = m;
            for (const auto& [name, c] : lt.coeffs) out.coeffs[name] = Rat(s.exponents[m]) * c;
            logs.push_back(std::move(out));
        }
    }
    std::sort(logs.begin(), logs.end(),
              [](const LogTerm& a, const LogTerm& b) { return a.var < b.var; });
    for (size_t a = 0; a + 1 < logs.size();) {
        if (logs[a + 1].var == logs[a].var) {
            for (const auto& [name, c] : logs[a + 1].coeffs) logs[a].coeffs[name] += c;
            logs.erase(logs.begin() + static_cast<std::ptrdiff_t>(a) + 1);
        } else {
            ++a;
        }
    }
    return make_superpotential(std::move(new_vars), std::move(terms), std::move(logs));
}

}  // namespace

LaurentSuperpotential make_superpotential(std::vector<std::string> vars,
                                          std::vector<LaurentTerm> terms,
                                          std::vector<LogTerm> log_terms) {
    for (LaurentTerm& t : terms) {
        if (t.exponents.size() != vars.size()) {
            fail("DimensionMismatch", "term exponent vector has " +
                                          std::to_string(t.exponents.size()) + " entries over " +
                                          std::to_string(vars.size()) + " variables");
        }
        if (t.coeff == 0) fail("ParseError", "zero coefficient in a superpotential term");
        drop_zero_entries(t.params);
    }
    for (size_t a = 0; a < terms.size(); ++a) {
        for (size_t b = a + 1; b < terms.size(); ++b) {
            if (terms[a].exponents == terms[b].exponents) {
                fail("RepeatedMonomial", "two terms share one exponent vector");
            }
        }
    }
    for (size_t a = 0; a < log_terms.size();) {
        LogTerm& lt = log_terms[a];
        if (lt.var >= vars.size()) {
            fail("DimensionMismatch",
                 "log term on variable index " + std::to_string(lt.var) + " of " +
                     std::to_string(vars.size()));
        }
        drop_zero_entries(lt.coeffs);
        if (lt.coeffs.empty()) {
            log_terms.erase(log_terms.begin() + static_cast<std::ptrdiff_t>(a));
        } else {
            ++a;
        }
    }
    LaurentSuperpotential w;
    w.vars = std::move(vars);
    w.terms = std::move(terms);
    w.log_terms = std::move(log_terms);
    return w;
}

std::string superpotential_to_string(const LaurentSuperpotential& w) {
    if (w.terms.empty() && w.log_terms.empty()) return "0";
    std::string out;
    for (size_t r = 0; r < w.terms.size(); ++r) {
        const LaurentTerm& t = w.terms[r];
        Rat c = t.coeff;
        if (r == 0) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (c < 0) c = -c;
        std::vector<std::string> factors;
        if (c != 1) factors.push_back(to_string(c));
        for (const auto& [name, e] : t.params) factors.push_back(rat_factor(name, e));
        std::vector<std::string> denominator;
        for (size_t v = 0; v < w.vars.size(); ++v) {
            const Int& e = t.exponents[v];
            if (e > 0) {
                factors.push_back(e == 1 ? w.vars[v] : w.vars[v] + "^" + to_string(e));
            } else if (e < 0) {
                denominator.push_back(e == -1 ? w.vars[v] : w.vars[v] + "^" + to_string(Int(-e)));
            }
        }
        if (factors.empty()) factors.push_back(to_string(c));
        for (size_t f = 0; f < factors.size(); ++f) {
            if (f > 0) out += "*";
            out += factors[f];
        }
        if (!denominator.empty()) {
            std::string den;
            for (size_t f = 0; f < denominator.size(); ++f) {
                if (f > 0) den += "*";
                den += denominator[f];
            }
            out += denominator.size() == 1 ? "/" + den : "/(" + den + ")";
        }
    }
    for (const LogTerm& lt : w.log_terms) {
        if (!out.empty()) out += " - ";
        out += "(" + combo_to_string(lt.coeffs) + ")*log(" + w.vars[lt.var] + ")";
    }
    return out;
}

GlsmPhases glsm_rank1_phases(const IVec& charges) {
    if (charges.size() < 2) {
        fail("InvalidCharges", "a rank-one GLSM needs at least two coordinates");
    }
    GlsmPhases out;
    out.degree = -charges.back();
    if (out.degree <= 0) fail("InvalidCharges", "the last charge must be negative");
    for (size_t i = 0; i + 1 < charges.size(); ++i) {
        if (charges[i] <= 0) fail("InvalidCharges", "base charges must be positive");
        out.weights.push_back(charges[i]);
    }
    std::string ws;
    for (size_t i = 0; i < out.weights.size(); ++i) {
        if (i > 0) ws += ",";
        ws += to_string(out.weights[i]);
    }
    const std::string n = std::to_string(out.weights.size());
    out.positive_phase = "O_{P(" + ws + ")}(-" + to_string(out.degree) + ")";
    out.negative_phase =
        out.degree == 1 ? "C^" + n : "[C^" + n + "/Z_" + to_string(out.degree) + "]";
    for (const Int& c : out.weights) out.negative_j_phases.push_back(mod1(Rat(c, out.degree)));
    return out;
}

ToricMirror hv_mirror_toric(const IMat& q, const std::vector<std::string>& params) {
    if (params.size() != q.cols()) {
        fail("DimensionMismatch", "charge matrix has " + std::to_string(q.cols()) +
                                      " torus factors but " + std::to_string(params.size()) +
                                      " parameters were given");
    }
    ToricMirror out;
    out.system.nvars = q.rows();
    for (size_t j = 0; j < q.cols(); ++j) {
        out.system.constraints.push_back({q.col(j), params[j]});
    }
    std::vector<std::string> vars;
    std::vector<LaurentTerm> terms;
    for (size_t i = 0; i < q.rows(); ++i) {
        vars.push_back(default_var("x", i));
        LaurentTerm t;
        t.exponents.assign(q.rows(), 0);
        t.exponents[i] = 1;
        terms.push_back(std::move(t));
    }
    out.w = make_superpotential(std::move(vars), std::move(terms));
    return out;
}

LaurentSuperpotential solve_constraints(const MirrorConstraintSystem& sys,
                                        const LaurentSuperpotential& w) {
    if (w.vars.size() != sys.nvars) {
        fail("DimensionMismatch", "superpotential has " + std::to_string(w.vars.size()) +
                                      " variables but the system expects " +
                                      std::to_string(sys.nvars));
    }
    const size_t r = sys.constraints.size();
    if (r == 0) return make_superpotential(w.vars, w.terms, w.log_terms);
    const size_t n = sys.nvars;
    const IMat c = constraint_matrix(sys);
    const HermiteResult hnf = hermite_normal_form(c);
    if (hnf.rank < r) {
        fail("InconsistentConstraints", "the constraint exponent vectors are linearly dependent");
    }

    std::vector<size_t> pivot(r, n);
    bool unit_pivots = true;
    for (size_t j = 0; j < r; ++j) {
        for (size_t i = 0; i < n; ++i) {
            if (hnf.h(j, i) != 0) {
                pivot[j] = i;
                break;
            }
        }
        if (hnf.h(j, pivot[j]) != 1) unit_pivots = false;
    }

    std::vector<Section> sections(n);
    std::vector<std::string> new_vars;
    if (unit_pivots) {
        // Eliminate each pivot variable; the free variables keep their names.
        std::vector<size_t> free_cols;
        std::vector<bool> is_pivot(n, false);
        for (size_t j = 0; j < r; ++j) is_pivot[pivot[j]] = true;
        for (size_t i = 0; i < n; ++i) {
            if (!is_pivot[i]) free_cols.push_back(i);
        }
        for (size_t i : free_cols) new_vars.push_back(w.vars[i]);
        for (size_t c2 = 0; c2 < free_cols.size(); ++c2) {
            sections[free_cols[c2]].exponents.assign(free_cols.size(), 0);
            sections[free_cols[c2]].exponents[c2] = 1;
        }
        for (size_t j = 0; j < r; ++j) {
            Section& s = sections[pivot[j]];
            s.exponents.assign(free_cols.size(), 0);
            for (size_t c2 = 0; c2 < free_cols.size(); ++c2) {
                s.exponents[c2] = -hnf.h(j, free_cols[c2]);
            }
            for (size_t k = 0; k < r; ++k) {
                if (hnf.u(j, k) != 0) s.params[sys.constraints[k].param] += Rat(hnf.u(j, k));
            }
            drop_zero_entries(s.params);
        }
    } else {
        // Non-unimodular pivots: parametrize the solution torus through the
        // Smith form, with rational parameter exponents.
        const SmithResult snf = smith_normal_form(c);
        for (size_t m = 0; m + r < n; ++m) new_vars.push_back(default_var("u", m));
        for (size_t i = 0; i < n; ++i) {
            Section& s = sections[i];
            s.exponents.assign(n - r, 0);
            for (size_t m = 0; m + r < n; ++m) s.exponents[m] = snf.v(i, r + m);
            for (size_t a = 0; a < r; ++a) {
                Rat e = 0;
                for (size_t j = 0; j < r; ++j) {
                    e += Rat(snf.v(i, j) * snf.u(j, a)) / Rat(snf.d(j, j));
                }
                if (e != 0) s.params[sys.constraints[a].param] += e;
            }
            drop_zero_entries(s.params);
        }
    }
    return substitute(w, sections, std::move(new_vars));
}

LaurentSuperpotential equivariant_hv_mirror(const IMat& q, const std::vector<std::string>& params,
                                            const std::vector<std::string>& lambda_params,
                                            const std::vector<size_t>& subset) {
    if (lambda_params.size() != q.rows()) {
        fail("DimensionMismatch", "need one equivariant parameter per coordinate");
    }
    ToricMirror mirror = hv_mirror_toric(q, params);
    std::set<size_t> chosen(subset.begin(), subset.end());
    for (size_t i : chosen) {
        if (i >= q.rows()) {
            fail("DimensionMismatch", "log subset index " + std::to_string(i) + " of " +
                                          std::to_string(q.rows()) + " coordinates");
        }
        LogTerm lt;
        lt.var = i;
        lt.coeffs[lambda_params[i]] = 1;
        mirror.w.log_terms.push_back(std::move(lt));
    }
    return solve_constraints(mirror.system, mirror.w);
}

CriticalCountResult critical_count(const LaurentSuperpotential& w,
                                   const std::map<std::string, Rat>& assignment) {
    for (const auto& [name, value] : assignment) {
        if (value == 0) {
            fail("NonGenericParameters", "parameter " + name + " assigned zero");
        }
    }
    const size_t n = w.vars.size();
    if (n > 4) {
        fail("TooManyVariables",
             "critical counting is limited to 4 torus variables, got " + std::to_string(n));
    }
    if (n == 0) return {1, false};
    std::vector<Polytope> newtons;
    for (size_t v = 0; v < n; ++v) {
        std::vector<IVec> points;
        for (const LaurentTerm& t : w.terms) {
            if (t.exponents[v] != 0) points.push_back(t.exponents);
        }
        for (const LogTerm& lt : w.log_terms) {
            if (lt.var == v && !lt.coeffs.empty()) {
                points.push_back(IVec(n, Int(0)));
                break;
            }
        }
        if (points.empty()) return {0, true};
        newtons.push_back(make_polytope(n, points));
    }
    return {mixed_volume(newtons), false};
}

LaurentSuperpotential pre_hv_mirror_hypersurface(const InvertiblePolynomial& a,
                                                 const IVec& weights, const Int& degree,
                                                 const std::string& t_param) {
    if (weights.size() != a.vars.size()) {
        fail("DimensionMismatch", "need one weight per variable");
    }
    for (const Int& c : weights) {
        if (c <= 0) fail("InvalidWeights", "weights must be positive");
    }
    if (degree <= 0) fail("InvalidWeights", "the degree must be positive");
    IMat q(weights.size(), 1);
    for (size_t i = 0; i < weights.size(); ++i) q(i, 0) = weights[i];
    return pre_hv_mirror_hypersurface(a, q, {degree}, {t_param});
}

LaurentSuperpotential pre_hv_mirror_hypersurface(const InvertiblePolynomial& a, const IMat& q,
                                                 const IVec& degrees,
                                                 const std::vector<std::string>& t_params) {
    const size_t m = a.vars.size();
    const size_t n = q.rows();
    const size_t r = q.cols();
    if (a.exponents.rows() != m || a.exponents.cols() != m) {
        fail("NotSquare", "the defining polynomial must have a square exponent matrix");
    }
    if (degrees.size() != r || t_params.size() != r) {
        fail("DimensionMismatch", "need one degree and one parameter per torus factor");
    }
    if (m > n || n - m + 1 != r) {
        fail("NotInvertible", "invertibility needs N - M + 1 torus factors, got " +
                                  std::to_string(r) + " for N = " + std::to_string(n) +
                                  ", M = " + std::to_string(m));
    }
    if (determinant(a.exponents) == 0) {
        fail("NotInvertible", "the exponent matrix of the defining polynomial is singular");
    }

    // Homogeneity of each monomial, up to the charge lattice of the hidden
    // coordinates x_{M+1}, ..., x_N.
    IMat hidden(n - m, r);
    for (size_t b = 0; b + m < n; ++b) {
        for (size_t j = 0; j < r; ++j) hidden(b, j) = q(m + b, j);
    }
    const HermiteResult hidden_h = hermite_normal_form(hidden);
    for (size_t i = 0; i < m; ++i) {
        IVec residue(r, Int(0));
        for (size_t j2 = 0; j2 < r; ++j2) {
            Int charge = 0;
            for (size_t j = 0; j < m; ++j) charge += a.exponents(i, j) * q(j, j2);
            residue[j2] = charge - degrees[j2];
        }
        for (size_t row = 0; row < hidden_h.rank; ++row) {
            size_t p = 0;
            while (p < r && hidden_h.h(row, p) == 0) ++p;
            if (p == r || residue[p] % hidden_h.h(row, p) != 0) continue;
            const Int f = residue[p] / hidden_h.h(row, p);
            for (size_t j2 = 0; j2 < r; ++j2) residue[j2] -= f * hidden_h.h(row, j2);
        }
        if (!std::all_of(residue.begin(), residue.end(), [](const Int& x) { return x == 0; })) {
            fail("NotQuasihomogeneous",
                 "monomial " + std::to_string(i) + " is not homogeneous of the stated degrees");
        }
    }

    // D = (last N - M rows of Q over the row -d); its inverse drives the
    // compactification terms.
    QMat d(r, r);
    for (size_t b = 0; b + m < n; ++b) {
        for (size_t j = 0; j < r; ++j) d(b, j) = Rat(q(m + b, j));
    }
    for (size_t j = 0; j < r; ++j) d(r - 1, j) = Rat(-degrees[j]);
    QMat dinv;
    try {
        dinv = rational_inverse(d);
    } catch (const Error&) {
        fail("NotInvertible", "the appended charge block is singular");
    }

    std::vector<std::string> vars;
    for (size_t j = 0; j < m; ++j) vars.push_back(default_var("u", j));
    std::vector<LaurentTerm> terms;
    for (size_t i = 0; i < m; ++i) {
        LaurentTerm t;
        t.exponents = a.exponents.col(i);
        terms.push_back(std::move(t));
    }
    for (size_t b = 0; b < r; ++b) {
        LaurentTerm t;
        for (size_t j = 0; j < r; ++j) {
            if (dinv(j, b) != 0) t.params[t_params[j]] = dinv(j, b);
        }
        t.exponents.assign(m, 0);
        for (size_t k = 0; k < m; ++k) {
            Rat e = 0;
            for (size_t i = 0; i < m; ++i) {
                for (size_t j = 0; j < r; ++j) {
                    e -= Rat(a.exponents(k, i) * q(i, j)) * dinv(j, b);
                }
            }
            if (!is_integer(e)) {
                fail("NotInvertible", "the change of variables has a non-integral exponent");
            }
            t.exponents[k] = num(e);
        }
        terms.push_back(std::move(t));
    }
    return make_superpotential(std::move(vars), std::move(terms));
}

LaurentSuperpotential pre_hv_mirror_complete_intersection(const std::vector<IMat>& systems,
                                                          const IMat& q, const IMat& degrees,
                                                          const std::vector<std::string>& t_params) {
    const size_t k = systems.size();
    const size_t n = q.rows();
    if (k == 0) fail("NotInvertibleCI", "no defining polynomials");
    if (q.cols() != k) {
        fail("NotInvertibleCI", "the all-variables case needs one torus factor per polynomial");
    }
    if (degrees.rows() != k || degrees.cols() != k || t_params.size() != k) {
        fail("DimensionMismatch", "need a square degree matrix and one parameter per polynomial");
    }
    size_t total = 0;
    for (const IMat& block : systems) {
        if (block.cols() != n) {
            fail("DimensionMismatch", "polynomial block over the wrong variable count");
        }
        total += block.rows();
    }
    if (total != n) {
        fail("NotInvertibleCI", "the total monomial count must equal the variable count, got " +
                                    std::to_string(total) + " over " + std::to_string(n));
    }

    std::vector<IVec> stacked;
    std::vector<size_t> block_of;
    for (size_t b = 0; b < k; ++b) {
        for (size_t i = 0; i < systems[b].rows(); ++i) {
            IVec row = systems[b].row(i);
            for (const Int& e : row) {
                if (e < 0) fail("NotInvertibleCI", "negative exponent in a defining polynomial");
            }
            for (size_t a2 = 0; a2 < k; ++a2) {
                Int charge = 0;
                for (size_t j = 0; j < n; ++j) charge += row[j] * q(j, a2);
                if (charge != degrees(b, a2)) {
                    fail("NotQuasihomogeneous", "a monomial of polynomial " + std::to_string(b) +
                                                    " is not homogeneous of the stated degrees");
                }
            }
            stacked.push_back(std::move(row));
            block_of.push_back(b);
        }
    }
    for (size_t a2 = 0; a2 < stacked.size(); ++a2) {
        for (size_t b2 = a2 + 1; b2 < stacked.size(); ++b2) {
            if (stacked[a2] == stacked[b2]) {
                fail("NotInvertibleCI", "repeated monomial across the defining polynomials");
            }
        }
    }
    const IMat e(stacked);
    if (determinant(e) == 0) {
        fail("NotInvertibleCI", "the stacked exponent matrix is singular");
    }
    QMat dinv;
    try {
        dinv = rational_inverse(QMat(degrees));
    } catch (const Error&) {
        fail("DegenerateDegreeMatrix", "the degree matrix is singular");
    }

    std::vector<std::string> vars;
    for (size_t j = 0; j < n; ++j) vars.push_back(default_var("u", j));
    std::vector<LaurentTerm> terms;
    for (size_t i = 0; i < n; ++i) {
        LaurentTerm t;
        t.exponents = e.col(i);
        terms.push_back(std::move(t));
    }
    // The parameter exponents invert the degree pairing: with x_{N+b} picking
    // up e^{-sum_c dinv(c,b) t_c}, each constraint closes to exactly e^{t_a}.
    for (size_t b = 0; b < k; ++b) {
        LaurentTerm t;
        for (size_t c2 = 0; c2 < k; ++c2) {
            if (dinv(c2, b) != 0) t.params[t_params[c2]] = -dinv(c2, b);
        }
        t.exponents.assign(n, 0);
        for (size_t j = 0; j < n; ++j) t.exponents[j] = block_of[j] == b ? 1 : 0;
        terms.push_back(std::move(t));
    }
    return make_superpotential(std::move(vars), std::move(terms));
}

SuperpotentialSymmetry superpotential_symmetry_group(const LaurentSuperpotential& w,
                                                     size_t limit) {
    if (!w.log_terms.empty()) {
        fail("LogTermsPresent", "symmetry groups are defined for log-free superpotentials");
    }
    const size_t n = w.vars.size();
    InvertiblePolynomial holder;
    holder.vars = w.vars;
    IMat e(w.terms.size(), n);
    for (size_t i = 0; i < w.terms.size(); ++i) {
        holder.coeffs.push_back(w.terms[i].coeff);
        for (size_t j = 0; j < n; ++j) e(i, j) = w.terms[i].exponents[j];
    }
    holder.exponents = e;

    std::vector<DiagonalElement> elements{identity_element(n)};
    if (n > 0) {
        const SmithResult snf = smith_normal_form(e);
        if (snf.rank < n) {
            fail("InfiniteSymmetryGroup", "the exponent rows do not span the variable lattice");
        }
        Int order = 1;
        for (size_t j = 0; j < n; ++j) order *= snf.d(j, j);
        if (order > Int(limit)) {
            fail("EnumerationLimit", "symmetry group would exceed " + std::to_string(limit) +
                                         " elements");
        }
        for (size_t j = 0; j < n; ++j) {
            const Int& s = snf.d(j, j);
            if (s == 1) continue;
            QVec gen(n);
            for (size_t i = 0; i < n; ++i) gen[i] = Rat(snf.v(i, j), s);
            std::vector<DiagonalElement> next;
            for (const DiagonalElement& base : elements) {
                for (Int p = 0; p < s; ++p) {
                    QVec phases(n);
                    for (size_t i = 0; i < n; ++i) phases[i] = mod1(base.phases[i] + Rat(p) * gen[i]);
                    next.push_back({std::move(phases)});
                }
            }
            elements = std::move(next);
        }
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        if (Int(elements.size()) != order) {
            fail("Internal", "symmetry enumeration lost elements");
        }
    }
    SuperpotentialSymmetry out;
    out.full = DiagonalGroup{holder, std::move(elements)};
    out.sl = sl_subgroup(out.full);
    return out;
}

BatyrevCyCheck batyrev_consistency_cy(size_t nvars, const Int& degree, const std::string& t_param) {
    if (degree != Int(nvars)) {
        fail("NotCalabiYau", "the hypersurface is Calabi-Yau only when the degree equals the "
                             "variable count");
    }
    if (nvars < 2) fail("DimensionMismatch", "need at least two variables");

    BatyrevCyCheck out;
    std::vector<std::string> vars;
    std::vector<LaurentTerm> terms;
    for (size_t i = 0; i < nvars; ++i) {
        vars.push_back(default_var("z", i));
        LaurentTerm t;
        t.exponents.assign(nvars, 0);
        t.exponents[i] = degree;
        terms.push_back(std::move(t));
    }
    LaurentTerm diag;
    diag.params[t_param] = Rat(Int(1), Int(nvars));
    diag.exponents.assign(nvars, 1);
    terms.push_back(std::move(diag));
    out.w = make_superpotential(std::move(vars), std::move(terms));
    for (const LaurentTerm& t : out.w.terms) out.hv_monomials.push_back(t.exponents);
    std::sort(out.hv_monomials.begin(), out.hv_monomials.end(),
              [](const IVec& a, const IVec& b) { return lex_less(a, b); });

    // Anticanonical family of the polar dual of the degree-N simplex
    // conv(N e_i - 1) in the quotient lattice Z^{N-1}.
    std::vector<IVec> simplex_vertices;
    for (size_t i = 0; i + 1 < nvars; ++i) {
        IVec v(nvars - 1, Int(-1));
        v[i] += degree;
        simplex_vertices.push_back(std::move(v));
    }
    simplex_vertices.push_back(IVec(nvars - 1, Int(-1)));
    const Polytope simplex = make_polytope(nvars - 1, simplex_vertices);
    for (const IVec& point : lattice_points(polar_dual(simplex))) {
        IVec monomial(nvars, Int(0));
        for (size_t j = 0; j < nvars; ++j) {
            monomial[j] = dot(point, simplex_vertices[j]) + 1;
        }
        out.batyrev_monomials.push_back(std::move(monomial));
    }
    std::sort(out.batyrev_monomials.begin(), out.batyrev_monomials.end(),
              [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    out.coincide = out.hv_monomials == out.batyrev_monomials;
    return out;
}

}  // namespace toric
