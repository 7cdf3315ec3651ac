#include "toric/lg.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

#include "toric/error.hpp"

namespace toric {
namespace {

void validate_polynomial(const InvertiblePolynomial& w, bool require_square) {
    const size_t n = w.vars.size();
    const size_t m = w.coeffs.size();
    if (w.exponents.rows() != m) fail("ParseError", "coefficient and monomial counts differ");
    if (m > 0 && w.exponents.cols() != n) fail("ParseError", "exponent width does not match variable count");
    std::set<std::string> names(w.vars.begin(), w.vars.end());
    if (names.size() != n) fail("ParseError", "duplicate variable name");
    for (const Rat& c : w.coeffs) {
        if (c == 0) fail("ParseError", "zero coefficient");
    }
    std::set<IVec> seen;
    for (size_t r = 0; r < m; ++r) {
        for (size_t c = 0; c < n; ++c) {
            if (w.exponents(r, c) < 0) fail("ParseError", "negative exponent");
        }
        if (!seen.insert(w.exponents.row(r)).second) fail("RepeatedMonomial", "monomial appears twice");
    }
    if (!require_square) return;
    if (m != n) fail("NotSquare", "monomial count does not equal variable count");
    for (size_t c = 0; c < n; ++c) {
        bool used = false;
        for (size_t r = 0; r < m && !used; ++r) used = w.exponents(r, c) > 0;
        if (!used) fail("UnusedVariable", "variable " + w.vars[c] + " appears in no monomial");
    }
}

struct Token {
    enum class Kind { Number, Ident, Op } kind;
    std::string text;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Kind::Number, text.substr(i, j - i)});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back({Token::Kind::Ident, text.substr(i, j - i)});
            i = j;
            continue;
        }
        if (ch == '+' || ch == '-' || ch == '*' || ch == '^' || ch == '/') {
            out.push_back({Token::Kind::Op, std::string(1, ch)});
            ++i;
            continue;
        }
        fail("ParseError", std::string("unexpected character '") + ch + "'");
    }
    return out;
}

// Sorts columns for the per-degree elimination: monomials with a larger
// maximal exponent are eliminated first, ties broken toward the
// lexicographically larger vector. Standard monomials are what survives.
bool priority_before(const IVec& a, const IVec& b) {
    Int ma = 0, mb = 0;
    for (const Int& e : a) ma = std::max(ma, e);
    for (const Int& e : b) mb = std::max(mb, e);
    if (ma != mb) return ma > mb;
    return lex_less(b, a);
}

bool lex_greater(const IVec& a, const IVec& b) { return lex_less(b, a); }

std::vector<IVec> monomials_of_degree(const IVec& weights, const Int& target) {
    std::vector<IVec> out;
    IVec cur(weights.size(), Int(0));
    std::function<void(size_t, Int)> rec = [&](size_t i, Int rest) {
        if (i == weights.size()) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        if (i + 1 == weights.size()) {
            if (rest % weights[i] == 0) {
                cur[i] = rest / weights[i];
                out.push_back(cur);
                cur[i] = 0;
            }
            return;
        }
        for (Int e = 0; e * weights[i] <= rest; ++e) {
            cur[i] = e;
            rec(i + 1, rest - e * weights[i]);
        }
        cur[i] = 0;
    };
    if (weights.empty()) {
        if (target == 0) out.push_back(IVec{});
        return out;
    }
    rec(0, target);
    return out;
}

using SparseRow = std::vector<std::pair<size_t, Rat>>;

SparseRow combine(const SparseRow& a, const Rat& factor, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back({b[j].first, factor * b[j].second});
            ++j;
        } else {
            Rat v = a[i].second + factor * b[j].second;
            if (v != 0) out.push_back({a[i].first, v});
            ++i;
            ++j;
        }
    }
    return out;
}

// Indices of the standard (non-pivot) columns after forward elimination in
// the given column order.
std::vector<size_t> standard_columns(std::vector<SparseRow> rows, size_t ncols) {
    std::vector<std::vector<SparseRow>> bucket(ncols);
    for (SparseRow& r : rows) {
        if (!r.empty()) bucket[r.front().first].push_back(std::move(r));
    }
    std::vector<size_t> standard;
    for (size_t c = 0; c < ncols; ++c) {
        auto& pool = bucket[c];
        if (pool.empty()) {
            standard.push_back(c);
            continue;
        }
        size_t piv = 0;
        for (size_t i = 1; i < pool.size(); ++i) {
            if (pool[i].size() < pool[piv].size()) piv = i;
        }
        SparseRow pivot = std::move(pool[piv]);
        pool.erase(pool.begin() + piv);
        for (SparseRow& r : pool) {
            Rat factor = -r.front().second / pivot.front().second;
            SparseRow reduced = combine(r, factor, pivot);
            if (!reduced.empty()) bucket[reduced.front().first].push_back(std::move(reduced));
        }
        pool.clear();
    }
    return standard;
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// t^k - 1 as a coefficient vector.
std::vector<Int> cyclo_factor(const Int& k) {
    std::vector<Int> f(static_cast<size_t>(k) + 1, Int(0));
    f.front() = -1;
    f.back() = 1;
    return f;
}

// Exact division of integer polynomials with monic divisor; false when a
// nonzero remainder is left.
bool poly_divide(std::vector<Int> num, const std::vector<Int>& den, std::vector<Int>& quot) {
    size_t dd = den.size() - 1;
    if (num.size() < den.size()) {
        quot.clear();
        return std::all_of(num.begin(), num.end(), [](const Int& c) { return c == 0; });
    }
    quot.assign(num.size() - dd, Int(0));
    for (size_t i = num.size(); i-- > dd;) {
        Int f = num[i];
        if (f == 0) continue;
        quot[i - dd] = f;
        for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= f * den[j];
    }
    return std::all_of(num.begin(), num.end(), [](const Int& c) { return c == 0; });
}

// Graded dimensions of the Jacobian quotient predicted by the quasihomogeneous
// Poincare series prod (t^(d-c_i) - 1)/(t^(c_i) - 1); empty when the series is
// not a polynomial.
bool poincare_coefficients(const IVec& weights, const Int& degree, std::vector<Int>& out) {
    std::vector<Int> num{Int(1)}, den{Int(1)};
    for (const Int& c : weights) {
        num = poly_mul(num, cyclo_factor(degree - c));
        den = poly_mul(den, cyclo_factor(c));
    }
    return poly_divide(std::move(num), den, out);
}

size_t to_index(const Int& v, const char* what) {
    if (v < 0) fail("Internal", std::string("negative ") + what);
    return static_cast<size_t>(v);
}

}  // namespace

InvertiblePolynomial make_polynomial(std::vector<std::string> vars, std::vector<Rat> coeffs,
                                     IMat exponents) {
    InvertiblePolynomial w{std::move(vars), std::move(coeffs), std::move(exponents)};
    validate_polynomial(w, true);
    return w;
}

InvertiblePolynomial parse_polynomial(const std::string& text) {
    auto tokens = tokenize(text);
    if (tokens.empty()) fail("ParseError", "empty polynomial");
    std::vector<std::string> vars;
    std::map<std::string, size_t> var_index;
    std::vector<Rat> coeffs;
    std::vector<std::map<size_t, Int>> terms;

    size_t i = 0;
    bool first = true;
    while (i < tokens.size()) {
        Rat sign = 1;
        if (tokens[i].kind == Token::Kind::Op && (tokens[i].text == "+" || tokens[i].text == "-")) {
            if (tokens[i].text == "-") sign = -1;
            ++i;
        } else if (!first) {
            fail("ParseError", "expected '+' or '-' between terms");
        }
        first = false;
        Rat coeff = sign;
        std::map<size_t, Int> exps;
        bool any = false;
        while (i < tokens.size()) {
            if (tokens[i].kind == Token::Kind::Op) {
                if (tokens[i].text == "+" || tokens[i].text == "-") break;
                if (tokens[i].text == "*") {
                    ++i;
                    continue;
                }
                fail("ParseError", "misplaced operator '" + tokens[i].text + "'");
            }
            if (tokens[i].kind == Token::Kind::Number) {
                Int num = parse_integer(tokens[i].text);
                ++i;
                Int den = 1;
                if (i + 1 < tokens.size() && tokens[i].kind == Token::Kind::Op &&
                    tokens[i].text == "/" && tokens[i + 1].kind == Token::Kind::Number) {
                    den = parse_integer(tokens[i + 1].text);
                    if (den == 0) fail("ParseError", "division by zero");
                    i += 2;
                }
                coeff *= Rat(num, den);
                any = true;
                continue;
            }
            const std::string& name = tokens[i].text;
            ++i;
            auto it = var_index.find(name);
            size_t vi;
            if (it == var_index.end()) {
                vi = vars.size();
                var_index[name] = vi;
                vars.push_back(name);
            } else {
                vi = it->second;
            }
            Int e = 1;
            if (i + 1 < tokens.size() && tokens[i].kind == Token::Kind::Op &&
                tokens[i].text == "^" && tokens[i + 1].kind == Token::Kind::Number) {
                e = parse_integer(tokens[i + 1].text);
                i += 2;
            } else if (i < tokens.size() && tokens[i].kind == Token::Kind::Op &&
                       tokens[i].text == "^") {
                fail("ParseError", "'^' needs a nonnegative integer exponent");
            }
            exps[vi] += e;
            any = true;
        }
        if (!any) fail("ParseError", "empty term");
        if (coeff == 0) fail("ParseError", "zero coefficient");
        coeffs.push_back(coeff);
        terms.push_back(std::move(exps));
    }

    IMat e(terms.size(), vars.size());
    for (size_t r = 0; r < terms.size(); ++r) {
        for (const auto& [v, exp] : terms[r]) e(r, v) = exp;
    }
    InvertiblePolynomial w{std::move(vars), std::move(coeffs), std::move(e)};
    validate_polynomial(w, true);
    return w;
}

std::string polynomial_to_string(const InvertiblePolynomial& w) {
    if (w.coeffs.empty()) return "0";
    std::string out;
    for (size_t r = 0; r < w.coeffs.size(); ++r) {
        Rat c = w.coeffs[r];
        if (r == 0) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (c < 0) c = -c;
        std::vector<std::string> factors;
        if (c != 1) factors.push_back(to_string(c));
        for (size_t v = 0; v < w.vars.size(); ++v) {
            const Int& e = w.exponents(r, v);
            if (e == 0) continue;
            factors.push_back(e == 1 ? w.vars[v] : w.vars[v] + "^" + to_string(e));
        }
        if (factors.empty()) factors.push_back(to_string(c));
        for (size_t f = 0; f < factors.size(); ++f) {
            if (f > 0) out += "*";
            out += factors[f];
        }
    }
    return out;
}

ChargeData charges(const InvertiblePolynomial& w) {
    validate_polynomial(w, true);
    const size_t n = w.vars.size();
    if (determinant(w.exponents) == 0) {
        fail("SingularExponentMatrix", "exponent matrix is singular");
    }
    QVec ones(n, Rat(1));
    QVec q;
    if (!solve_linear(QMat(w.exponents), ones, q)) {
        fail("SingularExponentMatrix", "exponent matrix is singular");
    }
    for (const Rat& qi : q) {
        if (!(qi > 0) || qi > Rat(1, 2)) {
            fail("ChargeOutOfRange", "charge " + to_string(qi) + " lies outside (0, 1/2]");
        }
    }
    Int d = 1;
    for (const Rat& qi : q) d = lcm(d, den(qi));
    IVec weights(n);
    for (size_t i = 0; i < n; ++i) weights[i] = num(q[i]) * (d / den(q[i]));
    return {q, weights, d};
}

AtomicDecomposition ks_decompose(const InvertiblePolynomial& w) {
    validate_polynomial(w, true);
    const size_t n = w.vars.size();
    if (determinant(w.exponents) == 0) {
        fail("SingularExponentMatrix", "exponent matrix is singular");
    }

    struct Option {
        size_t head;
        bool has_tail;
        size_t tail;
    };
    std::vector<std::vector<Option>> options(n);
    for (size_t r = 0; r < n; ++r) {
        std::vector<size_t> support;
        for (size_t c = 0; c < n; ++c) {
            if (w.exponents(r, c) > 0) support.push_back(c);
        }
        if (support.size() == 1) {
            options[r].push_back({support[0], false, 0});
        } else if (support.size() == 2) {
            const Int& e0 = w.exponents(r, support[0]);
            const Int& e1 = w.exponents(r, support[1]);
            if (e1 == 1) options[r].push_back({support[0], true, support[1]});
            if (e0 == 1) options[r].push_back({support[1], true, support[0]});
        }
        if (options[r].empty()) {
            fail("NotDecomposable", "monomial " + std::to_string(r) + " fits no atomic shape");
        }
    }

    std::vector<size_t> head_monomial(n, n);
    std::vector<size_t> chosen(n);
    AtomicDecomposition result;

    // Turns a complete head assignment into pieces; false when the head/tail
    // links do not form disjoint Fermat, chain, and loop shapes.
    auto extract = [&]() -> bool {
        std::vector<bool> has_tail(n, false);
        std::vector<size_t> tail(n, 0);
        std::vector<int> indeg(n, 0);
        for (size_t v = 0; v < n; ++v) {
            const Option& o = options[head_monomial[v]][chosen[head_monomial[v]]];
            has_tail[v] = o.has_tail;
            if (o.has_tail) {
                tail[v] = o.tail;
                if (++indeg[o.tail] > 1) return false;
            }
        }
        std::vector<AtomicPiece> pieces;
        std::vector<bool> visited(n, false);
        for (size_t v = 0; v < n; ++v) {
            if (visited[v] || indeg[v] != 0) continue;
            std::vector<size_t> path{v};
            visited[v] = true;
            size_t cur = v;
            while (has_tail[cur]) {
                cur = tail[cur];
                if (visited[cur]) return false;
                visited[cur] = true;
                path.push_back(cur);
            }
            AtomicPiece piece;
            piece.variable_indices = path;
            for (size_t x : path) piece.exponents.push_back(w.exponents(head_monomial[x], x));
            if (path.size() == 1) {
                piece.type = AtomicPiece::Type::Fermat;
                if (piece.exponents[0] < 2) return false;
            } else {
                piece.type = AtomicPiece::Type::Chain;
            }
            pieces.push_back(std::move(piece));
        }
        for (size_t v = 0; v < n; ++v) {
            if (visited[v]) continue;
            std::vector<size_t> cycle{v};
            visited[v] = true;
            size_t cur = v;
            while (true) {
                if (!has_tail[cur]) return false;
                cur = tail[cur];
                if (cur == v) break;
                if (visited[cur]) return false;
                visited[cur] = true;
                cycle.push_back(cur);
            }
            AtomicPiece piece;
            piece.type = AtomicPiece::Type::Loop;
            piece.variable_indices = cycle;
            for (size_t x : cycle) piece.exponents.push_back(w.exponents(head_monomial[x], x));
            pieces.push_back(std::move(piece));
        }
        std::sort(pieces.begin(), pieces.end(), [](const AtomicPiece& a, const AtomicPiece& b) {
            return a.variable_indices.front() < b.variable_indices.front();
        });
        result.pieces = std::move(pieces);
        return true;
    };

    std::function<bool(size_t)> assign = [&](size_t r) -> bool {
        if (r == n) return extract();
        for (size_t o = 0; o < options[r].size(); ++o) {
            size_t h = options[r][o].head;
            if (head_monomial[h] != n) continue;
            head_monomial[h] = r;
            chosen[r] = o;
            if (assign(r + 1)) return true;
            head_monomial[h] = n;
        }
        return false;
    };

    if (!assign(0)) {
        fail("NotDecomposable", "no assignment into Fermat, loop, and chain pieces exists");
    }
    return result;
}

Rat central_charge(const InvertiblePolynomial& w) {
    ChargeData cd = charges(w);
    Rat c = 0;
    for (const Rat& q : cd.q) c += 1 - 2 * q;
    return c;
}

bool is_calabi_yau(const InvertiblePolynomial& w) {
    ChargeData cd = charges(w);
    Rat s = 0;
    for (const Rat& q : cd.q) s += q;
    return s == 1;
}

Int milnor_number(const InvertiblePolynomial& w) {
    ChargeData cd = charges(w);
    Rat mu = 1;
    for (const Rat& q : cd.q) mu *= 1 / q - 1;
    if (!is_integer(mu)) {
        fail("NonIntegralMilnor", "product of (1/q_i - 1) is " + to_string(mu));
    }
    return num(mu);
}

JacobianBasis graded_jacobian_basis(const IMat& exponents, const std::vector<Rat>& coeffs,
                                    const IVec& weights, const Int& degree) {
    const size_t k = weights.size();
    const size_t m = exponents.rows();
    if (coeffs.size() != m) fail("Internal", "coefficient count mismatch");
    if (m > 0 && exponents.cols() != k) fail("Internal", "exponent width mismatch");
    for (const Int& c : weights) {
        if (c <= 0 || c >= degree) fail("Internal", "weights must lie strictly inside (0, d)");
    }
    for (size_t r = 0; r < m; ++r) {
        Int total = 0;
        for (size_t c = 0; c < k; ++c) total += exponents(r, c) * weights[c];
        if (total != degree) fail("Internal", "monomial is not quasihomogeneous of degree d");
    }

    Int top = 0;
    for (const Int& c : weights) top += degree - 2 * c;
    if (top < 0) top = 0;

    // A monomial of degree above top + max(c_i) strips one variable into the
    // verified range, so vanishing on that window certifies finiteness.
    Int gap = 0;
    for (const Int& c : weights) gap = std::max(gap, c);

    JacobianBasis basis;
    for (Int D = 0; D <= top + gap; ++D) {
        std::vector<IVec> cols = monomials_of_degree(weights, D);
        if (cols.empty()) continue;
        std::sort(cols.begin(), cols.end(), priority_before);
        // Exponents at degree D are bounded by D / min(c_i), so monomials pack
        // into a base-(bound+1) integer key.
        unsigned long long base = 1;
        for (const Int& c : weights) {
            Int b = D / c + 1;
            base = std::max(base, static_cast<unsigned long long>(b));
        }
        bool packable = true;
        unsigned long long span = 1;
        for (size_t i = 0; i < k && packable; ++i) {
            if (span > (1ULL << 62) / base) packable = false;
            span *= base;
        }
        auto pack = [&](const IVec& mon) {
            unsigned long long key = 0;
            for (size_t i = 0; i < k; ++i) {
                key = key * base + static_cast<unsigned long long>(mon[i]);
            }
            return key;
        };
        std::unordered_map<unsigned long long, size_t> packed_index;
        std::map<IVec, size_t> col_index;
        if (packable) {
            packed_index.reserve(2 * cols.size());
            for (size_t c = 0; c < cols.size(); ++c) packed_index[pack(cols[c])] = c;
        } else {
            for (size_t c = 0; c < cols.size(); ++c) col_index[cols[c]] = c;
        }
        auto index_of = [&](const IVec& mon) {
            return packable ? packed_index.at(pack(mon)) : col_index.at(mon);
        };

        std::vector<SparseRow> rows;
        std::vector<std::pair<size_t, Rat>> entries;
        for (size_t i = 0; i < k; ++i) {
            Int shift = D - (degree - weights[i]);
            if (shift < 0) continue;
            IVec target(k);
            for (const IVec& mon : monomials_of_degree(weights, shift)) {
                entries.clear();
                for (size_t r = 0; r < m; ++r) {
                    if (exponents(r, i) < 1) continue;
                    for (size_t c = 0; c < k; ++c) target[c] = mon[c] + exponents(r, c);
                    target[i] -= 1;
                    entries.push_back({index_of(target), coeffs[r] * exponents(r, i)});
                }
                std::sort(entries.begin(), entries.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                SparseRow row;
                for (const auto& [c, v] : entries) {
                    if (!row.empty() && row.back().first == c) {
                        row.back().second += v;
                        if (row.back().second == 0) row.pop_back();
                    } else if (v != 0) {
                        row.push_back({c, v});
                    }
                }
                if (!row.empty()) rows.push_back(std::move(row));
            }
        }

        std::vector<size_t> standard = standard_columns(std::move(rows), cols.size());
        if (standard.empty()) continue;
        if (D > top) {
            fail("InfiniteDimensional",
                 "quotient dimension " + std::to_string(standard.size()) + " in degree " +
                     to_string(D) + " above the top degree " + to_string(top));
        }
        std::vector<IVec> mons;
        for (size_t c : standard) mons.push_back(cols[c]);
        std::sort(mons.begin(), mons.end(), lex_greater);
        for (IVec& mon : mons) {
            basis.monomials.push_back(std::move(mon));
            basis.degrees.push_back(Rat(D, degree));
        }
    }
    return basis;
}

JacobianBasis jacobian_basis(const InvertiblePolynomial& w) {
    ChargeData cd = charges(w);
    return graded_jacobian_basis(w.exponents, w.coeffs, cd.weights, cd.degree);
}

NondegeneracyReport nondegeneracy_check(const InvertiblePolynomial& w) {
    NondegeneracyReport report{true, {}};
    auto flag = [&](std::string reason) {
        report.ok = false;
        report.reasons.push_back(std::move(reason));
    };
    try {
        validate_polynomial(w, true);
    } catch (const Error& e) {
        flag(e.detail());
        return report;
    }

    const size_t n = w.vars.size();
    for (size_t r = 0; r < n; ++r) {
        Int total = 0;
        std::vector<size_t> support;
        for (size_t c = 0; c < n; ++c) {
            total += w.exponents(r, c);
            if (w.exponents(r, c) > 0) support.push_back(c);
        }
        if (total == 2 && support.size() == 2) {
            flag("quadratic cross-term monomial " + w.vars[support[0]] + "*" + w.vars[support[1]]);
        }
    }

    ChargeData cd;
    try {
        cd = charges(w);
    } catch (const Error& e) {
        flag(std::string(e.code()) + ": " + e.detail());
        return report;
    }

    try {
        ks_decompose(w);
    } catch (const Error& e) {
        flag(std::string(e.code()) + ": " + e.detail());
    }

    std::vector<Int> expect;
    if (!poincare_coefficients(cd.weights, cd.degree, expect)) {
        flag("Poincare series is not a polynomial");
        return report;
    }
    std::vector<Int> dims;
    try {
        JacobianBasis basis = jacobian_basis(w);
        for (size_t i = 0; i < basis.monomials.size(); ++i) {
            size_t D = to_index(num(basis.degrees[i] * cd.degree), "degree");
            if (dims.size() <= D) dims.resize(D + 1, Int(0));
            ++dims[D];
        }
    } catch (const Error& e) {
        flag(std::string(e.code()) + ": " + e.detail());
        return report;
    }
    Int topdeg = 0;
    for (const Int& c : cd.weights) topdeg += cd.degree - 2 * c;
    for (Int D = 0; D <= topdeg + cd.degree; ++D) {
        size_t di = to_index(D, "degree");
        Int actual = di < dims.size() ? dims[di] : Int(0);
        Int predicted = di < expect.size() ? expect[di] : Int(0);
        if (actual != predicted) {
            flag("Jacobian dimension " + to_string(actual) + " in degree " + to_string(D) +
                 " does not match the Poincare prediction " + to_string(predicted));
        }
    }
    return report;
}

InvertiblePolynomial transpose(const InvertiblePolynomial& w) {
    validate_polynomial(w, true);
    InvertiblePolynomial out;
    out.vars = w.vars;
    out.coeffs.assign(w.vars.size(), Rat(1));
    out.exponents = toric::transpose(w.exponents);
    validate_polynomial(out, true);
    return out;
}

InvertiblePolynomial restrict_to_fixed(const InvertiblePolynomial& w,
                                       const std::vector<size_t>& fixed_indices) {
    std::vector<size_t> fixed = fixed_indices;
    std::sort(fixed.begin(), fixed.end());
    fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
    for (size_t f : fixed) {
        if (f >= w.vars.size()) fail("ParseError", "fixed index out of range");
    }
    std::vector<bool> keep(w.vars.size(), false);
    for (size_t f : fixed) keep[f] = true;

    InvertiblePolynomial out;
    for (size_t f : fixed) out.vars.push_back(w.vars[f]);
    std::vector<IVec> rows;
    for (size_t r = 0; r < w.coeffs.size(); ++r) {
        bool inside = true;
        for (size_t c = 0; c < w.vars.size() && inside; ++c) {
            if (!keep[c] && w.exponents(r, c) > 0) inside = false;
        }
        if (!inside) continue;
        IVec row(fixed.size());
        for (size_t j = 0; j < fixed.size(); ++j) row[j] = w.exponents(r, fixed[j]);
        rows.push_back(std::move(row));
        out.coeffs.push_back(w.coeffs[r]);
    }
    if (rows.empty()) {
        out.exponents = IMat(0, fixed.size());
    } else {
        out.exponents = IMat(rows);
    }
    return out;
}

}  // namespace toric
