#include "sga/freeness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "sga/linalg.hpp"
#include "sga/multipoly.hpp"

namespace sga {

namespace {

const long kEvalPoint[5] = {2, 3, 5, 7, 11};  // off every hyperplane of any realized graph

// Derivation of homogeneous degree d: component j is a polynomial in l vars.
struct Derivation {
    int degree = 0;
    std::vector<MultiPoly> components;
    std::vector<mpq_class> eval;  // components at the fixed point
};

/// Nullspace basis of the degree-d graded piece of the derivation module.
std::vector<Derivation> graded_piece(const Arrangement& a, int d) {
    int l = a.dim;
    auto monos = monomials_of_degree(l, d);
    int per = static_cast<int>(monos.size());
    int unknowns = l * per;

    // One block of rows per hyperplane: sum_i alpha_i p_i must vanish on the
    // hyperplane. Eliminate the pivot variable of alpha and collect the
    // coefficient of every residual monomial.
    QMat rows;
    for (const Hyperplane& h : a.hyperplanes) {
        int pivot = -1;
        for (int i = 0; i < l; ++i)
            if (h.normal[i] != 0) pivot = i;
        std::map<std::vector<int>, QVec> eqs;  // residual monomial -> coefficient row
        for (int comp = 0; comp < l; ++comp) {
            if (h.normal[comp] == 0) continue;
            for (int m = 0; m < per; ++m) {
                // substitute x_pivot := -(sum_{i != pivot} alpha_i x_i) / alpha_pivot
                // expand the monomial under the substitution
                std::vector<std::pair<std::vector<int>, mpq_class>> expanded{
                    {std::vector<int>(l, 0), mpq_class(h.normal[comp])}};
                for (int var = 0; var < l; ++var) {
                    for (int rep = 0; rep < monos[m][var]; ++rep) {
                        std::vector<std::pair<std::vector<int>, mpq_class>> next;
                        for (auto& [e, c] : expanded) {
                            if (var != pivot) {
                                auto e2 = e;
                                ++e2[var];
                                next.push_back({std::move(e2), c});
                            } else {
                                for (int i = 0; i < l; ++i) {
                                    if (i == pivot || h.normal[i] == 0) continue;
                                    auto e2 = e;
                                    ++e2[i];
                                    mpq_class f(-h.normal[i], h.normal[pivot]);
                                    f.canonicalize();
                                    next.push_back({std::move(e2), c * f});
                                }
                            }
                        }
                        expanded = std::move(next);
                    }
                }
                for (auto& [e, c] : expanded) {
                    auto [it, fresh] = eqs.try_emplace(e, QVec(unknowns, 0));
                    (void)fresh;
                    it->second[comp * per + m] += c;
                }
            }
        }
        for (auto& [e, row] : eqs) rows.push_back(std::move(row));
    }

    std::vector<Derivation> out;
    std::vector<QVec> null;
    if (rows.empty()) {
        // no hyperplanes: the whole space of degree-d tuples
        for (int i = 0; i < unknowns; ++i) {
            QVec v(unknowns, 0);
            v[i] = 1;
            null.push_back(std::move(v));
        }
    } else {
        null = nullspace(rows);
    }
    std::vector<mpq_class> x0;
    for (int i = 0; i < l; ++i) x0.emplace_back(kEvalPoint[i]);
    for (const QVec& v : null) {
        Derivation der;
        der.degree = d;
        for (int comp = 0; comp < l; ++comp) {
            MultiPoly p(l);
            for (int m = 0; m < per; ++m) p.add_term(monos[m], v[comp * per + m]);
            der.components.push_back(std::move(p));
        }
        for (int comp = 0; comp < l; ++comp) der.eval.push_back(der.components[comp].eval(x0));
        out.push_back(std::move(der));
    }
    return out;
}

/// Reduce to at most l derivations whose evaluation vectors span the same
/// subspace of Q^l.
std::vector<Derivation> reduce_by_evaluation(std::vector<Derivation> ders, int l) {
    std::vector<Derivation> kept;
    QMat rows;
    for (auto& d : ders) {
        rows.push_back(d.eval);
        if (rank(rows) == static_cast<int>(rows.size())) {
            kept.push_back(std::move(d));
            if (static_cast<int>(kept.size()) == l) break;
        } else {
            rows.pop_back();
        }
    }
    return kept;
}

int eval_rank(const std::vector<const Derivation*>& chosen) {
    QMat rows;
    for (const Derivation* d : chosen) rows.push_back(d->eval);
    return rank(rows);
}

}  // namespace

FreenessResult freeness_decide(const Arrangement& a) {
    FreenessResult res;
    int l = a.dim;
    if (l > 5 || a.size() > 16) {
        res.status = FreenessStatus::out_of_range;
        res.detail = "oracle handles dim <= 5 and at most 16 hyperplanes";
        return res;
    }
    res.chi = characteristic_polynomial(a);
    if (a.size() == 0) {
        res.status = FreenessStatus::is_free;
        res.exponents.assign(l, 0);
        for (int i = 0; i < l; ++i) {
            std::vector<std::string> row(l, "0");
            row[i] = "1";
            res.basis.push_back(std::move(row));
        }
        res.detail = "empty arrangement";
        return res;
    }

    auto roots = nonneg_integer_roots(res.chi);
    if (!roots) {
        res.status = FreenessStatus::non_free;
        res.detail =
            "characteristic polynomial does not split over the non-negative integers: " +
            res.chi.pretty();
        return res;
    }
    std::vector<long> exps;
    for (const auto& r : *roots) exps.push_back(r.get_si());

    // stages: distinct degrees ascending, with multiplicities
    std::vector<std::pair<int, int>> stages;
    for (long e : exps) {
        if (!stages.empty() && stages.back().first == e)
            ++stages.back().second;
        else
            stages.push_back({static_cast<int>(e), 1});
    }

    std::vector<const Derivation*> chosen;
    std::vector<std::vector<Derivation>> pools;
    int needed = 0;
    for (auto [deg, mult] : stages) {
        pools.push_back(reduce_by_evaluation(graded_piece(a, deg), l));
        needed += mult;
        // the chosen prefix must reach rank `needed` using this pool
        QMat probe;
        for (size_t s = 0; s < pools.size(); ++s)
            for (const Derivation& d : pools[s]) probe.push_back(d.eval);
        if (rank(probe) < needed) {
            res.status = FreenessStatus::non_free;
            std::ostringstream os;
            os << "no derivation basis with degrees";
            for (long e : exps) os << " " << e;
            os << ": graded evaluation span has rank " << rank(probe) << " < " << needed
               << " through degree " << deg;
            res.detail = os.str();
            return res;
        }
    }

    std::function<bool(size_t, int)> dfs = [&](size_t stage, int taken_in_stage) {
        if (stage == stages.size()) return eval_rank(chosen) == l;
        if (taken_in_stage == stages[stage].second) return dfs(stage + 1, 0);
        int want = static_cast<int>(chosen.size()) + 1;
        for (const Derivation& d : pools[stage]) {
            chosen.push_back(&d);
            if (eval_rank(chosen) == want && dfs(stage, taken_in_stage + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!dfs(0, 0)) {
        res.status = FreenessStatus::non_free;
        std::ostringstream os;
        os << "no independent derivation tuple at degrees";
        for (long e : exps) os << " " << e;
        res.detail = os.str();
        return res;
    }

    // Verify the certificate symbolically: det(theta_i(x_j)) = c * Q.
    std::vector<std::vector<MultiPoly>> m;
    for (const Derivation* d : chosen) m.push_back(d->components);
    MultiPoly det = determinant(m);
    MultiPoly q = MultiPoly::constant(l, 1);
    for (const Hyperplane& h : a.hyperplanes) {
        MultiPoly lin(l);
        for (int i = 0; i < l; ++i)
            if (h.normal[i] != 0) lin = lin + MultiPoly::variable(l, i) * mpq_class(h.normal[i]);
        q = q * lin;
    }
    std::vector<mpq_class> x0;
    for (int i = 0; i < l; ++i) x0.emplace_back(kEvalPoint[i]);
    mpq_class c = det.eval(x0) / q.eval(x0);
    if (c == 0 || !(det == q * c))
        throw std::logic_error("freeness_decide: determinant is not a multiple of Q");

    res.status = FreenessStatus::is_free;
    res.exponents = exps;
    std::vector<std::string> names;
    for (int i = 0; i < l; ++i) names.push_back("x" + std::to_string(i + 1));
    for (const Derivation* d : chosen) {
        std::vector<std::string> row;
        for (const MultiPoly& p : d->components) row.push_back(p.pretty(names));
        res.basis.push_back(std::move(row));
    }
    res.detail = "derivation determinant equals " + c.get_str() + " * Q";
    return res;
}

}  // namespace sga
