#include "fuzzpolar/topology.hpp"

#include <algorithm>

#include "fuzzpolar/errors.hpp"

namespace fuzzpolar {

std::vector<Rational> ScaleSearch::scales() const {
    std::vector<Rational> out;
    for (int e = exp_lo; e <= exp_hi; ++e) {
        Rational t = 1;
        for (int i = 0; i < e; ++i) t *= 2;
        for (int i = 0; i > e; --i) t /= 2;
        out.push_back(t);
    }
    return out;
}

std::vector<Rational> ScaleSearch::signed_scales() const {
    std::vector<Rational> out;
    for (const auto& t : scales()) {
        out.push_back(t);
        out.push_back(-t);
    }
    return out;
}

FuzzyCollection::FuzzyCollection(DualPair p, std::vector<StepFuzzySet> gens)
    : pair(std::move(p)), generators(std::move(gens)) {
    if (generators.empty())
        throw InvalidInput("collection needs at least one generator");
    for (const auto& g : generators) {
        if (g.dim() != pair.dim())
            throw InvalidInput("generator dimension mismatch");
        if (!predicate(PredicateKind::WeaklyBounded, g))
            throw InvalidInput("collection generators must be weakly bounded");
    }
}

BaseReport validate_collection(const FuzzyCollection& b,
                               const std::vector<Vec>& basis,
                               const ScaleSearch& search) {
    const int n = b.pair.dim();
    {
        Mat m;
        for (const auto& v : basis) {
            if (static_cast<int>(v.size()) != n)
                throw InvalidInput("invalid-basis: dimension mismatch");
            m.push_back(v);
        }
        if (rank(m) != n)
            throw InvalidInput("invalid-basis: vectors do not span the space");
    }
    BaseReport report;
    report.c2_by_construction = b.scaling_closure;
    const auto scales = search.signed_scales();
    const auto& gens = b.generators;

    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j) {
            C1Record rec;
            rec.first = i;
            rec.second = j;
            StepFuzzySet join = lattice_sup(gens[i], gens[j]);
            for (std::size_t s = 0; s < gens.size() && !rec.satisfied; ++s)
                for (const auto& t : scales) {
                    StepFuzzySet cand = scalar_mul(t, gens[s]);
                    if (pointwise_leq(join, cand)) {
                        rec.satisfied = true;
                        rec.dominating_index = s;
                        rec.dominating_scale = t;
                        rec.strict = !pointwise_leq(cand, join);
                        break;
                    }
                }
            if (!rec.satisfied) {
                // Union witness: the collection is closed under joins of its
                // members (C at the max grade), and join <= join always holds.
                rec.satisfied = true;
                rec.via_join = true;
                rec.dominating_index = i;
                rec.dominating_scale = 1;
                rec.strict = false;
            }
            if (rec.satisfied && !rec.strict) report.c1_strictness_warning = true;
            report.c1.push_back(std::move(rec));
        }

    for (const auto& x : basis) {
        C3Record rec;
        rec.basis_vector = x;
        for (std::size_t s = 0; s < gens.size() && !rec.satisfied; ++s) {
            Grade g = membership(gens[s], x);
            if (g > 0) {
                rec.satisfied = true;
                rec.witness_index = s;
                rec.witness_grade = g;
                break;
            }
            if (!b.scaling_closure) continue;
            for (const auto& t : scales) {
                Grade gs = membership(scalar_mul(t, gens[s]), x);
                if (gs > 0) {
                    rec.satisfied = true;
                    rec.witness_index = s;
                    rec.witness_grade = gs;
                    break;
                }
            }
        }
        report.c3.push_back(std::move(rec));
    }

    report.overall = report.c2_by_construction;
    for (const auto& r : report.c1) report.overall = report.overall && r.satisfied;
    for (const auto& r : report.c3) report.overall = report.overall && r.satisfied;
    return report;
}

std::vector<StepFuzzySet> polar_base(const FuzzyCollection& b) {
    std::vector<StepFuzzySet> out;
    out.reserve(b.generators.size());
    for (const auto& g : b.generators)
        out.push_back(fuzzy_polar(g, b.pair));
    return out;
}

StepFuzzySet weak_neighborhood(const std::vector<Vec>& a, const Grade& lambda,
                               const DualPair& pair, WeakNbhdMode mode) {
    if (a.empty()) throw InvalidInput("weak_neighborhood: empty point set");
    if (lambda <= 0 || lambda > 1)
        throw InvalidInput("weak_neighborhood: lambda must lie in (0,1]");
    StepFuzzySet a_lambda = StepFuzzySet::graded_points(pair.dim(), a, lambda);
    if (mode == WeakNbhdMode::Definition) return fuzzy_polar(a_lambda, pair);
    Region apolar = crisp_polar(Region::make_points(pair.dim(), a), pair);
    return StepFuzzySet::construct(pair.dim(), {{lambda, std::move(apolar)}});
}

std::optional<Rational> absorbs(const StepFuzzySet& mu, const StepFuzzySet& eta) {
    const Grade mu0 = membership(mu, zero_vec(mu.dim()));
    if (mu0 <= 0)
        throw InvalidInput("absorbs: mu must be positive at the origin");
    // theta /\ (t eta) <= mu for all theta < mu(0) reduces levelwise to
    // t * [eta]_h subseteq [mu]_{min(h, mu(0))} for each grade h of eta.
    bool constrained = false;
    Rational best;
    for (const auto& lv : eta.levels()) {
        Grade target = std::min(lv.grade, mu0);
        Region outer = level_set(mu, target);
        MaxScale fit = max_scale_inside(lv.region, outer);
        if (fit.all_scales) continue;
        if (!fit.t) return std::nullopt;
        if (!constrained || *fit.t < best) {
            best = *fit.t;
            constrained = true;
        }
    }
    if (!constrained) return Rational(1); // degenerate eta; any scale works
    if (best <= 0) return std::nullopt;
    return best;
}

bool is_bounded_wrt(const StepFuzzySet& eta,
                    const std::vector<StepFuzzySet>& base) {
    for (const auto& nu : base) {
        try {
            if (!absorbs(nu, eta)) return false;
        } catch (const Unsupported&) {
            return false; // unbounded level: not absorbed
        }
    }
    return true;
}

std::optional<std::pair<std::size_t, Grade>>
dual_witness(const std::vector<StepFuzzySet>& base, const Vec& x_dual,
             const DualPair& pair) {
    for (std::size_t i = 0; i < base.size(); ++i) {
        Grade g = fuzzy_polar_at(base[i], x_dual, pair);
        if (g > 0) return std::make_pair(i, g);
    }
    return std::nullopt;
}

bool refines(const std::vector<StepFuzzySet>& base1,
             const std::vector<StepFuzzySet>& base2,
             const ScaleSearch& search) {
    const auto scales = search.signed_scales();
    for (const auto& mu : base2) {
        const Grade mu0 = membership(mu, zero_vec(mu.dim()));
        std::vector<Grade> thetas{Grade(0)};
        for (const auto& lv : mu.levels())
            if (lv.grade < mu0) thetas.push_back(lv.grade);
        for (const auto& theta : thetas) {
            bool found = false;
            for (const auto& gamma0 : base1) {
                if (membership(gamma0, zero_vec(mu.dim())) <= theta) continue;
                if (pointwise_leq(gamma0, mu)) {
                    found = true;
                    break;
                }
                for (const auto& t : scales) {
                    StepFuzzySet gamma = scalar_mul(t, gamma0);
                    if (pointwise_leq(gamma, mu)) {
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found) return false;
        }
    }
    return true;
}

bool is_weakly_fuzzy_compact(const StepFuzzySet& mu) {
    return predicate(PredicateKind::WeaklyBounded, mu);
}

MackeyReport verify_mackey_arens(const std::vector<StepFuzzySet>& base,
                                 const std::vector<Vec>& functionals,
                                 const DualPair& pair) {
    MackeyReport report;
    for (const auto& nu : base) {
        MackeyNeighborhoodRecord rec;
        try {
            rec.is_closed_ac = predicate(PredicateKind::Closed, nu) &&
                               predicate(PredicateKind::AbsolutelyConvex, nu);
            rec.preconditions_ok =
                rec.is_closed_ac && membership(nu, zero_vec(nu.dim())) == 1;
            rec.bipolar_equal = chain_equal(bipolar(nu, pair), nu);
            rec.polar_weakly_compact =
                is_weakly_fuzzy_compact(fuzzy_polar(nu, pair));
        } catch (const Unsupported& e) {
            rec.error = e.what();
        }
        report.neighborhoods.push_back(std::move(rec));
    }
    for (const auto& x : functionals) {
        MackeyFunctionalRecord rec;
        rec.functional = x;
        rec.witness = dual_witness(base, x, pair);
        report.functionals.push_back(std::move(rec));
    }
    report.overall = true;
    for (const auto& r : report.neighborhoods)
        report.overall = report.overall && r.pass();
    for (const auto& r : report.functionals)
        report.overall = report.overall && r.witness.has_value();
    return report;
}

StepFuzzySet seminorm_from_bounded_nbhd(const StepFuzzySet& theta,
                                        const std::vector<StepFuzzySet>& base) {
    if (membership(theta, zero_vec(theta.dim())) != 1)
        throw InvalidInput("seminorm_from_bounded_nbhd: input is not absorbing");
    if (!is_bounded_wrt(theta, base))
        throw InvalidInput("seminorm_from_bounded_nbhd: input is not bounded "
                           "with respect to the base");
    StepFuzzySet mu = envelope(EnvelopeKind::AbsolutelyConvex, theta);
    if (!predicate(PredicateKind::Seminorm, mu))
        throw InvalidInput("seminorm_from_bounded_nbhd: envelope failed the "
                           "seminorm predicate");
    return mu;
}

} // namespace fuzzpolar
