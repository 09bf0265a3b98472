#include "rookh/frobenius.hpp"

#include <stdexcept>

namespace rookh {

namespace {

RookPlacement support_placement(const Monomial& mono, int n, int m) {
    std::vector<Cell> cells;
    cells.reserve(mono.factors().size());
    for (const auto& [v, e] : mono.factors()) {
        if (e != 1) throw std::logic_error("support_placement: monomial not squarefree");
        cells.push_back({v.i, v.j});
    }
    return RookPlacement(n, m, std::move(cells));
}

long long integral_coefficient(const mpq_class& c, const char* who) {
    if (c.get_den() != 1) throw std::invalid_argument(std::string(who) + ": non-integer coefficient");
    if (!c.get_num().fits_slong_p())
        throw std::invalid_argument(std::string(who) + ": coefficient exceeds 64 bits");
    return c.get_num().get_si();
}

}  // namespace

DoublySchurVector frobenius_from_fixed_points(const std::vector<RookPlacement>& locus, int n,
                                              int m) {
    const CharacterTable tn = character_table(n);
    const CharacterTable tm = character_table(m);
    const int cn = static_cast<int>(tn.partitions().size());
    const int cm = static_cast<int>(tm.partitions().size());

    ClassFunction2D fix(cn, cm);
    for (int rho = 0; rho < cn; ++rho) {
        const Permutation rep_n = class_representative(tn.partitions()[static_cast<size_t>(rho)]);
        for (int sigma = 0; sigma < cm; ++sigma) {
            const Permutation rep_m =
                class_representative(tm.partitions()[static_cast<size_t>(sigma)]);
            fix.at(rho, sigma) = static_cast<long>(fixed_point_count(rep_n, rep_m, locus));
        }
    }

    const mpq_class order = mpq_class(static_cast<long>(factorial(n))) * static_cast<long>(factorial(m));
    DoublySchurVector out(n, m);
    for (int l = 0; l < cn; ++l)
        for (int mu = 0; mu < cm; ++mu) {
            mpq_class total = 0;
            for (int rho = 0; rho < cn; ++rho)
                for (int sigma = 0; sigma < cm; ++sigma)
                    total += mpq_class(static_cast<long>(tn.class_size(rho))) *
                             static_cast<long>(tm.class_size(sigma)) * fix.at(rho, sigma) *
                             static_cast<long>(tn.value(l, rho)) *
                             static_cast<long>(tm.value(mu, sigma));
            total /= order;
            if (total == 0) continue;
            if (total.get_den() != 1 || total < 0)
                throw std::invalid_argument(
                    "frobenius_from_fixed_points: locus is not closed under the action");
            out.add(tn.partitions()[static_cast<size_t>(l)],
                    tm.partitions()[static_cast<size_t>(mu)], total);
        }
    return out;
}

GradedDoublySchurSeries graded_frobenius_oracle(const GradedQuotientModel& model) {
    const LocusParams& params = model.params();
    const CharacterTable tn = character_table(params.n);
    const CharacterTable tm = character_table(params.m);
    const int cn = static_cast<int>(tn.partitions().size());
    const int cm = static_cast<int>(tm.partitions().size());

    std::vector<RookPlacement> supports;
    supports.reserve(model.basis().size());
    int top = 0;
    for (const Monomial& b : model.basis()) {
        supports.push_back(support_placement(b, params.n, params.m));
        top = std::max(top, b.degree());
    }

    // trace[d](rho, sigma): character of the degree-d layer at the class pair.
    std::vector<ClassFunction2D> trace(static_cast<size_t>(top) + 1, ClassFunction2D(cn, cm));
    for (int rho = 0; rho < cn; ++rho) {
        const Permutation rep_n = class_representative(tn.partitions()[static_cast<size_t>(rho)]);
        for (int sigma = 0; sigma < cm; ++sigma) {
            const Permutation rep_m =
                class_representative(tm.partitions()[static_cast<size_t>(sigma)]);
            for (size_t k = 0; k < supports.size(); ++k) {
                const RookPlacement moved = act(rep_n, rep_m, supports[k]);
                trace[static_cast<size_t>(model.basis_degree(k))].at(rho, sigma) +=
                    model.basis_coefficient(k, moved);
            }
        }
    }

    const mpq_class order = mpq_class(static_cast<long>(factorial(params.n))) * static_cast<long>(factorial(params.m));
    GradedDoublySchurSeries out(params.n, params.m);
    for (int d = 0; d <= top; ++d) {
        DoublySchurVector layer(params.n, params.m);
        for (int l = 0; l < cn; ++l)
            for (int mu = 0; mu < cm; ++mu) {
                mpq_class total = 0;
                for (int rho = 0; rho < cn; ++rho)
                    for (int sigma = 0; sigma < cm; ++sigma)
                        total += mpq_class(static_cast<long>(tn.class_size(rho))) *
                                 static_cast<long>(tm.class_size(sigma)) *
                                 trace[static_cast<size_t>(d)].at(rho, sigma) *
                                 static_cast<long>(tn.value(l, rho)) *
                                 static_cast<long>(tm.value(mu, sigma));
                total /= order;
                if (total == 0) continue;
                if (total.get_den() != 1 || total < 0)
                    throw std::logic_error("graded_frobenius_oracle: non-integer multiplicity");
                layer.add(tn.partitions()[static_cast<size_t>(l)],
                          tm.partitions()[static_cast<size_t>(mu)], total);
            }
        out.set_layer(d, std::move(layer));
    }
    return out;
}

GradedDoublySchurSeries graded_frobenius_oracle(const LocusParams& params,
                                                const MonomialOrderSpec& spec) {
    return graded_frobenius_oracle(GradedQuotientModel(params, spec));
}

LogConcavityReport check_equivariant_log_concavity(const GradedDoublySchurSeries& series,
                                                   const CharacterTable& tn,
                                                   const CharacterTable& tm) {
    const int cn = static_cast<int>(tn.partitions().size());
    const int cm = static_cast<int>(tm.partitions().size());
    const int top = series.top_degree();

    // Layer characters on class pairs, from the Schur expansions.
    std::vector<std::vector<long long>> chi(static_cast<size_t>(std::max(top + 1, 0)),
                                            std::vector<long long>(static_cast<size_t>(cn * cm), 0));
    for (int d = 0; d <= top; ++d) {
        for (const auto& [key, coeff] : series.layer(d).coefficients()) {
            const long long c = integral_coefficient(coeff, "check_equivariant_log_concavity");
            if (c < 0)
                throw std::invalid_argument(
                    "check_equivariant_log_concavity: negative layer multiplicity");
            const int l = tn.index_of(key.first);
            const int mu = tm.index_of(key.second);
            for (int rho = 0; rho < cn; ++rho)
                for (int sigma = 0; sigma < cm; ++sigma)
                    chi[static_cast<size_t>(d)][static_cast<size_t>(rho * cm + sigma)] +=
                        c * tn.value(l, rho) * tm.value(mu, sigma);
        }
    }

    const mpz_class order = mpz_class(static_cast<long>(factorial(tn.n()))) * static_cast<long>(factorial(tm.n()));
    LogConcavityReport report;
    for (int i = 1; i + 1 <= top; ++i) {
        // Pointwise character of V_i (x) V_i minus V_{i-1} (x) V_{i+1} under
        // the diagonal action, weighted by class sizes.
        std::vector<mpz_class> weighted(static_cast<size_t>(cn * cm));
        for (int rho = 0; rho < cn; ++rho)
            for (int sigma = 0; sigma < cm; ++sigma) {
                const size_t at = static_cast<size_t>(rho * cm + sigma);
                const long long sq = chi[static_cast<size_t>(i)][at];
                const long long lo = chi[static_cast<size_t>(i - 1)][at];
                const long long hi = chi[static_cast<size_t>(i + 1)][at];
                weighted[at] = mpz_class(static_cast<long>(tn.class_size(rho))) *
                               static_cast<long>(tm.class_size(sigma)) *
                               (mpz_class(static_cast<long>(sq)) * static_cast<long>(sq) -
                                mpz_class(static_cast<long>(lo)) * static_cast<long>(hi));
            }
        // partial[rho][beta] = sum_sigma weighted(rho, sigma) chi^beta(sigma).
        std::vector<mpz_class> partial(static_cast<size_t>(cn * cm));
        for (int rho = 0; rho < cn; ++rho)
            for (int beta = 0; beta < cm; ++beta) {
                mpz_class sum = 0;
                for (int sigma = 0; sigma < cm; ++sigma)
                    sum += weighted[static_cast<size_t>(rho * cm + sigma)] *
                           static_cast<long>(tm.value(beta, sigma));
                partial[static_cast<size_t>(rho * cm + beta)] = std::move(sum);
            }
        for (int alpha = 0; alpha < cn; ++alpha)
            for (int beta = 0; beta < cm; ++beta) {
                mpz_class sum = 0;
                for (int rho = 0; rho < cn; ++rho)
                    sum += partial[static_cast<size_t>(rho * cm + beta)] *
                           static_cast<long>(tn.value(alpha, rho));
                if (sum % order != 0)
                    throw std::logic_error(
                        "check_equivariant_log_concavity: non-integer multiplicity difference");
                if (sum < 0) {
                    mpz_class deficit = sum / order;
                    report.passed = false;
                    report.violations.push_back(
                        {i, tn.partitions()[static_cast<size_t>(alpha)],
                         tm.partitions()[static_cast<size_t>(beta)],
                         static_cast<long long>(deficit.get_si())});
                }
            }
    }
    return report;
}

LogConcavityReport check_equivariant_log_concavity(const GradedDoublySchurSeries& series, int n,
                                                   int m) {
    return check_equivariant_log_concavity(series, character_table(n), character_table(m));
}

}  // namespace rookh
