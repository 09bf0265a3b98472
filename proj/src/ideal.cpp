#include "rookh/ideal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace rookh {

Monomial shadow_monomial(const RookPlacement& r, const LocusParams& params) {
    return monomial_of(extended_shadow_set(r, params));
}

namespace {

PolynomialExact row_sum(const LocusParams& params, int i) {
    PolynomialExact p;
    for (int j = 1; j <= params.m; ++j) p.add_term(Monomial::variable({i, j}), 1);
    return p;
}

PolynomialExact column_sum(const LocusParams& params, int j) {
    PolynomialExact p;
    for (int i = 1; i <= params.n; ++i) p.add_term(Monomial::variable({i, j}), 1);
    return p;
}

// All k-subsets of 1..bound, increasing.
void for_each_subset(int bound, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(idx.size()) == k) {
            fn(idx);
            return;
        }
        for (int v = next; v <= bound; ++v) {
            idx.push_back(v);
            self(self, v + 1);
            idx.pop_back();
        }
    };
    rec(rec, 1);
}

void push_unique(std::vector<PolynomialExact>& out, const PolynomialExact& g) {
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
}

void append_quadratic_generators(const LocusParams& params, std::vector<PolynomialExact>& out) {
    for (int i = 1; i <= params.n; ++i)
        for (int j = 1; j <= params.m; ++j)
            for (int j2 = j; j2 <= params.m; ++j2)
                push_unique(out, PolynomialExact::term(Monomial::variable({i, j}) *
                                                       Monomial::variable({i, j2})));
    for (int j = 1; j <= params.m; ++j)
        for (int i = 1; i <= params.n; ++i)
            for (int i2 = i; i2 <= params.n; ++i2)
                push_unique(out, PolynomialExact::term(Monomial::variable({i, j}) *
                                                       Monomial::variable({i2, j})));
}

}  // namespace

std::vector<PolynomialExact> generators_I(const LocusParams& params) {
    std::vector<PolynomialExact> out;
    append_quadratic_generators(params, out);
    if (params.r >= 1) {
        for_each_subset(params.n, params.n - params.r + 1, [&](const std::vector<int>& rows) {
            PolynomialExact prod = PolynomialExact::constant(1);
            for (int i : rows) prod = prod * row_sum(params, i);
            push_unique(out, prod);
        });
        for_each_subset(params.m, params.m - params.r + 1, [&](const std::vector<int>& cols) {
            PolynomialExact prod = PolynomialExact::constant(1);
            for (int j : cols) prod = prod * column_sum(params, j);
            push_unique(out, prod);
        });
    }
    return out;
}

std::vector<PolynomialExact> vanishing_witnesses(const LocusParams& params) {
    std::vector<PolynomialExact> out;
    // Products of two distinct variables in one row or column vanish as they
    // stand; a square x^2 needs the correction x^2 - x (entries are 0 or 1).
    auto quadratic_witness = [](VariableIndex a, VariableIndex b) {
        PolynomialExact w = PolynomialExact::term(Monomial::variable(a) * Monomial::variable(b));
        if (a == b) w -= PolynomialExact::term(Monomial::variable(a));
        return w;
    };
    for (int i = 1; i <= params.n; ++i)
        for (int j = 1; j <= params.m; ++j)
            for (int j2 = j; j2 <= params.m; ++j2)
                push_unique(out, quadratic_witness({i, j}, {i, j2}));
    for (int j = 1; j <= params.m; ++j)
        for (int i = 1; i <= params.n; ++i)
            for (int i2 = i; i2 <= params.n; ++i2)
                push_unique(out, quadratic_witness({i, j}, {i2, j}));
    if (params.r >= 1) {
        const PolynomialExact one = PolynomialExact::constant(1);
        for_each_subset(params.n, params.n - params.r + 1, [&](const std::vector<int>& rows) {
            PolynomialExact prod = PolynomialExact::constant(1);
            for (int i : rows) prod = prod * (row_sum(params, i) - one);
            push_unique(out, prod);
        });
        for_each_subset(params.m, params.m - params.r + 1, [&](const std::vector<int>& cols) {
            PolynomialExact prod = PolynomialExact::constant(1);
            for (int j : cols) prod = prod * (column_sum(params, j) - one);
            push_unique(out, prod);
        });
    }
    return out;
}

namespace {

PolynomialExact symmetrizer_element(const std::vector<int>& support, const RookPlacement& r,
                                    bool permute_rows) {
    std::vector<int> sorted = support;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("symmetrizer_element: repeated index in the support set");
    const int bound = permute_rows ? r.board_n() : r.board_m();
    if (!sorted.empty() && (sorted.front() < 1 || sorted.back() > bound))
        throw std::invalid_argument("symmetrizer_element: support set outside the board");

    std::map<int, int> where;
    for (size_t k = 0; k < sorted.size(); ++k) where[sorted[k]] = static_cast<int>(k);

    PolynomialExact out;
    std::vector<int> image = sorted;
    do {
        std::vector<std::pair<VariableIndex, int>> factors;
        factors.reserve(static_cast<size_t>(r.size()));
        for (const Cell& c : r.cells()) {
            int i = c.i, j = c.j;
            if (permute_rows) {
                auto it = where.find(i);
                if (it != where.end()) i = image[static_cast<size_t>(it->second)];
            } else {
                auto it = where.find(j);
                if (it != where.end()) j = image[static_cast<size_t>(it->second)];
            }
            factors.push_back({{i, j}, 1});
        }
        out.add_term(Monomial(std::move(factors)), 1);
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

}  // namespace

PolynomialExact row_symmetrizer_element(const std::vector<int>& s, const RookPlacement& r) {
    return symmetrizer_element(s, r, true);
}

PolynomialExact column_symmetrizer_element(const std::vector<int>& t, const RookPlacement& r) {
    return symmetrizer_element(t, r, false);
}

long long monomial_space_dimension(int n, int m, int degree) {
    // C(n*m + degree - 1, degree)
    long long out = 1;
    const long long vars = static_cast<long long>(n) * m;
    for (int t = 0; t < degree; ++t) out = out * (vars + t) / (t + 1);
    return out;
}

std::vector<Monomial> all_monomials_of_degree(int n, int m, int degree) {
    std::vector<VariableIndex> vars;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) vars.push_back({i, j});
    std::vector<Monomial> out;
    std::vector<std::pair<VariableIndex, int>> acc;
    auto rec = [&](auto&& self, size_t next, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(Monomial(acc));
            return;
        }
        if (next == vars.size()) return;
        self(self, next + 1, remaining);  // exponent 0 on vars[next]
        for (int e = 1; e <= remaining; ++e) {
            acc.push_back({vars[next], e});
            self(self, next + 1, remaining - e);
            acc.pop_back();
        }
    };
    rec(rec, 0, degree);
    return out;
}

namespace {

// Sparse elimination keyed by monomials; pivots are normalized to 1.
class SparseSpan {
public:
    size_t rank() const { return rows_.size(); }

    void add(std::map<Monomial, mpq_class> v) {
        while (!v.empty()) {
            const Monomial& lead = v.rbegin()->first;
            auto it = rows_.find(lead);
            if (it == rows_.end()) {
                const mpq_class scale = 1 / v.rbegin()->second;
                for (auto& [mono, c] : v) c *= scale;
                rows_.emplace(lead, std::move(v));
                return;
            }
            const mpq_class factor = v.rbegin()->second;
            for (const auto& [mono, c] : it->second) {
                auto [vit, inserted] = v.emplace(mono, -factor * c);
                if (!inserted) {
                    vit->second -= factor * c;
                    if (vit->second == 0) v.erase(vit);
                }
            }
        }
    }

private:
    std::map<Monomial, std::map<Monomial, mpq_class>> rows_;
};

}  // namespace

long long ideal_degree_dimension(const std::vector<PolynomialExact>& gens, int degree, int n,
                                 int m) {
    SparseSpan span;
    for (const PolynomialExact& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous())
            throw std::invalid_argument("ideal_degree_dimension: generators must be homogeneous");
        const int k = degree - g.degree();
        if (k < 0) continue;
        for (const Monomial& mult : all_monomials_of_degree(n, m, k)) {
            std::map<Monomial, mpq_class> v;
            for (const auto& [mono, c] : g.terms()) v.emplace(mono * mult, c);
            span.add(std::move(v));
        }
    }
    return static_cast<long long>(span.rank());
}

}  // namespace rookh
