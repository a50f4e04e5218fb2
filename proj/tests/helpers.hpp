#pragma once

#include <random>

#include "forge/forms.hpp"

namespace forge::testing {

inline ChartPtr chart_xy() { return make_chart({"x", "y"}, 2); }

// Deterministic small-rational generator for property tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) { return lo + static_cast<long>(eng_() % (hi - lo + 1)); }

    Scalar rational(long maxnum = 9, long maxden = 7) {
        long n = integer(-maxnum, maxnum);
        long d = integer(1, maxden);
        return Scalar(n, d);
    }

    Scalar nonzero_rational(long maxnum = 9, long maxden = 7) {
        for (;;) {
            Scalar s = rational(maxnum, maxden);
            if (!s.is_zero()) return s;
        }
    }

    Poly poly(const ChartPtr& chart, int max_terms = 4, int max_deg = 3) {
        std::vector<Term> terms;
        int k = static_cast<int>(integer(1, max_terms));
        for (int t = 0; t < k; ++t) {
            Mono m;
            for (std::size_t v = 0; v < chart->vars.size(); ++v)
                m.set_exp(static_cast<int>(v), static_cast<int>(integer(0, max_deg)));
            terms.push_back({m, rational()});
        }
        return Poly::from_terms(chart, std::move(terms));
    }

    Poly nonzero_poly(const ChartPtr& chart, int max_terms = 4, int max_deg = 3) {
        for (;;) {
            Poly p = poly(chart, max_terms, max_deg);
            if (!p.is_zero()) return p;
        }
    }

    RationalFn rational_fn(const ChartPtr& chart) {
        RationalFn r(poly(chart));
        int nf = static_cast<int>(integer(0, 2));
        for (int k = 0; k < nf; ++k) {
            Poly d = nonzero_poly(chart, 2, 1);
            if (d.is_constant()) continue;
            r = r.div_factor(d, static_cast<int>(integer(1, 2)));
        }
        return r;
    }

    OneForm one_form(const ChartPtr& chart) {
        OneForm w(chart);
        for (int v = 0; v < chart->n_diff; ++v) w.coeff(v) = rational_fn(chart);
        return w;
    }

    std::vector<Scalar> point(const ChartPtr& chart) {
        std::vector<Scalar> pt;
        for (std::size_t v = 0; v < chart->vars.size(); ++v) pt.push_back(rational(7, 5));
        return pt;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace forge::testing
