#include "forge/rng.hpp"

namespace forge {

namespace {

bool half_integer(const Scalar& s) {
    if (!s.is_real()) return false;
    mpq_class twice = s.re() * 2;
    return twice.get_den() == 1;
}

}  // namespace

std::vector<Scalar> ParamRng::generic_lambda(int n) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Scalar> lam;
        for (int j = 0; j < n; ++j) lam.push_back(rational(1, 9, 11));
        bool ok = true;
        for (int j = 0; j < n && ok; ++j)
            if (half_integer(lam[j])) ok = false;
        if (!ok) continue;
        // Sums and differences that control the residue eigenvalues at 1 and
        // infinity and the table entries.
        Scalar s01 = lam[0] + lam[1], d01 = lam[0] - lam[1];
        Scalar tail = lam[1];
        for (int j = 2; j < n; ++j) tail = tail + lam[j];
        if (half_integer(s01) || half_integer(d01) || half_integer(tail) ||
            half_integer(tail + lam[0]) || half_integer(tail - lam[0]))
            continue;
        return lam;
    }
    throw Error("RngExhausted", "could not draw a generic lambda tuple");
}

TildePoint ParamRng::generic_line(int n) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        LineParams p;
        p.a = rational(2, 9, 5);
        p.b = rational(2, 9, 5);
        for (int i = 0; i < n - 2; ++i) {
            p.c.push_back(rational(1, 5, 7));
            p.d.push_back(rational(1, 5, 7));
        }
        try {
            TildePoint tp = etale_lift(p);
            singular_locus(tp);
            return tp;
        } catch (const Error&) {
            continue;
        }
    }
    throw Error("RngExhausted", "could not draw a generic line");
}

}  // namespace forge
