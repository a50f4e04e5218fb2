#pragma once

#include <map>
#include <string>

#include "forge/transport.hpp"

namespace forge {

// Monodromy matrices of the Fuchsian system, one per pole label
// t1..t_{2n-2}, "0", "1", plus "inf" closing the ordered product relation
// gamma_{t1} ... gamma_{t_{2n-2}} gamma_0 gamma_1 gamma_inf = 1.
struct MonodromyRep {
    std::vector<std::string> labels;
    std::vector<CMat2> matrices;
    CMat2 boundary;                      // transported big-circle matrix
    double product_identity_error = 0;   // comb-ordered product vs boundary
    double max_det_error = 0;
    double tol = 0;

    const CMat2& by_label(const std::string& l) const;
};

MonodromyRep monodromy_rep(const FuchsianSystem& fs, const PathPlan& plan, double tol);

// The dihedral representation of the deformation tables, numerically
// (a_j = exp(-pi i lambda_j)).
struct ExpectedRep {
    std::vector<std::string> labels;
    std::vector<CMat2> matrices;
    const CMat2& by_label(const std::string& l) const;
};
ExpectedRep expected_rep(int n, const std::vector<Scalar>& lambda);

// Exact 2x2 matrices over Q(i), for replaying the group relations with the
// a_j kept on the unit circle exactly.
struct SMat2 {
    std::array<Scalar, 4> e;
    static SMat2 diag(Scalar a, Scalar b) { return {{std::move(a), Scalar(0), Scalar(0), std::move(b)}}; }
    static SMat2 anti(Scalar a, Scalar b) { return {{Scalar(0), std::move(a), std::move(b), Scalar(0)}}; }
    static SMat2 identity() { return diag(Scalar(1), Scalar(1)); }
    SMat2 operator*(const SMat2& o) const;
    bool operator==(const SMat2& o) const { return e == o.e; }
};

// Unit-circle point (1 - tau^2 + 2 i tau) / (1 + tau^2) from a rational tau.
Scalar unit_circle_point(const Scalar& tau);

// The three fundamental-group relations on the generator images
// (alpha_0, gamma_0, alpha_{y0+}, alpha_{yi+}): commutators with gamma_0 and
// the two squared-product identities. Returns the maximal entry deviation.
double relation_residual(const CMat2& alpha0, const CMat2& gamma0, const CMat2& alphay0,
                         const std::vector<CMat2>& alphayi);
bool check_relations_exact(const SMat2& alpha0, const SMat2& gamma0, const SMat2& alphay0,
                           const std::vector<SMat2>& alphayi);

struct DihedralReport {
    bool ok = false;
    int rectifier = -1;                 // index of the generator whose eigenbasis works
    std::vector<char> kind;             // 'd' diagonal, 'a' antidiagonal, '?' neither
    double max_deviation = 0;
    CMat2 conjugator = CMat2::identity();
};

// Conjugates all matrices into the eigenbasis of some diagonalizable
// generator and classifies each as diagonal or antidiagonal within tol.
DihedralReport dihedral_check(const std::vector<CMat2>& rep, double tol);

// Trace table across parameter samples: generators and all two-letter words;
// reports the max variation per word.
struct TraceScan {
    std::vector<std::string> words;
    std::vector<std::vector<Cplx>> traces;  // [sample][word]
    double max_variation = 0;
};
TraceScan isomonodromy_scan(int n, const std::vector<Scalar>& lambda,
                            const std::vector<TildePoint>& samples, double tol);

}  // namespace forge
