#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfrob/linsolve.hpp"
#include "hopfrob/parallel.hpp"
#include "hopfrob/report.hpp"
#include "hopfrob/tensor.hpp"

namespace hopfrob {

// Sorts raw (index, value) pairs, merges duplicates and drops zeros.
SparseVec collect(std::vector<std::pair<int, Scalar>> raw);

// Covectors (linear functionals) are stored as SparseVec of values on basis elements.
Scalar evaluate(const SparseVec& functional, const SparseVec& x);

// Finite-dimensional Hopf algebra by structure constants.  Elements are
// SparseVec over the basis; H(x)H is indexed j * dim + k, H(x)H(x)H as
// (i * dim + j) * dim + k.
struct FinHopf {
    std::string name;
    int dim = 0;
    int conductor = 1;
    std::vector<std::string> labels;
    SparseTensor mult;    // shape {n,n,n}, split 2
    SparseTensor comult;  // shape {n,n,n}, split 1
    SparseVec unit;
    SparseVec counit;
    Matrix antipode;
    std::vector<std::string> conventions;
    // Optional algebra generators; enables generator-reduced axiom checks.
    std::vector<int> generators;

    SparseVec basis(int a) const { return unit_vec(a); }
    int index_of(const std::string& label) const;
    std::string element_str(const SparseVec& x) const;

    const SparseVec& mul_basis(int a, int b) const { return mult.fiber(a * dim + b); }
    SparseVec mul(const SparseVec& x, const SparseVec& y) const;
    SparseVec mul(const std::vector<SparseVec>& factors) const;
    const SparseVec& delta_basis(int a) const { return comult.fiber(a); }
    SparseVec delta(const SparseVec& x) const;
    // (Delta (x) id) Delta
    SparseVec delta2(const SparseVec& x) const;
    Scalar eps(const SparseVec& x) const { return evaluate(counit, x); }
    SparseVec S(const SparseVec& x) const { return antipode.apply(x); }

    // Product in H (x) H.
    SparseVec mul2(const SparseVec& x, const SparseVec& y) const;
    Matrix left_mult_matrix(const SparseVec& x) const;
    Matrix right_mult_matrix(const SparseVec& x) const;

    // Pure tensors: x (x) y in H (x) H.
    SparseVec tensor2(const SparseVec& x, const SparseVec& y) const;
};

using HopfPtr = std::shared_ptr<const FinHopf>;

// Hopf algebra map K -> H; embed is dim H x dim K.
struct HopfInclusion {
    std::string name;
    HopfPtr K;
    HopfPtr H;
    Matrix embed;

    SparseVec iota(const SparseVec& k) const { return embed.apply(k); }
};

// Throws std::invalid_argument when tensors are inconsistent with dim.
void check_shape(const FinHopf& h);

// Axiom report: associativity, unitality, coassociativity, counitality,
// bialgebra compatibility, antipode, antipode invertibility.  Exhaustive over
// basis triples for dim <= 64 or without a generators hint; otherwise the
// multiplicative axioms are reduced to generators after verifying that the
// generators span H as an algebra.
Report verify_hopf(const FinHopf& h, Exec exec = Exec::Parallel, bool force_exhaustive = false);

Matrix antipode_inverse(const FinHopf& h);
FinHopf dual_hopf(const FinHopf& h);

enum class Side { Left, Right };

// Integrals normalized so the first nonzero coordinate is 1.
std::vector<SparseVec> integral_space(const FinHopf& h, Side side);
// alpha_H with a * Lambda = alpha_H(a) Lambda for the right integral Lambda.
SparseVec distinguished_grouplike(const FinHopf& h);
bool is_unimodular(const FinHopf& h);
// Right integral lambda of H* as a covector on H: lambda(h_1) h_2 = lambda(h) 1.
SparseVec dual_right_integral(const FinHopf& h);
// Left integral of H*: h_1 lambda(h_2) = lambda(h) 1.
SparseVec dual_left_integral(const FinHopf& h);
bool is_dual_unimodular(const FinHopf& h);

// Convolution of functionals on a coalgebra: (f * g)(x) = f(x_1) g(x_2).
SparseVec convolve(const FinHopf& h, const SparseVec& f, const SparseVec& g);

// True when the functional is multiplicative and unital; on failure
// witness receives the offending basis pair.
bool is_algebra_map(const FinHopf& h, const SparseVec& f, std::string* witness = nullptr);

}  // namespace hopfrob
