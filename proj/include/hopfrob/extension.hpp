#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hopfrob/hopf.hpp"

namespace hopfrob {

// Injectivity and the five intertwining conditions of a Hopf map K -> H.
Report verify_inclusion(const HopfInclusion& incl);

// H-bar = H / H K^+ with coset representatives chosen greedily from the
// standard basis of H in declared order.
struct BarQuotient {
    int dimbar = 0;
    Matrix proj;              // dimbar x dim H
    SparseTensor comult_bar;  // shape {m,m,m}, split 1
    SparseVec counit_bar;
    SparseVec coaug;           // proj(1_H)
    std::vector<int> reps;     // H-basis index representing each H-bar basis vector
    std::vector<SparseVec> kernel_basis;  // reduced basis of H K^+

    SparseVec bar(const SparseVec& h) const { return proj.apply(h); }
};

BarQuotient bar_quotient(const HopfInclusion& incl);
Report verify_bar_quotient(const HopfInclusion& incl, const BarQuotient& bq);

// Right integral of H-bar*: (lambda (x) id) Delta-bar = lambda(.) 1-bar.
// Representative: first nonzero coordinate equals dim H-bar, times `scale`.
SparseVec right_integral_bar_dual(const BarQuotient& bq, const Scalar& scale = Scalar(1));

// chi(k) = lambda(bar(k h0)) / lambda(bar(h0)), verified for all basis pairs.
std::optional<SparseVec> relative_modular_function(const HopfInclusion& incl, const BarQuotient& bq,
                                                   const SparseVec& lambda);
// Solution Lambda of lambda(bar(Lambda h)) = eps(h) for all h, if any.
std::optional<SparseVec> check_integral_type(const HopfInclusion& incl, const BarQuotient& bq,
                                             const SparseVec& lambda);

struct FrobeniusDecision {
    bool frobenius = false;
    bool via_chi = false;
    bool via_alpha = false;
    bool chi_convolution_identity = false;  // chi = alpha_H|K * (alpha_K o S_K)
    SparseVec chi, alpha_H, alpha_K;
};
// Throws std::logic_error when the two criteria disagree.
FrobeniusDecision is_frobenius_extension(const HopfInclusion& incl);

// Free basis h_1..h_r with H = sum_i K h_i (left) or sum_i h_i K (right),
// and the decomposition matrix sending h to coordinates (i * dim K + a).
struct FreeBasis {
    std::vector<int> elems;
    Matrix decomp;  // (r dim K) x dim H
};
enum class FreeSide { Left, Right };
// Throws std::runtime_error("free basis not found along declared order").
FreeBasis free_basis(const HopfInclusion& incl, FreeSide side = FreeSide::Left);

struct AnalysisOptions {
    Scalar lambda_scale = Scalar(1);
};

// Derived data of a Frobenius extension.
struct FrobeniusContext {
    HopfInclusion incl;
    BarQuotient bq;
    SparseVec lambda;       // on H-bar
    SparseVec lambda_lift;  // lambda o proj on H
    FrobeniusDecision decision;
    std::optional<SparseVec> Lambda;
    Matrix tr;         // dim K x dim H
    FreeBasis left;    // h_i for the dual-basis identities and coinduction
    FreeBasis right;   // carrier basis of induced modules
    std::vector<SparseVec> delta;  // dual elements delta_i, paired with left.elems
    bool central = false;
    int r = 0;

    const FinHopf& H() const { return *incl.H; }
    const FinHopf& K() const { return *incl.K; }
    SparseVec tr_of(const SparseVec& h) const { return tr.apply(h); }
    // tr as an element of H.
    SparseVec tr_in_H(const SparseVec& h) const { return incl.iota(tr.apply(h)); }
};

// tr(h) = lambda(bar(h_1)) h_2 in K-coordinates; nullopt when the image leaves K.
std::optional<Matrix> frobenius_morphism(const HopfInclusion& incl, const BarQuotient& bq, const SparseVec& lambda);
Report verify_frobenius_morphism(const HopfInclusion& incl, const Matrix& tr);
// delta_i with tr(h_j delta_i) = delta_ij 1_K.
std::vector<SparseVec> dual_bases(const HopfInclusion& incl, const Matrix& tr, const FreeBasis& left);

bool is_central_extension(const HopfInclusion& incl, const BarQuotient& bq, const SparseVec& lambda,
                          Report* rep = nullptr);
bool is_normal_subalgebra(const HopfInclusion& incl);
bool bar_dual_is_unimodular(const BarQuotient& bq, const SparseVec& lambda);

// lambda'(bar h) = lambda_H(h Lambda_K); nullopt when proportionality fails.
std::optional<Scalar> fms_lambda_ratio(const HopfInclusion& incl, const BarQuotient& bq, const SparseVec& lambda);

// Full pipeline; throws std::runtime_error when the extension is not Frobenius.
FrobeniusContext make_frobenius_context(const HopfInclusion& incl, const AnalysisOptions& opt = {});
// Dual-basis identities and the balanced-tensor identity, one check each.
Report verify_dual_bases(const FrobeniusContext& ctx);

// Coordinates of x (x)_K w in the free right K-module carrier: x = sum_j b_j k_j,
// result sum_j b_j (x) k_j w with index j * dim V + a.  act(k, w) is the
// K-action on V for a K-element k.
SparseVec balanced_coords(const FrobeniusContext& ctx, const SparseVec& x, const SparseVec& w, int dimV,
                          const std::function<SparseVec(const SparseVec&, const SparseVec&)>& act);

// Pipeline report of the analyze command.
struct AnalysisResult {
    Report report;
    std::optional<FrobeniusContext> ctx;
};
AnalysisResult analyze_extension(const HopfInclusion& incl, const AnalysisOptions& opt = {});

}  // namespace hopfrob
