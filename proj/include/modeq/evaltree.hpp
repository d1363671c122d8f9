#ifndef MODEQ_EVALTREE_HPP
#define MODEQ_EVALTREE_HPP

#include <functional>
#include <optional>

#include "modeq/ratfrac.hpp"

namespace modeq {

// Labeled integer tree of depth n with arity N1 at depths 0..n-2 and N2 at
// depth n-1; sons of every vertex are distinct.
struct EvalTree {
    struct Node {
        long label = 0;
        std::vector<Node> sons;
    };

    int n = 1;
    long N1 = 0, N2 = 0;
    long D1 = 0, D2 = 0; // realized amplitudes
    long M = 0;          // label bound
    Node root;           // root label unused

    // Paths of length k (the k-th evaluation set).
    std::vector<std::vector<long>> evaluation_set(int k) const;
    void check_structure() const; // throws "internal" on violation
};

enum class PaperScaleCondition { waived, satisfied };

struct EvalData {
    EvalTree tree;
    std::vector<long> base; // the point a
    long M = 0;
    PaperScaleCondition cond_magnitude = PaperScaleCondition::waived;
    // Greedy construction statistics: per level, the number of integers the
    // avoid-set excluded, and the index of the window finally used.
    std::vector<long> excluded_per_level;
    std::vector<long> window_index_per_level;
};

struct BuildOptions {
    long N2 = 0;            // points at the last level; 0 means 2d+2
    bool strict = false;    // enforce the paper-scale magnitude condition
    std::optional<double> B; // the B of that condition, when known
};

// Greedy tree construction. The base point a is chosen by scanning
// 0, 1, -1, 2, ... so den(a) != 0; den is a polynomial in the underlying
// J-coordinates and is avoided along the substituted lines automatically.
// The avoid polynomials live in the line coordinates Y1..Yn: a label y_k is
// admissible when no avoid polynomial restricted to (y_1..y_k, Y_{k+1}..)
// collapses to zero. Levels 1..n-1 pick N1 = 2d labels inside the first
// window [5kd, (5k+4)d] that admits them; level n picks N2 labels in
// [-M, M].
EvalData build_tree(int n, int d, long M, const std::vector<MPoly>& avoid, const MPoly& den,
                    const BuildOptions& opts = {});

// F(y_1 Y + a_1, ..., y_{n-1} Y + a_{n-1}, Y + a_n), reduced by the
// univariate gcd.
RatFrac line_restrict(const RatFrac& f, const std::vector<long>& y, const std::vector<long>& a);

// Exact rational-function reconstruction from point values by the
// extended-Euclidean method; the result is normalized so the denominator
// takes value 1 at norm_point. Throws "no-solution" when no fraction of the
// given degree bounds matches, "pole-at-point" when the fraction has a pole
// at a supplied point.
RatFrac cauchy_interpolate(const std::vector<std::pair<long, BigRat>>& points, int num_deg,
                           int den_deg, long norm_point = 0);

// Black-box evaluator; nullopt marks a pole.
using FracOracle = std::function<std::optional<BigRat>(const std::vector<BigRat>&)>;

struct ReconstructOptions {
    int extra_checks = 20;
    unsigned long long seed = 0x5eed;
};

// Rebuilds the n-variate fraction of total degree <= d behind the oracle
// from its values on the evaluation tree: per-line Cauchy interpolation
// normalized by den(a) = 1, then successive interpolation of the
// coefficients in y_{n-1}, ..., y_1. The result is verified against the
// oracle at random extra points ("verification-failure" otherwise).
RatFrac reconstruct_fraction(const FracOracle& oracle, int n, int d, const EvalData& data,
                             const std::vector<std::string>& out_vars,
                             const ReconstructOptions& opts = {});

// Convenience driver for a known fraction: builds suitable evaluation data
// (including the line-coprimality avoid set) and reconstructs through it.
struct ReconstructRun {
    EvalData data;
    RatFrac result;
};
ReconstructRun reconstruct_known_fraction(const RatFrac& f, int d, long M,
                                          const BuildOptions& opts = {},
                                          const ReconstructOptions& ropts = {});

} // namespace modeq

#endif
