#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qschur/combinatorics.hpp"
#include "qschur/laurent.hpp"
#include "qschur/upoly.hpp"

namespace qschur {

/// Segment [c; k): the geometric progression c q^{-k+1}, c q^{-k+3}, ...,
/// c q^{k-1} with center c and length k >= 1.
struct Segment {
    Monomial center;
    int length = 1;
    bool operator==(const Segment&) const = default;
    std::string str() const;
};

/// Multiset of segments in canonical order: length descending, then centers
/// by (ea, eq, coeff). Total length must be >= 1.
class Multisegment {
public:
    explicit Multisegment(std::vector<Segment> segments);

    const std::vector<Segment>& segments() const { return segs_; }
    int total() const;
    bool operator==(const Multisegment&) const = default;
    std::string str() const;

private:
    std::vector<Segment> segs_;
};

/// n-tuple of u-polynomials with constant term 1, optionally with the
/// inverse-root lists that factor each entry.
struct DrinfeldTuple {
    std::vector<UPoly> polys;
    std::optional<std::vector<std::vector<Monomial>>> factored;

    int n() const { return static_cast<int>(polys.size()); }
    std::vector<int> degrees() const;
    void validate() const; // constant terms 1; factored form reproduces polys
    bool operator==(const DrinfeldTuple&) const = default;
};

std::vector<Monomial> segment_expand(const Segment& s);

/// Lengths of the segments, sorted weakly decreasing.
Partition multisegment_partition(const Multisegment& s);

/// The map from multisegments to dominant n-tuples: Q_n = 1 and
/// Q_i(u) = prod_{k=i}^{n-1} P_k(u q^{k+1-2i}) with
/// P_k(u) = prod over segments of length k of (1 - center u).
/// Requires n > total(s).
DrinfeldTuple partial_map(const Multisegment& s, int n);

/// P_j(u) = prod_{lambda_{j+1} < s <= lambda_j} (1 - a q^{2s-1-j} u)
/// for j = 1..n-1; requires lambda to have at most n parts.
std::vector<UPoly> P_from_lambda(const Partition& la, int n);

/// The Drinfeld tuple of the inflated highest-weight module: computed from
/// the segment description and cross-checked against the triangular
/// recursion through the P_j, failing loudly on mismatch.
DrinfeldTuple Q_from_lambda(const Partition& la, int n);

/// Segment description alone: Q_i has degree lambda_i, constant term 1, and
/// u-zero set the segment [a^{-1} q^{-lambda_i + 2i - 1}; lambda_i).
DrinfeldTuple Q_from_segments_cor(const Partition& la, int n);

/// Triangular recursion alone: Q_m from its closed product, the others by
/// Q_i(u) = prod_{k=i}^{m-1} P_k(u q^{k+1-2i}) * Q_m(u q^{2(m-i)}).
DrinfeldTuple Q_from_lambda_recursion(const Partition& la, int n);

/// s(lambda, a) = sum_{i=1}^{m} sum_{lambda_{i+1} < k <= lambda_i}
/// [a q^{2k-1-i}; i). Requires a nonempty partition.
Multisegment s_lambda_a(const Partition& la);

/// a^{+-t} sum over cells (i,j) of lambda of q^{+-2t(j-i)}.
LaurentQA central_scalar(const Partition& la, int t, Sign sign);

/// Both sides of the product identity: prod_i Q_i(u) and the product of
/// (1 - a q^{2(j-i)} u) over the cells of lambda.
std::pair<UPoly, UPoly> product_identity(const Partition& la, int n);

/// Dominance of a tuple: every ratio Q_i(q^{i-1}u) / Q_{i+1}(q^{i+1}u)
/// divides exactly.
bool is_dominant(const DrinfeldTuple& Q);

/// The n-1 quotients above; domain error on a non-dominant tuple.
std::vector<UPoly> P_from_Q(const DrinfeldTuple& Q);

/// Inverse of partial_map on its image. Requires the factored form and
/// Q_n = 1; recovers each P_i by multiset difference of inverse roots and
/// emits one segment of length i per root.
Multisegment partial_inverse(const DrinfeldTuple& Q);

} // namespace qschur
