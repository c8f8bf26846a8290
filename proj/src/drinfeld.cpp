#include "qschur/drinfeld.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qschur {

std::string Segment::str() const {
    std::ostringstream os;
    os << "[" << center.str() << "; " << length << ")";
    return os.str();
}

namespace {

bool segment_less(const Segment& x, const Segment& y) {
    if (x.length != y.length)
        return x.length > y.length; // long segments first
    return x.center < y.center;
}

} // namespace

Multisegment::Multisegment(std::vector<Segment> segments)
    : segs_(std::move(segments)) {
    if (segs_.empty())
        throw std::invalid_argument("Multisegment: must contain a segment");
    for (const auto& s : segs_)
        if (s.length < 1)
            throw std::invalid_argument("Multisegment: segment length < 1");
    std::sort(segs_.begin(), segs_.end(), segment_less);
}

int Multisegment::total() const {
    int sum = 0;
    for (const auto& s : segs_)
        sum += s.length;
    return sum;
}

std::string Multisegment::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < segs_.size(); ++i)
        os << (i ? " + " : "") << segs_[i].str();
    return os.str();
}

std::vector<int> DrinfeldTuple::degrees() const {
    std::vector<int> d;
    d.reserve(polys.size());
    for (const auto& p : polys)
        d.push_back(std::max(p.degree(), 0));
    return d;
}

void DrinfeldTuple::validate() const {
    for (const auto& p : polys)
        if (!p.coeff(0).is_one())
            throw std::invalid_argument("DrinfeldTuple: constant term != 1");
    if (factored) {
        if (factored->size() != polys.size())
            throw std::invalid_argument("DrinfeldTuple: factored size mismatch");
        for (std::size_t i = 0; i < polys.size(); ++i)
            if (UPoly::from_inverse_roots((*factored)[i]) != polys[i])
                throw std::invalid_argument(
                    "DrinfeldTuple: factored form does not reproduce entry " +
                    std::to_string(i + 1));
    }
}

std::vector<Monomial> segment_expand(const Segment& s) {
    std::vector<Monomial> out;
    out.reserve(s.length);
    for (int t = 1; t <= s.length; ++t)
        out.push_back(s.center * Monomial(1, 0, -s.length + 1 + 2 * (t - 1)));
    return out;
}

Partition multisegment_partition(const Multisegment& s) {
    std::vector<int> lengths;
    lengths.reserve(s.segments().size());
    for (const auto& seg : s.segments())
        lengths.push_back(seg.length);
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(std::move(lengths));
}

namespace {

DrinfeldTuple tuple_from_roots(std::vector<std::vector<Monomial>> roots) {
    DrinfeldTuple Q;
    Q.polys.reserve(roots.size());
    for (auto& list : roots) {
        std::sort(list.begin(), list.end());
        Q.polys.push_back(UPoly::from_inverse_roots(list));
    }
    Q.factored = std::move(roots);
    Q.validate();
    return Q;
}

} // namespace

DrinfeldTuple partial_map(const Multisegment& s, int n) {
    if (n <= s.total())
        throw std::domain_error("partial_map: requires n > total length");
    std::vector<std::vector<Monomial>> roots(n);
    for (int i = 1; i <= n - 1; ++i) {
        // Q_i collects, from every segment of length nu >= i, the center
        // shifted by q^{nu + 1 - 2i}
        for (const auto& seg : s.segments())
            if (seg.length >= i)
                roots[i - 1].push_back(seg.center *
                                       Monomial(1, 0, seg.length + 1 - 2 * i));
    }
    return tuple_from_roots(std::move(roots));
}

std::vector<UPoly> P_from_lambda(const Partition& la, int n) {
    if (la.num_parts() > n)
        throw std::domain_error("P_from_lambda: partition has more than n parts");
    std::vector<UPoly> P;
    P.reserve(n - 1);
    for (int j = 1; j <= n - 1; ++j) {
        std::vector<Monomial> roots;
        for (int s = la.part(j + 1) + 1; s <= la.part(j); ++s)
            roots.push_back(Monomial(1, 1, 2 * s - 1 - j));
        P.push_back(UPoly::from_inverse_roots(roots));
    }
    return P;
}

DrinfeldTuple Q_from_segments_cor(const Partition& la, int n) {
    if (la.num_parts() > n)
        throw std::domain_error("Q_from_segments_cor: more than n parts");
    std::vector<std::vector<Monomial>> roots(n);
    for (int i = 1; i <= la.num_parts(); ++i) {
        // inverse roots are the reciprocals of the segment
        // [a^{-1} q^{-lambda_i + 2i - 1}; lambda_i), i.e. a q^{2(s-i)}
        for (int s = 1; s <= la.part(i); ++s)
            roots[i - 1].push_back(Monomial(1, 1, 2 * (s - i)));
    }
    return tuple_from_roots(std::move(roots));
}

DrinfeldTuple Q_from_lambda_recursion(const Partition& la, int n) {
    if (la.num_parts() > n)
        throw std::domain_error("Q_from_lambda_recursion: more than n parts");
    const int m = la.num_parts();
    DrinfeldTuple Q;
    Q.polys.assign(n, UPoly::one());
    if (m == 0)
        return Q;
    std::vector<UPoly> P = P_from_lambda(la, n);
    std::vector<Monomial> qm_roots;
    for (int s = 1; s <= la.part(m); ++s)
        qm_roots.push_back(Monomial(1, 1, 2 * (s - m)));
    UPoly Qm = UPoly::from_inverse_roots(qm_roots);
    for (int i = 1; i <= m; ++i) {
        UPoly acc = Qm.substitute_scale(Monomial(1, 0, 2 * (m - i)));
        for (int k = i; k <= m - 1; ++k)
            acc = acc * P[k - 1].substitute_scale(Monomial(1, 0, k + 1 - 2 * i));
        Q.polys[i - 1] = acc;
    }
    Q.validate();
    return Q;
}

DrinfeldTuple Q_from_lambda(const Partition& la, int n) {
    DrinfeldTuple Q = Q_from_segments_cor(la, n);
    DrinfeldTuple R = Q_from_lambda_recursion(la, n);
    if (Q.polys != R.polys)
        throw std::logic_error(
            "Q_from_lambda: segment description and recursion disagree for " +
            la.str());
    return Q;
}

Multisegment s_lambda_a(const Partition& la) {
    if (la.num_parts() == 0)
        throw std::invalid_argument("s_lambda_a: empty partition");
    std::vector<Segment> segs;
    for (int i = 1; i <= la.num_parts(); ++i)
        for (int k = la.part(i + 1) + 1; k <= la.part(i); ++k)
            segs.push_back(Segment{Monomial(1, 1, 2 * k - 1 - i), i});
    return Multisegment(std::move(segs));
}

LaurentQA central_scalar(const Partition& la, int t, Sign sign) {
    if (t < 1)
        throw std::domain_error("central_scalar: t must be >= 1");
    const int s = sign_value(sign);
    LaurentQA sum;
    for (int i = 1; i <= la.num_parts(); ++i)
        for (int j = 1; j <= la.part(i); ++j)
            sum += LaurentQA::term(1, 0, s * 2 * t * (j - i));
    return sum.times_monomial(Monomial(1, s * t, 0));
}

std::pair<UPoly, UPoly> product_identity(const Partition& la, int n) {
    DrinfeldTuple Q = Q_from_lambda(la, n);
    UPoly lhs = UPoly::one();
    for (const auto& p : Q.polys)
        lhs = lhs * p;
    std::vector<Monomial> cells;
    for (int i = 1; i <= la.num_parts(); ++i)
        for (int j = 1; j <= la.part(i); ++j)
            cells.push_back(Monomial(1, 1, 2 * (j - i)));
    return {lhs, UPoly::from_inverse_roots(cells)};
}

bool is_dominant(const DrinfeldTuple& Q) {
    Q.validate();
    for (int i = 1; i <= Q.n() - 1; ++i) {
        UPoly top = Q.polys[i - 1].substitute_scale(Monomial(1, 0, i - 1));
        UPoly bot = Q.polys[i].substitute_scale(Monomial(1, 0, i + 1));
        if (!exact_divide(top, bot))
            return false;
    }
    return true;
}

std::vector<UPoly> P_from_Q(const DrinfeldTuple& Q) {
    Q.validate();
    std::vector<UPoly> P;
    P.reserve(Q.n() - 1);
    for (int i = 1; i <= Q.n() - 1; ++i) {
        UPoly top = Q.polys[i - 1].substitute_scale(Monomial(1, 0, i - 1));
        UPoly bot = Q.polys[i].substitute_scale(Monomial(1, 0, i + 1));
        auto quot = exact_divide(top, bot);
        if (!quot)
            throw std::domain_error("P_from_Q: tuple is not dominant");
        P.push_back(*quot);
    }
    return P;
}

Multisegment partial_inverse(const DrinfeldTuple& Q) {
    Q.validate();
    if (!Q.factored)
        throw std::invalid_argument("partial_inverse: factored form required");
    const int n = Q.n();
    if (n < 1 || Q.polys[n - 1].degree() > 0)
        throw std::invalid_argument("partial_inverse: requires Q_n = 1");

    std::vector<Segment> segs;
    for (int i = 1; i <= n - 1; ++i) {
        // P_i = Q_i(q^{i-1} u) / Q_{i+1}(q^{i+1} u) computed on the factored
        // form: shift each root list, then take the multiset difference
        std::vector<Monomial> top, bot;
        for (const auto& rho : (*Q.factored)[i - 1])
            top.push_back(rho * Monomial(1, 0, i - 1));
        for (const auto& rho : (*Q.factored)[i])
            bot.push_back(rho * Monomial(1, 0, i + 1));
        std::sort(top.begin(), top.end());
        std::sort(bot.begin(), bot.end());
        for (const auto& rho : bot) {
            auto it = std::find(top.begin(), top.end(), rho);
            if (it == top.end())
                throw std::invalid_argument(
                    "partial_inverse: tuple is not in the image (entry " +
                    std::to_string(i) + ")");
            top.erase(it);
        }
        for (const auto& rho : top)
            segs.push_back(Segment{rho, i});
    }
    return Multisegment(std::move(segs));
}

} // namespace qschur
