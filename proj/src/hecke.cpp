#include "qschur/hecke.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qschur {

HeckeElt::HeckeElt(int rank) : rank_(rank) {
    if (rank < 1)
        throw std::invalid_argument("HeckeElt: rank must be >= 1");
}

HeckeElt HeckeElt::unit(int rank) {
    HeckeElt x(rank);
    x.terms_.emplace(Permutation(rank), LaurentQA(1));
    return x;
}

HeckeElt HeckeElt::gen(int i, int rank) {
    if (i < 1 || i >= rank)
        throw std::out_of_range("HeckeElt::gen");
    return basis(Permutation(rank).times_s(i));
}

HeckeElt HeckeElt::basis(const Permutation& w) {
    HeckeElt x(w.rank());
    x.terms_.emplace(w, LaurentQA(1));
    return x;
}

LaurentQA HeckeElt::coeff(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentQA{} : it->second;
}

void HeckeElt::add_term(const Permutation& w, const LaurentQA& c) {
    if (c.is_zero())
        return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
    if (rank_ != o.rank_)
        throw std::domain_error("HeckeElt: rank mismatch");
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
    if (rank_ != o.rank_)
        throw std::domain_error("HeckeElt: rank mismatch");
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
    HeckeElt out = *this;
    out += o;
    return out;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const {
    HeckeElt out = *this;
    out -= o;
    return out;
}

HeckeElt HeckeElt::operator*(const LaurentQA& c) const {
    HeckeElt out(rank_);
    if (c.is_zero())
        return out;
    for (const auto& [w, x] : terms_)
        out.terms_.emplace(w, x * c);
    return out;
}

HeckeElt HeckeElt::times_gen(int i) const {
    if (i < 1 || i >= rank_)
        throw std::out_of_range("HeckeElt::times_gen");
    static const LaurentQA q2 = LaurentQA::var_q(2);
    static const LaurentQA q2m1 = LaurentQA::var_q(2) - LaurentQA(1);
    HeckeElt out(rank_);
    for (const auto& [w, c] : terms_) {
        Permutation v = w.times_s(i);
        if (w(i) < w(i + 1)) {
            out.add_term(v, c);
        } else {
            out.add_term(w, c * q2m1);
            out.add_term(v, c * q2);
        }
    }
    return out;
}

HeckeElt HeckeElt::operator*(const HeckeElt& o) const {
    if (rank_ != o.rank_)
        throw std::domain_error("HeckeElt: rank mismatch");
    HeckeElt out(rank_);
    for (const auto& [w, c] : o.terms_) {
        HeckeElt acc = *this;
        for (int i : w.reduced_word())
            acc = acc.times_gen(i);
        out += acc * c;
    }
    return out;
}

std::string HeckeElt::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")*T" << w.str();
    }
    return os.str();
}

HeckeElt hecke_mul(const HeckeElt& x, const HeckeElt& y) { return x * y; }

HeckeElt hecke_inv_gen(int i, int rank) {
    HeckeElt out = HeckeElt::gen(i, rank) * LaurentQA::var_q(-2);
    out += HeckeElt::unit(rank) * (LaurentQA::var_q(-2) - LaurentQA(1));
    return out;
}

HeckeElt star(const HeckeElt& x) {
    HeckeElt out(x.rank());
    for (const auto& [w, c] : x.terms())
        out.add_term(w.inverse(), c);
    return out;
}

HeckeElt x_lambda(const Composition& la) {
    HeckeElt out(la.size());
    for (const auto& w : young_subgroup(la))
        out.add_term(w, LaurentQA(1));
    return out;
}

HeckeElt y_lambda(const Composition& la) {
    HeckeElt out(la.size());
    for (const auto& w : young_subgroup(la)) {
        int l = w.length();
        Rat sign = (l % 2 == 0) ? 1 : -1;
        out.add_term(w, LaurentQA::term(sign, 0, -2 * l));
    }
    return out;
}

HeckeElt murphy_L(int j, int rank) {
    if (j < 1 || j > rank)
        throw std::out_of_range("murphy_L");
    HeckeElt acc = HeckeElt::unit(rank) * LaurentQA::term(1, 1, -2 * (j - 1));
    for (int i = j - 1; i >= 1; --i)
        acc = acc.times_gen(i);
    for (int i = 1; i <= j - 1; ++i)
        acc = acc.times_gen(i);
    return acc;
}

HeckeElt murphy_L_inverse(int j, int rank) {
    if (j < 1 || j > rank)
        throw std::out_of_range("murphy_L_inverse");
    // the T-word of L_j is a palindrome, so the inverse word is the same
    // sequence of inverse generators; the scalar inverts exactly
    HeckeElt acc = HeckeElt::unit(rank) * LaurentQA::term(1, -1, 2 * (j - 1));
    for (int i = j - 1; i >= 1; --i)
        acc = acc * hecke_inv_gen(i, rank);
    for (int i = 1; i <= j - 1; ++i)
        acc = acc * hecke_inv_gen(i, rank);
    return acc;
}

HeckeElt murphy_L_power(int j, int rank, int t, Sign sign) {
    if (t < 0)
        throw std::domain_error("murphy_L_power: negative power");
    HeckeElt base = sign == Sign::plus ? murphy_L(j, rank) : murphy_L_inverse(j, rank);
    HeckeElt acc = HeckeElt::unit(rank);
    for (int k = 0; k < t; ++k)
        acc = acc * base;
    return acc;
}

AffineWord parse_affine_word(const std::string& text, int rank) {
    AffineWord word;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        bool inverse = false;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            inverse = true;
            tok = tok.substr(0, tok.size() - 3);
        }
        if (tok.size() < 2)
            throw std::invalid_argument("bad affine word token: " + tok);
        char kind = tok[0];
        int idx = std::stoi(tok.substr(1));
        if (kind == 'T') {
            if (inverse)
                throw std::invalid_argument("T^-1 tokens are not supported");
            if (idx < 1 || idx >= rank)
                throw std::invalid_argument("T index out of range: " + tok);
            word.letters.push_back({AffineWord::Letter::Kind::T, idx});
        } else if (kind == 'X') {
            if (idx < 1 || idx > rank)
                throw std::invalid_argument("X index out of range: " + tok);
            word.letters.push_back({inverse ? AffineWord::Letter::Kind::Xminus
                                            : AffineWord::Letter::Kind::Xplus,
                                    idx});
        } else {
            throw std::invalid_argument("bad affine word token: " + tok);
        }
    }
    return word;
}

HeckeElt ev_a(const AffineWord& word, int rank) {
    HeckeElt acc = HeckeElt::unit(rank) * word.scalar;
    for (const auto& letter : word.letters) {
        switch (letter.kind) {
        case AffineWord::Letter::Kind::T:
            acc = acc.times_gen(letter.index);
            break;
        case AffineWord::Letter::Kind::Xplus:
            acc = acc * murphy_L(letter.index, rank);
            break;
        case AffineWord::Letter::Kind::Xminus:
            acc = acc * murphy_L_inverse(letter.index, rank);
            break;
        }
    }
    return acc;
}

HeckeElt murphy_basis_elt(const Partition& la, const StdTableau& s,
                          const StdTableau& t) {
    if (s.shape != la || t.shape != la)
        throw std::domain_error("murphy_basis_elt: tableau shape mismatch");
    // the coset representative multiplying x_lambda must be the minimal
    // element of its coset, which is the inverse of the entrywise map
    HeckeElt xs = HeckeElt::basis(d_of(s)); // star of the representative
    HeckeElt xl = x_lambda(la.as_composition(la.num_parts()));
    return xs * xl * HeckeElt::basis(d_of(t).inverse());
}

// ---------------------------------------------------------------------------
// Murphy basis cache and fraction-free linear algebra

namespace {

std::vector<Permutation> all_permutations(int r) {
    std::vector<int> w(r);
    for (int i = 0; i < r; ++i)
        w[i] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(w));
    } while (std::next_permutation(w.begin(), w.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t scan_digits(const std::vector<std::vector<LaurentQA>>& m) {
    std::size_t best = 0;
    for (const auto& row : m)
        for (const auto& x : row)
            best = std::max(best, x.max_numerator_digits());
    return best;
}

} // namespace

MurphyBasis::MurphyBasis(int rank) : rank_(rank) {
    perms_ = all_permutations(rank);
    const int dim = static_cast<int>(perms_.size());

    for (const auto& la : partitions_of(rank)) {
        auto tabs = std_tableaux(la);
        for (const auto& s : tabs)
            for (const auto& t : tabs)
                entries_.push_back({la, s, t, murphy_basis_elt(la, s, t)});
    }
    if (static_cast<int>(entries_.size()) != dim)
        throw std::logic_error("MurphyBasis: index count != dim H(r)");

    // transition matrix: column j = Murphy element j on the T_w basis
    std::vector<std::vector<LaurentQA>> aug(
        dim, std::vector<LaurentQA>(2 * dim));
    for (int j = 0; j < dim; ++j)
        for (const auto& [w, c] : entries_[j].elt.terms()) {
            int row = static_cast<int>(
                std::lower_bound(perms_.begin(), perms_.end(), w) - perms_.begin());
            aug[row][j] = c;
        }
    for (int i = 0; i < dim; ++i)
        aug[i][dim + i] = LaurentQA(1);

    // one-step fraction-free Gauss-Jordan: after step k every row i != k is
    // replaced by (a_kk a_ij - a_ik a_kj) / prev, keeping entries in the ring
    LaurentQA prev(1);
    max_digits_ = scan_digits(aug);
    for (int k = 0; k < dim; ++k) {
        int pivot = -1;
        std::size_t best_terms = 0;
        for (int p = k; p < dim; ++p) {
            if (aug[p][k].is_zero())
                continue;
            std::size_t nt = aug[p][k].terms().size();
            if (pivot < 0 || nt < best_terms) {
                pivot = p;
                best_terms = nt;
            }
        }
        if (pivot < 0) {
            det_nonzero_ = false;
            return;
        }
        std::swap(aug[k], aug[pivot]);
        const LaurentQA pk = aug[k][k];
        for (int i = 0; i < dim; ++i) {
            if (i == k)
                continue;
            const LaurentQA aik = aug[i][k];
            for (int j = 0; j < 2 * dim; ++j) {
                LaurentQA num = pk * aug[i][j] - aik * aug[k][j];
                auto quot = divide_exact(num, prev);
                if (!quot)
                    throw std::logic_error("MurphyBasis: inexact division");
                aug[i][j] = std::move(*quot);
            }
        }
        prev = pk;
        max_digits_ = std::max(max_digits_, scan_digits(aug));
    }
    det_nonzero_ = true;

    diag_.resize(dim);
    inv_scaled_.assign(dim, std::vector<LaurentQA>(dim));
    for (int i = 0; i < dim; ++i) {
        diag_[i] = aug[i][i];
        if (diag_[i].is_zero())
            throw std::logic_error("MurphyBasis: zero diagonal after Jordan");
        for (int j = 0; j < dim; ++j)
            inv_scaled_[i][j] = aug[i][dim + j];
    }
}

const MurphyBasis& MurphyBasis::get(int rank) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<MurphyBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(rank);
    if (it == cache.end())
        it = cache.emplace(rank, std::unique_ptr<MurphyBasis>(new MurphyBasis(rank))).first;
    return *it->second;
}

std::vector<LaurentQA> MurphyBasis::scaled_coords(const HeckeElt& h) const {
    if (h.rank() != rank_)
        throw std::domain_error("MurphyBasis::scaled_coords: rank mismatch");
    if (!det_nonzero_)
        throw std::logic_error("MurphyBasis: transition matrix is singular");
    const int dim = dimension();
    std::vector<LaurentQA> hv(dim);
    for (const auto& [w, c] : h.terms()) {
        int row = static_cast<int>(
            std::lower_bound(perms_.begin(), perms_.end(), w) - perms_.begin());
        hv[row] = c;
    }
    // row i of the reduced tableau reads diag_i * c_i = (inv_scaled * h)_i
    std::vector<LaurentQA> out(dim);
    for (int i = 0; i < dim; ++i) {
        LaurentQA acc;
        for (int j = 0; j < dim; ++j)
            if (!hv[j].is_zero())
                acc += inv_scaled_[i][j] * hv[j];
        out[i] = std::move(acc);
    }
    return out;
}

bool in_ideal_above(const Partition& la, const HeckeElt& h) {
    if (la.size() != h.rank())
        throw std::domain_error("in_ideal_above: |lambda| != rank");
    if (h.is_zero())
        return true;
    const MurphyBasis& basis = MurphyBasis::get(h.rank());
    auto coords = basis.scaled_coords(h);
    for (int i = 0; i < basis.dimension(); ++i) {
        if (dominance_lt(la, basis.entries()[i].shape))
            continue; // allowed span
        if (!coords[i].is_zero())
            return false;
    }
    return true;
}

bool residue_congruence(const Partition& la, int s, int t, Sign sign) {
    int r = la.size();
    if (s < 1 || s > r)
        throw std::domain_error("residue_congruence: s out of range");
    if (t < 1)
        throw std::domain_error("residue_congruence: t must be >= 1");
    HeckeElt xl = x_lambda(la.as_composition(la.num_parts()));
    HeckeElt lhs = xl * murphy_L_power(s, r, t, sign);
    Monomial res = residue(la, s).pow(sign == Sign::plus ? t : -t);
    HeckeElt rhs = xl * LaurentQA(res);
    return in_ideal_above(la, lhs - rhs);
}

// ---------------------------------------------------------------------------
// Presentation relations

namespace {

AffineWord w_of(std::initializer_list<AffineWord::Letter> letters) {
    AffineWord w;
    w.letters = letters;
    return w;
}

using K = AffineWord::Letter::Kind;

} // namespace

std::vector<AffineRelation> affine_hecke_relations(int r) {
    std::vector<AffineRelation> rels;
    const LaurentQA one(1);
    const LaurentQA q2 = LaurentQA::var_q(2);
    const LaurentQA q2m1 = q2 - one;
    AffineWord empty;

    for (int i = 1; i <= r - 1; ++i) {
        AffineRelation rel;
        rel.name = "quadratic T" + std::to_string(i);
        rel.lhs = {{one, w_of({{K::T, i}, {K::T, i}})}};
        rel.rhs = {{q2m1, w_of({{K::T, i}})}, {q2, empty}};
        rels.push_back(rel);
    }
    for (int i = 1; i + 1 <= r - 1; ++i) {
        AffineRelation rel;
        rel.name = "braid T" + std::to_string(i) + " T" + std::to_string(i + 1);
        rel.lhs = {{one, w_of({{K::T, i}, {K::T, i + 1}, {K::T, i}})}};
        rel.rhs = {{one, w_of({{K::T, i + 1}, {K::T, i}, {K::T, i + 1}})}};
        rels.push_back(rel);
    }
    for (int i = 1; i <= r - 1; ++i)
        for (int j = i + 2; j <= r - 1; ++j) {
            AffineRelation rel;
            rel.name = "commute T" + std::to_string(i) + " T" + std::to_string(j);
            rel.lhs = {{one, w_of({{K::T, i}, {K::T, j}})}};
            rel.rhs = {{one, w_of({{K::T, j}, {K::T, i}})}};
            rels.push_back(rel);
        }
    for (int i = 1; i <= r; ++i) {
        AffineRelation rel;
        rel.name = "X" + std::to_string(i) + " inverse";
        rel.lhs = {{one, w_of({{K::Xplus, i}, {K::Xminus, i}})}};
        rel.rhs = {{one, empty}};
        rel.t_only = false;
        rels.push_back(rel);
        AffineRelation rel2;
        rel2.name = "X" + std::to_string(i) + " inverse (flipped)";
        rel2.lhs = {{one, w_of({{K::Xminus, i}, {K::Xplus, i}})}};
        rel2.rhs = {{one, empty}};
        rel2.t_only = false;
        rels.push_back(rel2);
    }
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            AffineRelation rel;
            rel.name = "commute X" + std::to_string(i) + " X" + std::to_string(j);
            rel.lhs = {{one, w_of({{K::Xplus, i}, {K::Xplus, j}})}};
            rel.rhs = {{one, w_of({{K::Xplus, j}, {K::Xplus, i}})}};
            rel.t_only = false;
            rels.push_back(rel);
        }
    for (int i = 1; i <= r - 1; ++i) {
        AffineRelation rel;
        rel.name = "T" + std::to_string(i) + " X" + std::to_string(i) + " T" +
                   std::to_string(i) + " = q^2 X" + std::to_string(i + 1);
        rel.lhs = {{one, w_of({{K::T, i}, {K::Xplus, i}, {K::T, i}})}};
        rel.rhs = {{q2, w_of({{K::Xplus, i + 1}})}};
        rel.t_only = false;
        rels.push_back(rel);
    }
    for (int i = 1; i <= r - 1; ++i)
        for (int j = 1; j <= r; ++j) {
            if (j == i || j == i + 1)
                continue;
            for (auto kind : {K::Xplus, K::Xminus}) {
                AffineRelation rel;
                rel.name = "commute X" + std::to_string(j) +
                           (kind == K::Xminus ? "^-1" : "") + " T" + std::to_string(i);
                rel.lhs = {{one, w_of({{kind, j}, {K::T, i}})}};
                rel.rhs = {{one, w_of({{K::T, i}, {kind, j}})}};
                rel.t_only = false;
                rels.push_back(rel);
            }
        }
    return rels;
}

} // namespace qschur
