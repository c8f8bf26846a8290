#pragma once

#include <map>
#include <string>
#include <vector>

#include "qschur/combinatorics.hpp"
#include "qschur/laurent.hpp"

namespace qschur {

/// Element of the finite Hecke algebra H(r) on the T_w basis.
/// Quadratic relation convention: (T_i + 1)(T_i - q^2) = 0, so
/// T_w T_i = T_{w s_i} when the length goes up, and
/// T_w T_i = (q^2 - 1) T_w + q^2 T_{w s_i} otherwise.
class HeckeElt {
public:
    explicit HeckeElt(int rank); // zero
    static HeckeElt unit(int rank);
    static HeckeElt gen(int i, int rank);
    static HeckeElt basis(const Permutation& w);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Permutation, LaurentQA>& terms() const { return terms_; }
    LaurentQA coeff(const Permutation& w) const;

    HeckeElt& operator+=(const HeckeElt& o);
    HeckeElt& operator-=(const HeckeElt& o);
    HeckeElt operator+(const HeckeElt& o) const;
    HeckeElt operator-(const HeckeElt& o) const;
    HeckeElt operator*(const LaurentQA& c) const;
    HeckeElt operator*(const HeckeElt& o) const;
    bool operator==(const HeckeElt& o) const = default;

    HeckeElt times_gen(int i) const; // right multiplication by T_i

    std::string str() const;

    void add_term(const Permutation& w, const LaurentQA& c);

private:
    int rank_;
    std::map<Permutation, LaurentQA> terms_;
};

HeckeElt hecke_mul(const HeckeElt& x, const HeckeElt& y);

/// T_i^{-1} = q^{-2} T_i + (q^{-2} - 1) T_e.
HeckeElt hecke_inv_gen(int i, int rank);

/// The anti-involution with T_i fixed; on the basis, T_w -> T_{w^{-1}}.
HeckeElt star(const HeckeElt& x);

/// x_lambda = sum over the Young subgroup of T_w.
HeckeElt x_lambda(const Composition& la);

/// y_lambda = sum over the Young subgroup of (-q^2)^{-l(w)} T_w.
HeckeElt y_lambda(const Composition& la);

/// Murphy operator L_j = a q^{-2(j-1)} T_{j-1}...T_1 T_1...T_{j-1}.
HeckeElt murphy_L(int j, int rank);
HeckeElt murphy_L_inverse(int j, int rank);
HeckeElt murphy_L_power(int j, int rank, int t, Sign sign);

/// Scalar multiple of a word in the affine generators T_i, X_j^{+-1}.
struct AffineWord {
    struct Letter {
        enum class Kind { T, Xplus, Xminus };
        Kind kind;
        int index;
    };
    LaurentQA scalar = LaurentQA(1);
    std::vector<Letter> letters;
};

/// Parses strings like "T1 X2 X2^-1" (indices 1-based, whitespace separated).
AffineWord parse_affine_word(const std::string& text, int rank);

/// Evaluation into H(r): T_i -> T_i, X_j -> L_j, X_j^{-1} -> L_j^{-1},
/// extended multiplicatively over the word.
HeckeElt ev_a(const AffineWord& word, int rank);

/// Murphy basis element x_{s,t} = T*_{d(s)} x_lambda T_{d(t)}.
HeckeElt murphy_basis_elt(const Partition& la, const StdTableau& s,
                          const StdTableau& t);

/// Membership of h in the two-sided ideal spanned by Murphy elements whose
/// shape strictly dominates lambda. Decided by exact linear algebra.
bool in_ideal_above(const Partition& la, const HeckeElt& h);

/// Checks x_lambda L_s^{+-t} = res(s)^{+-t} x_lambda modulo the ideal above
/// lambda, with res(s) the residue of s in the superstandard tableau.
bool residue_congruence(const Partition& la, int s, int t, Sign sign);

/// Cached Murphy basis data for H(r): the index set, the transition matrix
/// eliminated fraction-free, and the scaled inverse used for coordinates.
class MurphyBasis {
public:
    struct Entry {
        Partition shape;
        StdTableau s, t;
        HeckeElt elt;
    };

    static const MurphyBasis& get(int rank); // memoized, single-writer init

    int rank() const { return rank_; }
    int dimension() const { return static_cast<int>(entries_.size()); }
    const std::vector<Entry>& entries() const { return entries_; }
    bool det_nonzero() const { return det_nonzero_; }

    /// Coordinates of h in the Murphy basis, each scaled by the same nonzero
    /// diagonal factor per row; zero tests on them decide membership.
    std::vector<LaurentQA> scaled_coords(const HeckeElt& h) const;

    /// Largest numerator digit count seen during elimination.
    std::size_t max_numerator_digits() const { return max_digits_; }

private:
    explicit MurphyBasis(int rank);

    int rank_;
    std::vector<Entry> entries_;
    std::vector<Permutation> perms_;
    std::vector<std::vector<LaurentQA>> inv_scaled_; // diag(d_i)^{-1}-free inverse
    std::vector<LaurentQA> diag_;
    bool det_nonzero_ = false;
    std::size_t max_digits_ = 0;
};

/// Relation instance of the affine Hecke presentation, as formal linear
/// combinations of words on each side.
struct AffineRelation {
    std::string name;
    std::vector<std::pair<LaurentQA, AffineWord>> lhs, rhs;
    bool t_only = true; // no X letters on either side
};

/// All defining relation instances for rank r (quadratic, braid and
/// commuting T's, X inverses and commutations, T_iX_iT_i = q^2 X_{i+1},
/// and X_j T_i = T_i X_j for j != i, i+1).
std::vector<AffineRelation> affine_hecke_relations(int r);

} // namespace qschur
