#pragma once

#include <map>
#include <string>
#include <vector>

#include "qschur/combinatorics.hpp"
#include "qschur/hecke.hpp"
#include "qschur/laurent.hpp"

namespace qschur {

/// Subscripts of a pure tensor w_{i_1} ... w_{i_r}, entries in Z.
using IndexTuple = std::vector<int>;

/// Generator label for the left action: E_i, F_i, K_i^{+-1} with i in
/// {1..n}, and the central shifts z_t^{+-} with t >= 1.
struct GenLabel {
    enum class Kind { E, F, Kplus, Kminus, Zplus, Zminus };
    Kind kind;
    int index;

    static GenLabel E(int i) { return {Kind::E, i}; }
    static GenLabel F(int i) { return {Kind::F, i}; }
    static GenLabel Kp(int i) { return {Kind::Kplus, i}; }
    static GenLabel Km(int i) { return {Kind::Kminus, i}; }
    static GenLabel Zp(int t) { return {Kind::Zplus, t}; }
    static GenLabel Zm(int t) { return {Kind::Zminus, t}; }
    std::string str() const;
};

/// Generator label for the right action: T_k, X_t, X_t^{-1}.
struct HeckeGen {
    enum class Kind { T, Xplus, Xminus };
    Kind kind;
    int index;

    static HeckeGen T(int k) { return {Kind::T, k}; }
    static HeckeGen Xp(int t) { return {Kind::Xplus, t}; }
    static HeckeGen Xm(int t) { return {Kind::Xminus, t}; }
    std::string str() const;
};

/// Formal linear combination of pure tensors over LaurentQA. Carries the
/// rank r and the modulus n of the residue alphabet {1..n}.
class TensorElt {
public:
    TensorElt(int rank, int modulus); // zero
    static TensorElt pure(IndexTuple idx, int modulus,
                          LaurentQA coeff = LaurentQA(1));

    int rank() const { return rank_; }
    int modulus() const { return modulus_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<IndexTuple, LaurentQA>& terms() const { return terms_; }
    LaurentQA coeff(const IndexTuple& idx) const;

    TensorElt& operator+=(const TensorElt& o);
    TensorElt& operator-=(const TensorElt& o);
    TensorElt operator+(const TensorElt& o) const;
    TensorElt operator-(const TensorElt& o) const;
    TensorElt operator*(const LaurentQA& c) const;
    bool operator==(const TensorElt& o) const = default;

    void add_term(const IndexTuple& idx, const LaurentQA& c);
    std::string str() const;

private:
    int rank_;
    int modulus_;
    std::map<IndexTuple, LaurentQA> terms_;
};

/// Representative of s in {1..n} modulo n (so 0 maps to n).
int residue_class(int s, int n);

/// Left action of a generator through the r-fold coproduct:
/// E_i acts in one slot with the diagonal weight on every later slot,
/// F_i with the inverse weight on every earlier slot, K_i^{+-1} slotwise,
/// and z_t^{+-} as the sum over slots of the index shift by -+ t n.
TensorElt act_left(const GenLabel& g, const TensorElt& v);

/// Right affine Hecke action. X_t^{-+1} shifts entry t by +- n. T_k applies
/// the three-case rule when both entries lie in {1..n}; on general integer
/// entries it is computed through the normal form v = (basis in [1,n]^r) * X^m
/// and the Bernstein-Lusztig straightening of X^m past T_k, which is the
/// unique extension consistent with the presentation.
TensorElt act_right(const HeckeGen& h, const TensorElt& v);

/// Right action of an X-free Hecke element (the finite Hecke subalgebra).
TensorElt act_right(const HeckeElt& h, const TensorElt& v);

/// Right action of a word of affine generators, letters applied left to right.
TensorElt act_right_word(const AffineWord& word, const TensorElt& v);

struct Weight {
    std::vector<int> counts;
    bool operator==(const Weight&) const = default;
};

/// counts[j-1] = number of entries with residue j; K_j then has eigenvalue
/// q^{counts[j-1]} on the pure tensor.
Weight weight_of(const IndexTuple& idx, int modulus);

/// Projection onto the [1,n]^r span: each pure tensor is written as a
/// [1,n]^r basis vector times a monomial in the X's, and the X-monomial is
/// replaced by its Murphy-operator image acting on the right.
TensorElt eps_a(const TensorElt& v);

/// Nested divided commutator f_k = [F_{k-1}, f_{k-1}]_{q^{-1}}, f_2 = F_1.
TensorElt apply_fk(int k, const TensorElt& v);

/// Mirror nested commutator e_k = [e_{k-1}, E_{k-1}]_q, e_2 = E_1.
TensorElt apply_ek(int k, const TensorElt& v);

/// v -> a q^{-1} f_n (K_1 K_n v).
TensorElt apply_Ev_En(const TensorElt& v);

/// v -> a^{-1} q e_n ((K_1 K_n)^{-1} v).
TensorElt apply_Ev_Fn(const TensorElt& v);

/// Index of w_1^{j-1} w_n w_1^{la_1 - j} w_2^{la_2} ... w_n^{la_n}.
IndexTuple u_lambda_j(const Composition& la, int j);

/// Parses "w[3,1,2]".
IndexTuple parse_pure_tensor(const std::string& text);

namespace testing_hooks {

/// Deliberate fault injection used by the mutation-sensitivity checks.
enum class Mutation { none, tk_middle_sign, ei_coproduct_side };
void set_mutation(Mutation m);
Mutation mutation();

} // namespace testing_hooks

} // namespace qschur
