#include "qschur/tensor.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>

namespace qschur {

namespace testing_hooks {

namespace {
std::atomic<Mutation> g_mutation{Mutation::none};
}

void set_mutation(Mutation m) { g_mutation.store(m); }
Mutation mutation() { return g_mutation.load(); }

} // namespace testing_hooks

std::string GenLabel::str() const {
    switch (kind) {
    case Kind::E: return "E" + std::to_string(index);
    case Kind::F: return "F" + std::to_string(index);
    case Kind::Kplus: return "K" + std::to_string(index);
    case Kind::Kminus: return "K" + std::to_string(index) + "^-1";
    case Kind::Zplus: return "z" + std::to_string(index) + "^+";
    case Kind::Zminus: return "z" + std::to_string(index) + "^-";
    }
    return "?";
}

std::string HeckeGen::str() const {
    switch (kind) {
    case Kind::T: return "T" + std::to_string(index);
    case Kind::Xplus: return "X" + std::to_string(index);
    case Kind::Xminus: return "X" + std::to_string(index) + "^-1";
    }
    return "?";
}

TensorElt::TensorElt(int rank, int modulus) : rank_(rank), modulus_(modulus) {
    if (rank < 1)
        throw std::invalid_argument("TensorElt: rank must be >= 1");
    if (modulus < 2)
        throw std::invalid_argument("TensorElt: modulus must be >= 2");
}

TensorElt TensorElt::pure(IndexTuple idx, int modulus, LaurentQA coeff) {
    TensorElt v(static_cast<int>(idx.size()), modulus);
    v.add_term(idx, coeff);
    return v;
}

LaurentQA TensorElt::coeff(const IndexTuple& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? LaurentQA{} : it->second;
}

void TensorElt::add_term(const IndexTuple& idx, const LaurentQA& c) {
    if (c.is_zero())
        return;
    if (static_cast<int>(idx.size()) != rank_)
        throw std::invalid_argument("TensorElt::add_term: rank mismatch");
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_.emplace(idx, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

TensorElt& TensorElt::operator+=(const TensorElt& o) {
    if (rank_ != o.rank_ || modulus_ != o.modulus_)
        throw std::domain_error("TensorElt: shape mismatch");
    for (const auto& [idx, c] : o.terms_)
        add_term(idx, c);
    return *this;
}

TensorElt& TensorElt::operator-=(const TensorElt& o) {
    if (rank_ != o.rank_ || modulus_ != o.modulus_)
        throw std::domain_error("TensorElt: shape mismatch");
    for (const auto& [idx, c] : o.terms_)
        add_term(idx, -c);
    return *this;
}

TensorElt TensorElt::operator+(const TensorElt& o) const {
    TensorElt out = *this;
    out += o;
    return out;
}

TensorElt TensorElt::operator-(const TensorElt& o) const {
    TensorElt out = *this;
    out -= o;
    return out;
}

TensorElt TensorElt::operator*(const LaurentQA& c) const {
    TensorElt out(rank_, modulus_);
    if (c.is_zero())
        return out;
    for (const auto& [idx, x] : terms_)
        out.terms_.emplace(idx, x * c);
    return out;
}

std::string TensorElt::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")*w[";
        for (std::size_t t = 0; t < idx.size(); ++t)
            os << (t ? "," : "") << idx[t];
        os << "]";
    }
    return os.str();
}

int residue_class(int s, int n) {
    int m = ((s - 1) % n + n) % n;
    return m + 1;
}

namespace {

// cyclic successor of i in {1..n}
int succ(int i, int n) { return i % n + 1; }

// K~_i eigenvalue exponent on a single factor of residue res
int ktilde_exp(int i, int res, int n) {
    return (res == i ? 1 : 0) - (res == succ(i, n) ? 1 : 0);
}

} // namespace

TensorElt act_left(const GenLabel& g, const TensorElt& v) {
    const int n = v.modulus();
    const int r = v.rank();
    TensorElt out(r, n);

    switch (g.kind) {
    case GenLabel::Kind::E: {
        if (g.index < 1 || g.index > n)
            throw std::out_of_range("act_left: E index");
        const int i = g.index;
        const int target = succ(i, n);
        const bool swapped =
            testing_hooks::mutation() == testing_hooks::Mutation::ei_coproduct_side;
        for (const auto& [idx, c] : v.terms()) {
            for (int s = 0; s < r; ++s) {
                if (residue_class(idx[s], n) != target)
                    continue;
                int e = 0;
                if (!swapped) {
                    for (int t = s + 1; t < r; ++t)
                        e += ktilde_exp(i, residue_class(idx[t], n), n);
                } else {
                    for (int t = 0; t < s; ++t)
                        e += ktilde_exp(i, residue_class(idx[t], n), n);
                }
                IndexTuple out_idx = idx;
                out_idx[s] -= 1;
                out.add_term(out_idx, c.times_monomial(Monomial(1, 0, e)));
            }
        }
        break;
    }
    case GenLabel::Kind::F: {
        if (g.index < 1 || g.index > n)
            throw std::out_of_range("act_left: F index");
        const int i = g.index;
        for (const auto& [idx, c] : v.terms()) {
            for (int s = 0; s < r; ++s) {
                if (residue_class(idx[s], n) != i)
                    continue;
                int e = 0;
                for (int t = 0; t < s; ++t)
                    e -= ktilde_exp(i, residue_class(idx[t], n), n);
                IndexTuple out_idx = idx;
                out_idx[s] += 1;
                out.add_term(out_idx, c.times_monomial(Monomial(1, 0, e)));
            }
        }
        break;
    }
    case GenLabel::Kind::Kplus:
    case GenLabel::Kind::Kminus: {
        if (g.index < 1 || g.index > n)
            throw std::out_of_range("act_left: K index");
        const int dir = g.kind == GenLabel::Kind::Kplus ? 1 : -1;
        for (const auto& [idx, c] : v.terms()) {
            int count = 0;
            for (int t = 0; t < r; ++t)
                if (residue_class(idx[t], n) == g.index)
                    ++count;
            out.add_term(idx, c.times_monomial(Monomial(1, 0, dir * count)));
        }
        break;
    }
    case GenLabel::Kind::Zplus:
    case GenLabel::Kind::Zminus: {
        if (g.index < 1)
            throw std::out_of_range("act_left: z index");
        const int shift =
            (g.kind == GenLabel::Kind::Zplus ? -1 : 1) * g.index * n;
        for (const auto& [idx, c] : v.terms()) {
            for (int s = 0; s < r; ++s) {
                IndexTuple out_idx = idx;
                out_idx[s] += shift;
                out.add_term(out_idx, c);
            }
        }
        break;
    }
    }
    return out;
}

namespace {

// the three-case rule for T_k on a tuple with entries in [1,n]
void core_Tk(const IndexTuple& idx, int k0, const LaurentQA& c, TensorElt& out,
             const std::vector<int>& post_shift, int n) {
    static const LaurentQA q2 = LaurentQA::var_q(2);
    static const LaurentQA q2m1 = LaurentQA::var_q(2) - LaurentQA(1);
    const bool mutated =
        testing_hooks::mutation() == testing_hooks::Mutation::tk_middle_sign;
    const LaurentQA qmid = mutated ? LaurentQA::var_q(-1) : LaurentQA::var_q(1);

    auto emit = [&](const IndexTuple& w, const LaurentQA& coeff) {
        IndexTuple shifted = w;
        for (std::size_t t = 0; t < shifted.size(); ++t)
            shifted[t] -= n * post_shift[t];
        out.add_term(shifted, coeff);
    };

    if (idx[k0] == idx[k0 + 1]) {
        emit(idx, c * q2);
        return;
    }
    IndexTuple sw = idx;
    std::swap(sw[k0], sw[k0 + 1]);
    if (idx[k0] < idx[k0 + 1]) {
        emit(sw, c * qmid);
    } else {
        emit(sw, c * LaurentQA::var_q(1));
        emit(idx, c * q2m1);
    }
}

} // namespace

TensorElt act_right(const HeckeGen& h, const TensorElt& v) {
    const int n = v.modulus();
    const int r = v.rank();
    TensorElt out(r, n);

    switch (h.kind) {
    case HeckeGen::Kind::Xplus:
    case HeckeGen::Kind::Xminus: {
        if (h.index < 1 || h.index > r)
            throw std::out_of_range("act_right: X index");
        const int shift = h.kind == HeckeGen::Kind::Xplus ? -n : n;
        for (const auto& [idx, c] : v.terms()) {
            IndexTuple out_idx = idx;
            out_idx[h.index - 1] += shift;
            out.add_term(out_idx, c);
        }
        break;
    }
    case HeckeGen::Kind::T: {
        if (h.index < 1 || h.index >= r)
            throw std::out_of_range("act_right: T index");
        const int k0 = h.index - 1;
        static const LaurentQA q2m1 = LaurentQA::var_q(2) - LaurentQA(1);
        for (const auto& [idx, c] : v.terms()) {
            // normal form: idx_t = j_t - n m_t with j_t in [1,n]
            IndexTuple j(r);
            std::vector<int> m(r);
            for (int t = 0; t < r; ++t) {
                j[t] = residue_class(idx[t], n);
                m[t] = (j[t] - idx[t]) / n;
            }
            const int ck = m[k0], dk = m[k0 + 1];
            const int e = ck - dk;

            std::vector<int> msw = m;
            std::swap(msw[k0], msw[k0 + 1]);
            core_Tk(j, k0, c, out, msw, n);

            if (e == 0)
                continue;
            // straightening correction:
            // X^m T_k = T_k X^{s_k m} + (q^2-1) * B (X_k X_{k+1})^d G_e,
            // G_e = -sum_{p<e} X_k^p X_{k+1}^{e-p} for e > 0 and
            //       +sum_{p<-e} X_k^{e+p} X_{k+1}^{-p} for e < 0.
            auto geom_term = [&](int alpha, int beta, bool negative) {
                IndexTuple w = idx;
                w[k0] = j[k0] - n * (dk + alpha);
                w[k0 + 1] = j[k0 + 1] - n * (dk + beta);
                LaurentQA coeff = c * q2m1;
                out.add_term(w, negative ? -coeff : coeff);
            };
            if (e > 0) {
                for (int p = 0; p < e; ++p)
                    geom_term(p, e - p, true);
            } else {
                for (int p = 0; p < -e; ++p)
                    geom_term(e + p, -p, false);
            }
        }
        break;
    }
    }
    return out;
}

TensorElt act_right(const HeckeElt& h, const TensorElt& v) {
    if (h.rank() != v.rank())
        throw std::domain_error("act_right: rank mismatch");
    TensorElt out(v.rank(), v.modulus());
    for (const auto& [w, c] : h.terms()) {
        TensorElt acc = v;
        for (int i : w.reduced_word())
            acc = act_right(HeckeGen::T(i), acc);
        out += acc * c;
    }
    return out;
}

TensorElt act_right_word(const AffineWord& word, const TensorElt& v) {
    TensorElt acc = v * word.scalar;
    for (const auto& letter : word.letters) {
        switch (letter.kind) {
        case AffineWord::Letter::Kind::T:
            acc = act_right(HeckeGen::T(letter.index), acc);
            break;
        case AffineWord::Letter::Kind::Xplus:
            acc = act_right(HeckeGen::Xp(letter.index), acc);
            break;
        case AffineWord::Letter::Kind::Xminus:
            acc = act_right(HeckeGen::Xm(letter.index), acc);
            break;
        }
    }
    return acc;
}

Weight weight_of(const IndexTuple& idx, int modulus) {
    Weight w;
    w.counts.assign(modulus, 0);
    for (int s : idx)
        ++w.counts[residue_class(s, modulus) - 1];
    return w;
}

TensorElt eps_a(const TensorElt& v) {
    const int n = v.modulus();
    const int r = v.rank();
    TensorElt out(r, n);
    for (const auto& [idx, c] : v.terms()) {
        IndexTuple j(r);
        std::vector<int> m(r);
        bool trivial = true;
        for (int t = 0; t < r; ++t) {
            j[t] = residue_class(idx[t], n);
            m[t] = (j[t] - idx[t]) / n;
            if (m[t] != 0)
                trivial = false;
        }
        if (trivial) {
            out.add_term(idx, c);
            continue;
        }
        HeckeElt h = HeckeElt::unit(r);
        for (int t = 0; t < r; ++t) {
            int power = m[t] >= 0 ? m[t] : -m[t];
            Sign sign = m[t] >= 0 ? Sign::plus : Sign::minus;
            if (power)
                h = h * murphy_L_power(t + 1, r, power, sign);
        }
        out += act_right(h, TensorElt::pure(j, n, c));
    }
    return out;
}

TensorElt apply_fk(int k, const TensorElt& v) {
    if (k < 2 || k > v.modulus())
        throw std::out_of_range("apply_fk: need 2 <= k <= n");
    if (k == 2)
        return act_left(GenLabel::F(1), v);
    TensorElt inner = apply_fk(k - 1, v);
    TensorElt first = act_left(GenLabel::F(k - 1), inner);
    TensorElt second = apply_fk(k - 1, act_left(GenLabel::F(k - 1), v));
    return first - second * LaurentQA::var_q(-1);
}

TensorElt apply_ek(int k, const TensorElt& v) {
    if (k < 2 || k > v.modulus())
        throw std::out_of_range("apply_ek: need 2 <= k <= n");
    if (k == 2)
        return act_left(GenLabel::E(1), v);
    TensorElt first = apply_ek(k - 1, act_left(GenLabel::E(k - 1), v));
    TensorElt second = act_left(GenLabel::E(k - 1), apply_ek(k - 1, v));
    return first - second * LaurentQA::var_q(1);
}

TensorElt apply_Ev_En(const TensorElt& v) {
    const int n = v.modulus();
    TensorElt scaled = act_left(GenLabel::Kp(1), act_left(GenLabel::Kp(n), v));
    return apply_fk(n, scaled) * LaurentQA::term(1, 1, -1);
}

TensorElt apply_Ev_Fn(const TensorElt& v) {
    const int n = v.modulus();
    TensorElt scaled = act_left(GenLabel::Km(1), act_left(GenLabel::Km(n), v));
    return apply_ek(n, scaled) * LaurentQA::term(1, -1, 1);
}

IndexTuple u_lambda_j(const Composition& la, int j) {
    const int n = la.length();
    if (n < 2)
        throw std::invalid_argument("u_lambda_j: need at least two parts");
    if (la.parts[0] < 1 || j < 1 || j > la.parts[0])
        throw std::out_of_range("u_lambda_j: need 1 <= j <= lambda_1");
    IndexTuple idx;
    for (int t = 0; t < j - 1; ++t)
        idx.push_back(1);
    idx.push_back(n);
    for (int t = 0; t < la.parts[0] - j; ++t)
        idx.push_back(1);
    for (int i = 2; i <= n; ++i)
        for (int t = 0; t < la.parts[i - 1]; ++t)
            idx.push_back(i);
    return idx;
}

IndexTuple parse_pure_tensor(const std::string& text) {
    auto open = text.find('[');
    auto close = text.rfind(']');
    if (text.empty() || text[0] != 'w' || open == std::string::npos ||
        close == std::string::npos || close < open)
        throw std::invalid_argument("parse_pure_tensor: expected w[i1,...,ir]");
    IndexTuple idx;
    std::string body = text.substr(open + 1, close - open - 1);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ','))
        idx.push_back(std::stoi(tok));
    if (idx.empty())
        throw std::invalid_argument("parse_pure_tensor: empty tuple");
    return idx;
}

} // namespace qschur
