#include "qschur/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qschur {

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
        if (x < 0)
            throw std::invalid_argument("Composition: negative part");
}

int Composition::size() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Composition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i)
        os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must weakly decrease");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1)
        throw std::out_of_range("Partition::part");
    return i <= num_parts() ? parts_[i - 1] : 0;
}

Composition Partition::as_composition(int length) const {
    if (length < num_parts())
        throw std::invalid_argument("Partition::as_composition: too short");
    std::vector<int> p = parts_;
    p.resize(length, 0);
    return Composition(std::move(p));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

Permutation::Permutation(int r) {
    if (r < 1)
        throw std::invalid_argument("Permutation: rank must be >= 1");
    w_.resize(r);
    std::iota(w_.begin(), w_.end(), 1);
}

Permutation Permutation::from_one_line(std::vector<int> w) {
    Permutation p(static_cast<int>(w.size()));
    std::vector<bool> seen(w.size(), false);
    for (int v : w) {
        if (v < 1 || v > static_cast<int>(w.size()) || seen[v - 1])
            throw std::invalid_argument("Permutation: not a bijective word");
        seen[v - 1] = true;
    }
    p.w_ = std::move(w);
    return p;
}

Permutation Permutation::compose(const Permutation& o) const {
    if (rank() != o.rank())
        throw std::invalid_argument("Permutation::compose: rank mismatch");
    std::vector<int> w(w_.size());
    for (int i = 1; i <= rank(); ++i)
        w[i - 1] = (*this)(o(i));
    return from_one_line(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(w_.size());
    for (int i = 1; i <= rank(); ++i)
        w[w_[i - 1] - 1] = i;
    return from_one_line(std::move(w));
}

Permutation Permutation::times_s(int i) const {
    if (i < 1 || i >= rank())
        throw std::out_of_range("Permutation::times_s");
    Permutation p = *this;
    std::swap(p.w_[i - 1], p.w_[i]);
    return p;
}

int Permutation::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
        for (std::size_t j = i + 1; j < w_.size(); ++j)
            if (w_[i] > w_[j])
                ++inv;
    return inv;
}

std::vector<int> Permutation::reduced_word() const {
    // peel descents from the right: w = (w s_i) s_i with l(w s_i) = l(w) - 1
    std::vector<int> word;
    Permutation v = *this;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 1; i < rank(); ++i) {
            if (v(i) > v(i + 1)) {
                word.push_back(i);
                v = v.times_s(i);
                moved = true;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= rank(); ++i)
        if (w_[i - 1] != i)
            return false;
    return true;
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < w_.size(); ++i)
        os << (i ? "," : "") << w_[i];
    os << "]";
    return os.str();
}

std::pair<int, int> StdTableau::cell_of(int value) const {
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j] == value)
                return {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
    throw std::out_of_range("StdTableau::cell_of");
}

std::string StdTableau::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i)
            os << "/";
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            os << (j ? "," : "") << rows[i][j];
    }
    return os.str();
}

namespace {

void compositions_rec(int n, int r, std::vector<int>& acc,
                      std::vector<Composition>& out) {
    if (n == 1) {
        acc.push_back(r);
        out.push_back(Composition(acc));
        acc.pop_back();
        return;
    }
    for (int first = r; first >= 0; --first) {
        acc.push_back(first);
        compositions_rec(n - 1, r - first, acc, out);
        acc.pop_back();
    }
}

void partitions_rec(int r, int maxpart, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (r == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(r, maxpart); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(r - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Composition> enumerate_compositions(int n, int r) {
    if (n < 1 || r < 0)
        throw std::domain_error("enumerate_compositions: need n >= 1, r >= 0");
    std::vector<Composition> out;
    std::vector<int> acc;
    compositions_rec(n, r, acc, out);
    return out;
}

std::vector<Partition> partitions_of(int r) {
    if (r < 0)
        throw std::domain_error("partitions_of: negative r");
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(r, r == 0 ? 1 : r, acc, out);
    return out;
}

Partition dual_partition(const Partition& la) {
    std::vector<int> dual;
    for (int i = 1; i <= la.part(1); ++i) {
        int count = 0;
        for (int p : la.parts())
            if (p >= i)
                ++count;
        dual.push_back(count);
    }
    return Partition(std::move(dual));
}

bool dominance_le(const Partition& mu, const Partition& la) {
    if (mu.size() != la.size())
        throw std::domain_error("dominance_le: partitions of different sizes");
    int pm = 0, pl = 0;
    int len = std::max(mu.num_parts(), la.num_parts());
    for (int i = 1; i <= len; ++i) {
        pm += mu.part(i);
        pl += la.part(i);
        if (pm > pl)
            return false;
    }
    return true;
}

bool dominance_lt(const Partition& mu, const Partition& la) {
    return mu != la && dominance_le(mu, la);
}

StdTableau superstandard_tableau(const Partition& la) {
    StdTableau t;
    t.shape = la;
    int next = 1;
    for (int p : la.parts()) {
        std::vector<int> row(p);
        std::iota(row.begin(), row.end(), next);
        next += p;
        t.rows.push_back(std::move(row));
    }
    return t;
}

Monomial residue(const Partition& la, int s) {
    if (s < 1 || s > la.size())
        throw std::domain_error("residue: entry out of range");
    auto [i, j] = superstandard_tableau(la).cell_of(s);
    return Monomial(1, 1, 2 * (j - i));
}

namespace {

void tableaux_rec(const Partition& la, std::vector<int>& fill, int value, int r,
                  std::vector<StdTableau>& out) {
    if (value > r) {
        StdTableau t;
        t.shape = la;
        t.rows.resize(la.num_parts());
        std::vector<int> filled(la.num_parts(), 0);
        // replay is done by the caller; here fill[v-1] is the row of v
        for (int v = 1; v <= r; ++v)
            t.rows[fill[v - 1]].push_back(v);
        out.push_back(std::move(t));
        return;
    }
    std::vector<int> count(la.num_parts(), 0);
    for (int v = 0; v < value - 1; ++v)
        ++count[fill[v]];
    for (int row = 0; row < la.num_parts(); ++row) {
        if (count[row] >= la.part(row + 1))
            continue;
        if (row > 0 && count[row - 1] <= count[row])
            continue; // the cell above must already be filled
        fill[value - 1] = row;
        tableaux_rec(la, fill, value + 1, r, out);
    }
}

} // namespace

std::vector<StdTableau> std_tableaux(const Partition& la) {
    int r = la.size();
    if (r == 0)
        return {StdTableau{la, {}}};
    std::vector<StdTableau> out;
    std::vector<int> fill(r, 0);
    tableaux_rec(la, fill, 1, r, out);
    return out;
}

Permutation d_of(const StdTableau& t) {
    int r = t.shape.size();
    if (r == 0)
        throw std::invalid_argument("d_of: empty tableau");
    StdTableau super = superstandard_tableau(t.shape);
    std::vector<int> w(r);
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.rows[i].size(); ++j)
            w[super.rows[i][j] - 1] = t.rows[i][j];
    return Permutation::from_one_line(std::move(w));
}

namespace {

// all permutations of the block of positions [start, start+len)
std::vector<std::vector<int>> block_orders(int start, int len) {
    std::vector<int> base(len);
    std::iota(base.begin(), base.end(), start);
    std::vector<std::vector<int>> out;
    std::sort(base.begin(), base.end());
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

} // namespace

std::vector<Permutation> young_subgroup(const Composition& la) {
    int r = la.size();
    if (r < 1)
        throw std::invalid_argument("young_subgroup: empty composition");
    std::vector<Permutation> elems{Permutation(r)};
    int start = 1;
    for (int part : la.parts) {
        if (part <= 1) {
            start += part;
            continue;
        }
        auto orders = block_orders(start, part);
        std::vector<Permutation> next;
        next.reserve(elems.size() * orders.size());
        for (const auto& e : elems) {
            for (const auto& ord : orders) {
                std::vector<int> w = e.one_line();
                for (int k = 0; k < part; ++k)
                    w[start - 1 + k] = ord[k];
                next.push_back(Permutation::from_one_line(std::move(w)));
            }
        }
        elems = std::move(next);
        start += part;
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

Permutation longest_element(const Composition& la) {
    int r = la.size();
    if (r < 1)
        throw std::invalid_argument("longest_element: empty composition");
    std::vector<int> w(r);
    std::iota(w.begin(), w.end(), 1);
    int start = 0;
    for (int part : la.parts) {
        std::reverse(w.begin() + start, w.begin() + start + part);
        start += part;
    }
    return Permutation::from_one_line(std::move(w));
}

int hook_length(const Partition& la, int i, int j) {
    if (i < 1 || i > la.num_parts() || j < 1 || j > la.part(i))
        throw std::out_of_range("hook_length");
    int arm = la.part(i) - j;
    int leg = 0;
    for (int k = i + 1; k <= la.num_parts(); ++k)
        if (la.part(k) >= j)
            ++leg;
    return arm + leg + 1;
}

} // namespace qschur
