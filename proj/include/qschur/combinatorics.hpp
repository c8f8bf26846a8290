#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qschur/laurent.hpp"

namespace qschur {

/// Composition of r into a fixed number of parts; trailing zeros are kept
/// because the part count indexes tensor weight decompositions.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p);

    int length() const { return static_cast<int>(parts.size()); }
    int size() const; // sum of parts
    bool operator==(const Composition&) const = default;
    std::string str() const;
};

/// Partition: weakly decreasing positive parts. Trailing zeros are dropped
/// on construction; the empty partition is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts); // validates, drops zeros

    int size() const;                              // |lambda|
    int num_parts() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;                         // 1-based, 0 beyond the end
    const std::vector<int>& parts() const { return parts_; }
    Composition as_composition(int length) const;  // pads with zeros

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
    std::string str() const;

private:
    std::vector<int> parts_;
};

/// Permutation of {1..r} in one-line notation.
class Permutation {
public:
    explicit Permutation(int r); // identity
    static Permutation from_one_line(std::vector<int> w);

    int rank() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[i - 1]; }
    const std::vector<int>& one_line() const { return w_; }

    Permutation compose(const Permutation& o) const; // (this o other)(i) = this(other(i))
    Permutation inverse() const;
    Permutation times_s(int i) const;                // swap positions i, i+1
    int length() const;                              // inversion count
    std::vector<int> reduced_word() const;           // s_{i1} ... s_{ik} left to right
    bool is_identity() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;
    std::string str() const;

private:
    std::vector<int> w_;
};

/// Standard tableau: bijective filling of the diagram of `shape` by 1..r,
/// increasing along rows and down columns.
struct StdTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    int entry(int i, int j) const { return rows[i - 1][j - 1]; } // 1-based
    std::pair<int, int> cell_of(int value) const;                // (row, col), 1-based
    bool operator==(const StdTableau&) const = default;
    std::string str() const;
};

/// All compositions of r into n parts, first part descending; the count is
/// binom(r+n-1, n-1).
std::vector<Composition> enumerate_compositions(int n, int r);

/// All partitions of r, in descending lexicographic order.
std::vector<Partition> partitions_of(int r);

Partition dual_partition(const Partition& la);

/// Dominance: every partial sum of mu is at most that of lambda.
/// Requires |mu| = |lambda|.
bool dominance_le(const Partition& mu, const Partition& la);

/// Strict dominance mu < la in the dominance order.
bool dominance_lt(const Partition& mu, const Partition& la);

/// The row-filling tableau: 1..r placed left to right down successive rows.
StdTableau superstandard_tableau(const Partition& la);

/// a * q^{2(j-i)} for the cell (i, j) of the superstandard tableau holding s.
Monomial residue(const Partition& la, int s);

std::vector<StdTableau> std_tableaux(const Partition& la);

/// The permutation carrying the superstandard tableau to t entrywise.
Permutation d_of(const StdTableau& t);

/// All elements of the Young subgroup attached to the composition.
std::vector<Permutation> young_subgroup(const Composition& la);

/// Longest element of the Young subgroup (each block reversed).
Permutation longest_element(const Composition& la);

/// Hook length of the cell (i, j), 1-based. Exposed for test oracles.
int hook_length(const Partition& la, int i, int j);

} // namespace qschur
