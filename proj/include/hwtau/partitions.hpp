#pragma once

#include "hwtau/rational.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace hwtau {

class Partition {
public:
    Partition() = default;
    // Accepts parts in any order; zeros are dropped, negatives rejected.
    Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    static Partition ones(int n);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[i]; }
    bool empty() const { return parts_.empty(); }

    // m[i] = multiplicity of part i, index 0 unused.
    std::vector<int> multiplicities() const;
    // Exponent vector (m_1, m_2, ...) without the unused slot.
    std::vector<int> exponent_vector() const;
    static Partition from_exponents(const std::vector<int>& e);

    Partition conjugate() const;
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    // Reverse lexicographic is the canonical order: (3) < (2,1) < (1,1,1).
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All partitions of n in reverse lexicographic order.
std::vector<Partition> enumerate_partitions(int n);
size_t partition_count(int n);

int colength(const Partition& p);
Integer aut_order(const Partition& p);
Integer z_order(const Partition& p);
std::pair<Integer, Integer> aut_and_z(const Partition& p);
// Size of the conjugacy class cyc(p) in S_|p|.
Integer class_size(const Partition& p);
// Product of the parts.
Integer part_product(const Partition& p);

std::vector<int> contents(const Partition& p);

struct GenusInfo {
    Rational g;
    bool admissible;
};
GenusInfo genus_of(const Partition& mu, const Partition& nu, int d);

// Frobenius coordinates (a_1..a_r | b_1..b_r).
std::pair<std::vector<int>, std::vector<int>> frobenius(const Partition& p);

}  // namespace hwtau
