#pragma once

#include "hwtau/partitions.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace hwtau {

using Perm = std::vector<uint8_t>;

Perm identity_perm(int n);
// (p*q)(i) = p(q(i))
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
Partition cycle_type(const Perm& p);
std::vector<Perm> all_perms(int n);

// Class algebra of Z[S_N] in the basis of class sums.
class ClassAlgebra {
public:
    explicit ClassAlgebra(int n);

    int n() const { return n_; }
    const std::vector<Partition>& classes() const { return classes_; }
    const std::vector<Integer>& sizes() const { return sizes_; }
    size_t index(const Partition& p) const;
    size_t identity_index() const { return classes_.size() - 1; }
    // C_i C_j = sum_k structure(i, j, k) C_k
    long long structure(size_t i, size_t j, size_t k) const { return c_[i][j][k]; }
    const std::vector<Perm>& members(size_t cls) const { return members_[cls]; }

    // x * C_i in the class-sum basis.
    std::vector<Integer> multiply(const std::vector<Integer>& x, size_t i) const;

private:
    int n_;
    std::vector<Partition> classes_;
    std::vector<Integer> sizes_;
    std::map<Partition, size_t> idx_;
    std::vector<std::vector<Perm>> members_;
    std::vector<std::vector<std::vector<long long>>> c_;
};

constexpr int class_algebra_cap = 7;

std::shared_ptr<const ClassAlgebra> build_class_algebra(int n);

// (1/N!) * #{(a_1..a_k) : a_i in cyc(profile_i), a_1...a_k = id}; zero on weight mismatch.
Rational factorization_count(int n, const std::vector<Partition>& profiles);
// Same count by enumerating permutation tuples directly.
Rational factorization_count_direct(int n, const std::vector<Partition>& profiles, long long budget = 20'000'000);

// Restricted to tuples generating a transitive subgroup.
Rational transitive_factorization_count(int n, const std::vector<Partition>& profiles,
                                        long long budget = 20'000'000);

// Pairs (h, path) with h in cyc(nu) and a weakly monotone transposition path
// of signature lambda whose left product applied to h lies in cyc(mu).
Integer monotone_path_count(int n, const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace hwtau
