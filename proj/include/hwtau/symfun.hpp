#pragma once

#include "hwtau/graded_poly.hpp"
#include "hwtau/partitions.hpp"

#include <map>
#include <memory>
#include <vector>

namespace hwtau {

// Upper bound on N for character tables. Defaults to 10.
int char_table_cap();
void set_char_table_cap(int cap);

// chi^lambda(mu) by the Murnaghan-Nakayama rule (memoized).
long long character(const Partition& lambda, const Partition& mu);

class CharTable {
public:
    explicit CharTable(int n);

    int n() const { return n_; }
    const std::vector<Partition>& partitions() const { return parts_; }
    size_t index(const Partition& p) const;
    // value(i, j) = chi^{partitions[i]}(partitions[j])
    long long value(size_t irrep, size_t cls) const { return values_[irrep][cls]; }
    long long operator()(const Partition& irrep, const Partition& cls) const;

private:
    int n_;
    std::vector<Partition> parts_;
    std::map<Partition, size_t> idx_;
    std::vector<std::vector<long long>> values_;
};

// Cached, immutable table; throws ResourceError beyond the cap.
std::shared_ptr<const CharTable> char_table(int n);

// s_lambda = sum_mu c_mu p_mu with c_mu = chi^lambda(mu)/z_mu.
std::map<Partition, Rational> schur_to_power(const Partition& lambda);

enum class Alphabet { T, S };

// p_mu in flow variables (x_i = p_i/i): (prod mu_i) * x^{m(mu)}.
Rational power_sum_factor(const Partition& mu);

// s_lambda expressed in the t (or s) alphabet, grade 0.
GradedPoly schur_poly(const Partition& lambda, Alphabet which, int w_max, int d_max);

enum class Basis { m, e, h, f, p };

Rational eval_basis(Basis basis, const Partition& lambda, const std::vector<Rational>& c);

Rational elementary(int k, const std::vector<Rational>& c);
Rational complete(int k, const std::vector<Rational>& c);
Rational power_sum(int k, const std::vector<Rational>& c);

// h_n of the alphabet with generating series exp(sum_k sign*s_k z^k / beta).
Rational h_poly(int n, int sign, const Rational& beta, const std::vector<Rational>& s);
// h_0..h_n in one pass.
std::vector<Rational> h_poly_list(int n, int sign, const Rational& beta, const std::vector<Rational>& s);

}  // namespace hwtau
