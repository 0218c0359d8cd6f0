#pragma once
// schedule.hpp - mixed-radix schedules and exact digit decomposition
//
// A schedule is the sequence m_1, m_2, ... of radices (all >= 2), given as a
// finite prefix plus an optional periodic tail.  Indexing convention used
// throughout the library:
//   * radices are 1-based: m_i, i >= 1;
//   * digit positions are 0-based: digit eps_p has weight W_p = m_1...m_p
//     (W_0 = 1) and range [0, m_{p+1});
//   * value = sum_p eps_p * W_p, the unique mixed-radix expansion.
// Getting this off by one corrupts everything downstream, so all code goes
// through radix()/weight()/to_digits() rather than indexing raw vectors.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "sxc/error.hpp"

namespace sxc {

// canonical form: no trailing zero digit; zero is the empty vector
using DigitVector = std::vector<mpz_class>;

class RadixSchedule {
public:
    // throws sxc::domain_error if any entry < 2 or a given tail is empty
    static RadixSchedule finite(std::vector<mpz_class> prefix);
    static RadixSchedule periodic(std::vector<mpz_class> prefix,
                                  std::vector<mpz_class> tail);

    // grammar:  schedule := prefix | prefix ';' tail '*' | ';' tail '*'
    //           prefix   := int (',' int)*      (same for tail)
    //           int      := [0-9]+ with value >= 2, no whitespace anywhere
    static RadixSchedule parse(std::string_view text);

    bool is_finite() const { return tail_.empty(); }
    std::size_t prefix_size() const { return prefix_.size(); }
    std::size_t tail_size() const { return tail_.size(); }
    const std::vector<mpz_class>& prefix() const { return prefix_; }
    const std::vector<mpz_class>& tail() const { return tail_; }

    // number of defined radix positions; SIZE_MAX when a tail is present
    std::size_t position_count() const;

    // m_i, 1-based; throws sxc::domain_error past a finite schedule
    const mpz_class& radix(std::size_t i) const;

    // W_k = m_1...m_k, W_0 = 1; throws past a finite schedule
    mpz_class weight(std::size_t k) const;

    // canonical digit expansion of n >= 0; throws sxc::domain_error for
    // n < 0 or n >= W_{prefix_size} on a finite schedule
    DigitVector to_digits(const mpz_class& n) const;

    // sum of digits[p] * W_p; throws sxc::domain_error on a digit outside
    // [0, m_{p+1}) or more digits than a finite schedule has positions
    mpz_class from_digits(std::span<const mpz_class> digits) const;

    // round-trips through parse()
    std::string to_string() const;

    bool operator==(const RadixSchedule&) const = default;

private:
    RadixSchedule(std::vector<mpz_class> prefix, std::vector<mpz_class> tail);

    std::vector<mpz_class> prefix_;
    std::vector<mpz_class> tail_;   // empty <=> finite schedule
};

} // namespace sxc
