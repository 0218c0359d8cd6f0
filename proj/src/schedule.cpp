// schedule.cpp - schedule construction, grammar parsing, digit codec

#include "sxc/schedule.hpp"

#include <limits>
#include <sstream>

namespace sxc {

namespace {

void check_entries(const std::vector<mpz_class>& v, const char* what) {
    for (const auto& m : v) {
        if (m < 2) {
            std::ostringstream os;
            os << what << " entry " << m.get_str() << " is < 2";
            throw domain_error(os.str());
        }
    }
}

std::vector<mpz_class> parse_int_list(std::string_view text, const char* what) {
    std::vector<mpz_class> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start)
            throw parse_error(std::string("expected integer in ") + what);
        out.emplace_back(std::string(text.substr(start, pos - start)), 10);
        if (pos == text.size()) break;
        if (text[pos] != ',')
            throw parse_error(std::string("unexpected character '") + text[pos] +
                              "' in " + what);
        ++pos;
    }
    // the grammar requires values >= 2, so this is a text error, not a
    // domain error like in the vector factories
    for (const auto& m : out) {
        if (m < 2) {
            std::ostringstream os;
            os << what << " entry " << m.get_str() << " is < 2";
            throw parse_error(os.str());
        }
    }
    return out;
}

} // namespace

RadixSchedule::RadixSchedule(std::vector<mpz_class> prefix,
                             std::vector<mpz_class> tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {}

RadixSchedule RadixSchedule::finite(std::vector<mpz_class> prefix) {
    check_entries(prefix, "prefix");
    if (prefix.empty()) throw domain_error("finite schedule must be nonempty");
    return RadixSchedule(std::move(prefix), {});
}

RadixSchedule RadixSchedule::periodic(std::vector<mpz_class> prefix,
                                      std::vector<mpz_class> tail) {
    check_entries(prefix, "prefix");
    check_entries(tail, "tail");
    if (tail.empty()) throw domain_error("periodic tail must be nonempty");
    return RadixSchedule(std::move(prefix), std::move(tail));
}

RadixSchedule RadixSchedule::parse(std::string_view text) {
    if (text.empty()) throw parse_error("empty schedule");
    std::size_t semi = text.find(';');
    if (semi == std::string_view::npos)
        return finite(parse_int_list(text, "prefix"));

    std::string_view prefix_part = text.substr(0, semi);
    std::string_view tail_part = text.substr(semi + 1);
    if (tail_part.empty() || tail_part.back() != '*')
        throw parse_error("tail must end with '*'");
    tail_part.remove_suffix(1);
    if (tail_part.empty()) throw parse_error("empty tail");
    if (tail_part.find(';') != std::string_view::npos)
        throw parse_error("multiple ';' in schedule");

    std::vector<mpz_class> prefix;
    if (!prefix_part.empty()) prefix = parse_int_list(prefix_part, "prefix");
    return periodic(std::move(prefix), parse_int_list(tail_part, "tail"));
}

std::size_t RadixSchedule::position_count() const {
    return is_finite() ? prefix_.size() : std::numeric_limits<std::size_t>::max();
}

const mpz_class& RadixSchedule::radix(std::size_t i) const {
    if (i == 0) throw domain_error("radix index is 1-based");
    if (i <= prefix_.size()) return prefix_[i - 1];
    if (tail_.empty()) {
        std::ostringstream os;
        os << "radix index " << i << " past finite schedule of length "
           << prefix_.size();
        throw domain_error(os.str());
    }
    return tail_[(i - prefix_.size() - 1) % tail_.size()];
}

mpz_class RadixSchedule::weight(std::size_t k) const {
    if (is_finite() && k > prefix_.size()) {
        std::ostringstream os;
        os << "weight index " << k << " past finite schedule of length "
           << prefix_.size();
        throw domain_error(os.str());
    }
    mpz_class w = 1;
    for (std::size_t i = 1; i <= k; ++i) w *= radix(i);
    return w;
}

DigitVector RadixSchedule::to_digits(const mpz_class& n) const {
    if (n < 0) throw domain_error("to_digits: negative value");
    DigitVector digits;
    mpz_class rest = n;
    std::size_t i = 1;
    while (rest != 0) {
        if (is_finite() && i > prefix_.size()) {
            std::ostringstream os;
            os << "value " << n.get_str() << " out of range for finite schedule "
               << to_string();
            throw domain_error(os.str());
        }
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(),
                    radix(i).get_mpz_t());
        digits.push_back(std::move(r));
        rest = std::move(q);
        ++i;
    }
    return digits;
}

mpz_class RadixSchedule::from_digits(std::span<const mpz_class> digits) const {
    if (is_finite() && digits.size() > prefix_.size())
        throw domain_error("more digits than a finite schedule has positions");
    mpz_class value = 0;
    mpz_class w = 1;
    for (std::size_t p = 0; p < digits.size(); ++p) {
        const mpz_class& m = radix(p + 1);
        if (digits[p] < 0 || digits[p] >= m) {
            std::ostringstream os;
            os << "digit " << digits[p].get_str() << " at position " << p
               << " outside [0, " << m.get_str() << ")";
            throw domain_error(os.str());
        }
        value += digits[p] * w;
        w *= m;
    }
    return value;
}

std::string RadixSchedule::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
        if (i) out += ',';
        out += prefix_[i].get_str();
    }
    if (!tail_.empty()) {
        out += ';';
        for (std::size_t i = 0; i < tail_.size(); ++i) {
            if (i) out += ',';
            out += tail_[i].get_str();
        }
        out += '*';
    }
    return out;
}

} // namespace sxc
