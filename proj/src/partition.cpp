#include "invvec/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>

namespace invvec {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition part must be positive, got " +
                                        std::to_string(parts_[i]));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text) {
    if (text == "-") return Partition{};
    if (text.empty()) throw std::invalid_argument("empty partition text (use '-' for the empty partition)");
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                  : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw std::invalid_argument("bad partition token '" + std::string(token) + "'");
        if (value < 1)
            throw std::invalid_argument("bad partition token '" + std::string(token) +
                                        "': parts must be positive");
        if (!parts.empty() && value > parts.back())
            throw std::invalid_argument("bad partition token '" + std::string(token) +
                                        "': parts must be weakly decreasing");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == text.size()) throw std::invalid_argument("trailing comma in partition text");
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

namespace {

void generate_rec(int remaining, int max_part, std::vector<int>& acc,
                  std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        acc.push_back(part);
        generate_rec(remaining - part, part, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n, int bound) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be non-negative");
    if (n > bound)
        throw SizeLimitError("enumerate_partitions: n = " + std::to_string(n) +
                             " exceeds bound " + std::to_string(bound));
    std::vector<Partition> out;
    std::vector<int> acc;
    generate_rec(n, n, acc, out);
    if (n == 0) return {Partition{}};
    return out;
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return Partition{};
    std::vector<int> result(p.parts()[0], 0);
    for (int part : p.parts())
        for (int i = 0; i < part; ++i) ++result[i];
    return Partition(std::move(result));
}

bool contains(const Partition& outer, const Partition& inner) {
    for (int i = 0; i < inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.n() != b.n())
        throw std::domain_error("dominates: partitions must have equal size");
    long long prefix_a = 0, prefix_b = 0;
    int len = std::max(a.length(), b.length());
    for (int i = 0; i < len; ++i) {
        prefix_a += a.part(i);
        prefix_b += b.part(i);
        if (prefix_a < prefix_b) return false;
    }
    return true;
}

Partition power_cycle_type(const Partition& mu, long long power) {
    if (power < 0) throw std::invalid_argument("power_cycle_type: power must be non-negative");
    std::vector<int> parts;
    for (int m : mu.parts()) {
        long long g = std::gcd<long long>(m, power); // gcd(m, 0) = m
        for (long long c = 0; c < g; ++c) parts.push_back(static_cast<int>(m / g));
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

long long order_of(const Partition& mu) {
    if (mu.empty()) throw std::domain_error("order_of: empty partition has no generator");
    long long order = 1;
    for (int m : mu.parts()) order = std::lcm<long long>(order, m);
    return order;
}

bool is_even_permutation(const Partition& mu) {
    long long transpositions = 0;
    for (int m : mu.parts()) transpositions += m - 1;
    return transpositions % 2 == 0;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!contains(outer_, inner_))
        throw std::domain_error("SkewShape: inner partition not contained in outer");
}

int SkewShape::column_length(int c) const {
    int len = 0;
    for (int r = 0; r < row_count(); ++r)
        if (row_begin(r) <= c && c < row_end(r)) ++len;
    return len;
}

std::vector<int> SkewShape::column_lengths() const {
    std::vector<int> lengths(outer_.part(0), 0);
    for (int r = 0; r < row_count(); ++r)
        for (int c = row_begin(r); c < row_end(r); ++c) ++lengths[c];
    return lengths;
}

} // namespace invvec
