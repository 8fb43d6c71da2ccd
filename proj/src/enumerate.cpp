#include "qslab/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace qslab {

namespace {

bool descend(Partition& stack, long remaining, long max_part,
             const std::function<bool(const Partition&)>& visit) {
    if (remaining == 0) return visit(stack);
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
        stack.push_back(p);
        bool keep_going = descend(stack, remaining - p, p, visit);
        stack.pop_back();
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace

void for_each_partition(long n, const std::function<bool(const Partition&)>& visit) {
    if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
    Partition stack;
    stack.reserve(static_cast<std::size_t>(n));
    descend(stack, n, n == 0 ? 1 : n, visit);
}

std::vector<Partition> partitions_of(long n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

PartitionConstraint PartitionConstraint::parse(const std::string& text) {
    auto param_of = [&](std::size_t prefix_len) {
        std::string tail = text.substr(prefix_len);
        std::size_t used = 0;
        long k = std::stol(tail, &used);
        if (used != tail.size() || k < 1) throw std::invalid_argument("bad constraint parameter: " + text);
        return k;
    };
    try {
        if (text == "ped") return {Tag::Ped, 0};
        if (text == "de1") return {Tag::DE1, 0};
        if (text == "de2") return {Tag::DE2, 0};
        if (text == "de3") return {Tag::DE3, 0};
        if (text == "dee") return {Tag::DEe, 0};
        if (text == "reg4gt1") return {Tag::Reg4Gt1, 0};
        if (text.rfind("reg:", 0) == 0) {
            long t = param_of(4);
            if (t < 2) throw std::invalid_argument("regular-partition parameter must be at least 2");
            return {Tag::Reg, t};
        }
        if (text.rfind("deGeq:", 0) == 0) return {Tag::DEGeq, param_of(6)};
        if (text.rfind("deExact:", 0) == 0) return {Tag::DEExact, param_of(8)};
        if (text.rfind("deeExact:", 0) == 0) return {Tag::DEeExact, param_of(9)};
        if (text.rfind("deeGeq:", 0) == 0) return {Tag::DEeGeq, param_of(7)};
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad constraint syntax: " + text);
    }
    throw std::invalid_argument("unknown constraint: " + text);
}

std::string PartitionConstraint::str() const {
    switch (tag) {
        case Tag::Reg: return "reg:" + std::to_string(param);
        case Tag::Ped: return "ped";
        case Tag::DE1: return "de1";
        case Tag::DE2: return "de2";
        case Tag::DE3: return "de3";
        case Tag::DEGeq: return "deGeq:" + std::to_string(param);
        case Tag::DEExact: return "deExact:" + std::to_string(param);
        case Tag::DEe: return "dee";
        case Tag::DEeExact: return "deeExact:" + std::to_string(param);
        case Tag::DEeGeq: return "deeGeq:" + std::to_string(param);
        case Tag::Reg4Gt1: return "reg4gt1";
    }
    return "?";
}

std::string PartitionConstraint::registry_name() const {
    switch (tag) {
        case Tag::Reg: return param == 4 ? "reg4" : "";
        case Tag::Ped: return "ped";
        case Tag::DE1: return "DE1";
        case Tag::DE2: return "DE2";
        case Tag::DE3: return "DE3";
        case Tag::DEGeq: return "DEgeq:" + std::to_string(param);
        case Tag::DEExact: return "DEexact:" + std::to_string(param);
        case Tag::DEe: return "DEe";
        case Tag::DEeExact: return "DEeExact:" + std::to_string(param);
        case Tag::DEeGeq: return "DEeGeq:" + std::to_string(param);
        case Tag::Reg4Gt1: return "reg4gt1";
    }
    return "";
}

namespace {

// even parts strictly below `bound` are pairwise distinct (bound < 0: all evens)
bool evens_distinct_below(const Partition& p, long bound) {
    long prev = -1;
    for (long x : p) {
        if (bound >= 0 && x >= bound) continue;
        if (x % 2 == 0) {
            if (x == prev) return false;
            prev = x;
        }
    }
    return true;
}

long largest_multiplicity(const Partition& p) {
    long m = 0;
    for (long x : p) {
        if (x != p.front()) break;
        ++m;
    }
    return m;
}

}  // namespace

bool PartitionConstraint::matches(const Partition& p) const {
    switch (tag) {
        case Tag::Reg:
            return std::all_of(p.begin(), p.end(), [&](long x) { return x % param != 0; });
        case Tag::Ped:
            return evens_distinct_below(p, -1);
        case Tag::DE1:
            return !p.empty() && p.front() % 2 == 1 && evens_distinct_below(p, -1);
        case Tag::DE2:
        case Tag::DE3:
        case Tag::DEGeq:
        case Tag::DEExact: {
            if (p.empty() || p.front() % 2 != 1 || !evens_distinct_below(p, -1)) return false;
            long m = largest_multiplicity(p);
            if (tag == Tag::DE2) return m >= 2;
            if (tag == Tag::DE3) return m == 1;
            if (tag == Tag::DEGeq) return m >= param;
            return m == param;
        }
        case Tag::DEe:
        case Tag::DEeGeq: {
            if (p.empty()) return true;  // the empty partition belongs to these families
            if (p.front() % 2 != 0 || !evens_distinct_below(p, p.front())) return false;
            long m = largest_multiplicity(p);
            if (tag == Tag::DEe) return m <= 2;
            return m == param || m == param + 1;
        }
        case Tag::DEeExact: {
            if (p.empty() || p.front() % 2 != 0 || !evens_distinct_below(p, p.front())) return false;
            return largest_multiplicity(p) == param;
        }
        case Tag::Reg4Gt1:
            return std::all_of(p.begin(), p.end(), [](long x) { return x % 4 != 0 && x >= 2; });
    }
    return false;
}

long long count(long n, const PartitionConstraint& c) {
    long long total = 0;
    for_each_partition(n, [&](const Partition& p) {
        if (c.matches(p)) ++total;
        return true;
    });
    return total;
}

Series oracle_series(const PartitionConstraint& c, long order) {
    std::vector<Integer> coeffs(static_cast<std::size_t>(order) + 1);
    for (long n = 0; n <= order; ++n)
        coeffs[static_cast<std::size_t>(n)] = static_cast<long>(count(n, c));
    return Series(std::move(coeffs), order);
}

std::vector<PartitionConstraint> all_constraints(long k_max) {
    using Tag = PartitionConstraint::Tag;
    std::vector<PartitionConstraint> out = {
        {Tag::Reg, 2}, {Tag::Reg, 3}, {Tag::Reg, 4}, {Tag::Ped, 0},  {Tag::DE1, 0},
        {Tag::DE2, 0}, {Tag::DE3, 0}, {Tag::DEe, 0}, {Tag::Reg4Gt1, 0},
    };
    for (long k = 1; k <= k_max; ++k) out.push_back({Tag::DEGeq, k});
    for (long k = 1; k <= k_max; ++k) out.push_back({Tag::DEExact, k});
    for (long k = 1; k <= k_max; ++k) out.push_back({Tag::DEeExact, k});
    for (long k = 1; k <= k_max; ++k) out.push_back({Tag::DEeGeq, k});
    return out;
}

}  // namespace qslab
