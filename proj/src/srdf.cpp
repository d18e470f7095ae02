#include "srd/srdf.hpp"

#include <numeric>

namespace srd {

Label label_from_int(int v) {
    switch (v) {
    case -1: return Label::Minus;
    case 1: return Label::One;
    case 2: return Label::Two;
    default: throw PreconditionError("invalid label value " + std::to_string(v) + " (expected -1, 1 or 2)");
    }
}

Labeling uniform_labeling(Vertex n, Label l) { return Labeling(static_cast<std::size_t>(n), l); }

std::string_view reason_name(ViolationReason r) {
    switch (r) {
    case ViolationReason::LabelsumBelowOne: return "labelsum_below_one";
    case ViolationReason::MinusWithoutTwoNeighbour: return "minus_without_two_neighbour";
    }
    return "unknown";
}

int labelsum(const Graph& g, const Labeling& f, Vertex u) {
    int sum = value(f[u]);
    for (Vertex v : g.neighbours(u))
        sum += value(f[v]);
    return sum;
}

long long weight(std::span<const Label> f) {
    long long sum = 0;
    for (Label l : f)
        sum += value(l);
    return sum;
}

Verdict is_valid_srdf(const Graph& g, const Labeling& f) {
    if (static_cast<Vertex>(f.size()) != g.order())
        throw PreconditionError("labeling size does not match vertex count");
    Verdict verdict;
    for (Vertex u = 0; u < g.order(); ++u) {
        if (labelsum(g, f, u) < 1)
            verdict.violations.push_back({u, ViolationReason::LabelsumBelowOne});
        if (f[u] == Label::Minus) {
            bool has_two = false;
            for (Vertex v : g.neighbours(u))
                has_two = has_two || f[v] == Label::Two;
            if (!has_two)
                verdict.violations.push_back({u, ViolationReason::MinusWithoutTwoNeighbour});
        }
    }
    return verdict;
}

Rational Rational::make(long long num, long long den) {
    if (den == 0)
        throw PreconditionError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num, den);
    return {num / g, den / g};
}

long long Rational::floor() const noexcept {
    long long q = num / den;
    if (num % den != 0 && num < 0)
        --q;
    return q;
}

long long Rational::ceil() const noexcept {
    long long q = num / den;
    if (num % den != 0 && num > 0)
        ++q;
    return q;
}

Rational lower_bound_degree(const Graph& g) {
    if (g.order() < 1)
        throw PreconditionError("lower bound needs at least one vertex");
    const long long big = g.max_degree();
    const long long small = g.min_degree();
    const long long numer = -2 * big * big + 2 * big * small + big + 2 * small + 3;
    const long long denom = (big + 1) * (2 * big + small + 3);
    return Rational::make(numer * g.order(), denom);
}

long long component_lower_bound(const Graph& g) {
    long long total = 0;
    for (const auto& comp : connected_components(g))
        total += lower_bound_degree(induced_subgraph(g, comp)).ceil();
    return total;
}

}  // namespace srd
