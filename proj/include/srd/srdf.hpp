#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "srd/graph.hpp"

namespace srd {

enum class Label : std::int8_t { Minus = -1, One = 1, Two = 2 };

constexpr int value(Label l) noexcept { return static_cast<int>(l); }

/// Throws PreconditionError for anything outside {-1, 1, 2}.
Label label_from_int(int v);

/// A signed Roman labeling candidate: one label per vertex, indexed by vertex.
using Labeling = std::vector<Label>;

Labeling uniform_labeling(Vertex n, Label l);

enum class ViolationReason { LabelsumBelowOne, MinusWithoutTwoNeighbour };

std::string_view reason_name(ViolationReason r);

struct Violation {
    Vertex vertex;
    ViolationReason reason;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct Verdict {
    std::vector<Violation> violations;

    bool valid() const noexcept { return violations.empty(); }
};

/// Sum of labels over the closed neighbourhood of u.
int labelsum(const Graph& g, const Labeling& f, Vertex u);

long long weight(std::span<const Label> f);

/// Checks every vertex and reports all failures, ordered by vertex then reason.
Verdict is_valid_srdf(const Graph& g, const Labeling& f);

/// Exact rational with positive denominator, always in lowest terms.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational make(long long num, long long den);

    long long ceil() const noexcept;
    long long floor() const noexcept;

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Degree-based lower bound on the minimum SRDF weight:
///   (-2D^2 + 2Dd + D + 2d + 3) / ((D + 1)(2D + d + 3)) * n
/// with D, d the maximum and minimum degree. Requires n >= 1.
Rational lower_bound_degree(const Graph& g);

/// Sum over connected components of ceil(lower_bound_degree(component)).
long long component_lower_bound(const Graph& g);

}  // namespace srd
