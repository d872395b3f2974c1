#pragma once

#include <cmath>
#include <memory>
#include <string>
#include <variant>

#include "extropy/errors.hpp"

namespace extropy {

struct WeightFunction;

struct ConstantWeight {
    double w0 = 1.0;
};

struct IdentityWeight {};

struct PowerWeight {
    int m = 1;
};

struct LogWeight {};

/// base((x - d) / c); arises when studying affine transforms y = c x + d.
struct TransformedWeight {
    std::shared_ptr<const WeightFunction> base;
    double c = 1.0;
    double d = 0.0;
};

struct WeightFunction {
    std::variant<ConstantWeight, IdentityWeight, PowerWeight, LogWeight, TransformedWeight> kind;

    static WeightFunction constant(double w0) {
        if (!(w0 >= 0.0))
            throw Error(ErrorKind::invalid_parameter, "constant weight requires w0 >= 0");
        return {ConstantWeight{w0}};
    }
    static WeightFunction identity() { return {IdentityWeight{}}; }
    static WeightFunction power(int m) {
        if (m < 1) throw Error(ErrorKind::invalid_parameter, "power weight requires m >= 1");
        return {PowerWeight{m}};
    }
    static WeightFunction log() { return {LogWeight{}}; }
};

inline double weight_eval(const WeightFunction& w, double x);

namespace detail {

inline double ipow(double x, int m) {
    double r = 1.0;
    for (int i = 0; i < m; ++i) r *= x;
    return r;
}

}  // namespace detail

/// Pointwise w(x). Log requires x > 0.
inline double weight_eval(const WeightFunction& w, double x) {
    return std::visit(
        [&](const auto& k) -> double {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, ConstantWeight>) {
                return k.w0;
            } else if constexpr (std::is_same_v<K, IdentityWeight>) {
                return x;
            } else if constexpr (std::is_same_v<K, PowerWeight>) {
                return detail::ipow(x, k.m);
            } else if constexpr (std::is_same_v<K, LogWeight>) {
                if (!(x > 0.0)) throw Error(ErrorKind::domain_error, "log weight requires x > 0");
                return std::log(x);
            } else {
                return weight_eval(*k.base, (x - k.d) / k.c);
            }
        },
        w.kind);
}

/// Antiderivative W with W(0) = 0 and W' = w. Enables exact piecewise
/// integration against step functions.
inline double weight_antiderivative(const WeightFunction& w, double x) {
    return std::visit(
        [&](const auto& k) -> double {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, ConstantWeight>) {
                return k.w0 * x;
            } else if constexpr (std::is_same_v<K, IdentityWeight>) {
                return 0.5 * x * x;
            } else if constexpr (std::is_same_v<K, PowerWeight>) {
                return detail::ipow(x, k.m + 1) / static_cast<double>(k.m + 1);
            } else if constexpr (std::is_same_v<K, LogWeight>) {
                if (x < 0.0) throw Error(ErrorKind::domain_error, "log antiderivative requires x >= 0");
                return x == 0.0 ? 0.0 : x * std::log(x) - x;
            } else {
                if (x < k.d) return 0.0;
                return k.c * weight_antiderivative(*k.base, (x - k.d) / k.c);
            }
        },
        w.kind);
}

/// Returns w((x - d)/c), so that the result evaluated at c*x + d equals w(x).
inline WeightFunction transform_weight(const WeightFunction& w, double c, double d) {
    if (!(c > 0.0)) throw Error(ErrorKind::invalid_parameter, "transform requires c > 0");
    if (!(d >= 0.0)) throw Error(ErrorKind::invalid_parameter, "transform requires d >= 0");
    TransformedWeight t;
    t.base = std::make_shared<WeightFunction>(w);
    t.c = c;
    t.d = d;
    return {t};
}

/// Polynomial growth order of w at +infinity; log counts as order 0.
/// Drives the analytic tail-convergence checks.
inline int weight_tail_degree(const WeightFunction& w) {
    return std::visit(
        [&](const auto& k) -> int {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, ConstantWeight>) {
                return 0;
            } else if constexpr (std::is_same_v<K, IdentityWeight>) {
                return 1;
            } else if constexpr (std::is_same_v<K, PowerWeight>) {
                return k.m;
            } else if constexpr (std::is_same_v<K, LogWeight>) {
                return 0;
            } else {
                return weight_tail_degree(*k.base);
            }
        },
        w.kind);
}

/// True when w can take negative values somewhere on [lo, hi].
inline bool weight_may_be_negative(const WeightFunction& w, double lo, double hi) {
    return std::visit(
        [&](const auto& k) -> bool {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, ConstantWeight>) {
                return false;
            } else if constexpr (std::is_same_v<K, IdentityWeight>) {
                return lo < 0.0;
            } else if constexpr (std::is_same_v<K, PowerWeight>) {
                return k.m % 2 == 1 && lo < 0.0;
            } else if constexpr (std::is_same_v<K, LogWeight>) {
                return lo < 1.0;
            } else {
                return weight_may_be_negative(*k.base, (lo - k.d) / k.c, (hi - k.d) / k.c);
            }
        },
        w.kind);
}

inline bool weight_is_log_kind(const WeightFunction& w) {
    return std::visit(
        [&](const auto& k) -> bool {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, LogWeight>) {
                return true;
            } else if constexpr (std::is_same_v<K, TransformedWeight>) {
                return weight_is_log_kind(*k.base);
            } else {
                return false;
            }
        },
        w.kind);
}

inline std::string weight_describe(const WeightFunction& w) {
    return std::visit(
        [&](const auto& k) -> std::string {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, ConstantWeight>) {
                return "const:" + std::to_string(k.w0);
            } else if constexpr (std::is_same_v<K, IdentityWeight>) {
                return "identity";
            } else if constexpr (std::is_same_v<K, PowerWeight>) {
                return "pow:m=" + std::to_string(k.m);
            } else if constexpr (std::is_same_v<K, LogWeight>) {
                return "log";
            } else {
                return "shifted:base=" + weight_describe(*k.base) + ",c=" + std::to_string(k.c) +
                       ",d=" + std::to_string(k.d);
            }
        },
        w.kind);
}

}  // namespace extropy
