#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace pw {

enum class GraphClass { TRI_3, TRI_4, TRI_5, QUAD_2, QUAD_3 };

// Extremal non-simple constructions with closed-form Wiener index.
enum class NonSimple { TRIANGULATION, QUADRANGULATION };

inline int class_kappa(GraphClass c) {
    switch (c) {
    case GraphClass::TRI_3: return 3;
    case GraphClass::TRI_4: return 4;
    case GraphClass::TRI_5: return 5;
    case GraphClass::QUAD_2: return 2;
    case GraphClass::QUAD_3: return 3;
    }
    return 0;
}

inline bool class_is_triangulation(GraphClass c) {
    return c == GraphClass::TRI_3 || c == GraphClass::TRI_4 || c == GraphClass::TRI_5;
}

// Smallest order for which the class is non-empty.
inline int class_min_order(GraphClass c) {
    switch (c) {
    case GraphClass::TRI_3: return 4;
    case GraphClass::TRI_4: return 6;
    case GraphClass::TRI_5: return 12;
    case GraphClass::QUAD_2: return 4;
    case GraphClass::QUAD_3: return 8;
    }
    return 0;
}

inline const char* class_name(GraphClass c) {
    switch (c) {
    case GraphClass::TRI_3: return "tri3";
    case GraphClass::TRI_4: return "tri4";
    case GraphClass::TRI_5: return "tri5";
    case GraphClass::QUAD_2: return "quad2";
    case GraphClass::QUAD_3: return "quad3";
    }
    return "?";
}

inline std::int64_t wiener_path_bound(std::int64_t n) {
    if (n < 1) throw Error(Errc::OrderOutOfDomain, "n >= 1 required");
    return (n - 1) * n * (n + 1) / 6;
}

struct FormulaValue {
    std::int64_t value = 0;
    std::string residue_case; // e.g. "n=4k+2"
};

namespace detail {

inline std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

inline std::int64_t exact_div(std::int64_t num, std::int64_t den) {
    if (num % den != 0) throw std::logic_error("formula did not reduce to an integer");
    return num / den;
}

inline void require_order(bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::OrderOutOfDomain, what);
}

} // namespace detail

inline FormulaValue conjectured_wiener_case(GraphClass c, std::int64_t n) {
    using detail::exact_div;
    using detail::mod;
    detail::require_order(n >= class_min_order(c),
                          std::string(class_name(c)) + " needs n >= " + std::to_string(class_min_order(c)));
    const std::int64_t n2 = n * n, n3 = n2 * n;
    FormulaValue f;
    switch (c) {
    case GraphClass::TRI_3: {
        static const std::int64_t off[] = {0, 4, 2};
        static const char* lbl[] = {"n=3k", "n=3k+1", "n=3k+2"};
        auto r = mod(n, 3);
        f.value = exact_div(n3 + 3 * n2 - off[r], 18);
        f.residue_case = lbl[r];
        break;
    }
    case GraphClass::TRI_4: {
        auto r = mod(n, 4);
        std::int64_t tail = 0;
        if (r == 0 || r == 2) tail = 8 * n - 48;
        else if (r == 3) tail = 5 * n - 24;
        else tail = 5 * n - 36;
        f.value = exact_div(n3 + 6 * n2 + tail, 24);
        f.residue_case = "n=4k" + (r ? "+" + std::to_string(r) : std::string());
        break;
    }
    case GraphClass::TRI_5: {
        static const std::int64_t off[] = {960, 936, 1008, 930, 966};
        auto r = mod(n, 5);
        f.value = exact_div(n3 + 9 * n2 - 46 * n + off[r], 30);
        f.residue_case = "n=5k" + (r ? "+" + std::to_string(r) : std::string());
        break;
    }
    case GraphClass::QUAD_2: {
        bool even = n % 2 == 0;
        f.value = exact_div(n3 + (even ? 14 * n - 24 : 11 * n - 12), 12);
        f.residue_case = even ? "n=2k" : "n=2k+1";
        break;
    }
    case GraphClass::QUAD_3: {
        static const std::int64_t off[] = {360, 368, 412};
        static const char* lbl[] = {"n=3k+15", "n=3k+16", "n=3k+14"};
        auto r = mod(n, 3);
        f.value = exact_div(n3 + 6 * n2 - 51 * n + off[r], 18);
        f.residue_case = lbl[r];
        break;
    }
    }
    return f;
}

inline std::int64_t conjectured_wiener(GraphClass c, std::int64_t n) {
    return conjectured_wiener_case(c, n).value;
}

inline std::int64_t conjectured_wiener(NonSimple c, std::int64_t n) {
    detail::require_order(n >= 4 && n % 2 == 0, "non-simple formulas need even n >= 4");
    if (c == NonSimple::TRIANGULATION) return detail::exact_div(n * n * n + 8 * n - 12, 12);
    return detail::exact_div(n * n * n + 3 * n * n - 4 * n, 12);
}

// Largest transmission of a kappa-connected graph of order n.
inline std::int64_t sigma_bound_general(std::int64_t n, std::int64_t kappa) {
    if (kappa < 1 || kappa > n - 1) throw Error(Errc::OrderOutOfDomain, "need 1 <= kappa <= n-1");
    std::int64_t a = (n + kappa - 1) / kappa;
    std::int64_t b = (n - 1) / kappa;
    return detail::exact_div(a * (2 * (n - 1) - kappa * b), 2);
}

inline Rational remoteness_bound(GraphClass c, std::int64_t n) {
    using detail::mod;
    detail::require_order(n >= class_min_order(c),
                          std::string(class_name(c)) + " needs n >= " + std::to_string(class_min_order(c)));
    const std::int64_t m = n - 1;
    switch (c) {
    case GraphClass::TRI_3:
        return Rational(n + 2, 6) + (mod(n, 3) == 1 ? Rational(0) : Rational(1, 3 * m));
    case GraphClass::TRI_4: {
        auto r = mod(n, 4);
        Rational eps = r == 1 ? Rational(0) : r == 3 ? Rational(1, 2 * m) : Rational(3, 8 * m);
        return Rational(n + 3, 8) + eps;
    }
    case GraphClass::QUAD_2:
        return Rational(n + 1, 4) + (n % 2 ? Rational(0) : Rational(1, 4 * m));
    case GraphClass::TRI_5: {
        static const std::int64_t num[] = {-3, -5, 2, -2, -2};
        return Rational(n + 4, 10) + Rational(num[mod(n, 5)], 5 * m);
    }
    case GraphClass::QUAD_3: {
        static const std::int64_t num[] = {-5, -3, 1};
        return Rational(n + 2, 6) + Rational(num[mod(n, 3)], 3 * m);
    }
    }
    return Rational(0);
}

// Vertex transmission bound for 5-connected triangulations written as
// (n^2 + 3n + e)/10 with e depending on n mod 5.
inline std::int64_t tri5_transmission_bound(std::int64_t n) {
    detail::require_order(n >= 12, "tri5 needs n >= 12");
    static const std::int64_t e[] = {-10, -14, 0, -8, -8};
    return detail::exact_div(n * n + 3 * n + e[detail::mod(n, 5)], 10);
}

using LayerSequence = std::vector<std::int64_t>;

inline std::int64_t layer_functional(const LayerSequence& x) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<std::int64_t>(i) * x[i];
    return s;
}

enum class LayerVariant { MAX, SECOND };

// Sequences (1, x_1, ..., x_d) summing to n with x_1..x_{d-1} >= delta and x_d >= 1.
inline LayerSequence optimal_layer_sequence(std::int64_t n, std::int64_t delta, LayerVariant variant) {
    if (delta < 1 || n < delta + 2) throw Error(Errc::OrderOutOfDomain, "need n >= delta + 2");
    std::int64_t q = (n - 2) / delta;
    std::int64_t r = n - 1 - delta * q; // 1 <= r <= delta
    LayerSequence x{1};
    if (variant == LayerVariant::MAX) {
        x.insert(x.end(), q, delta);
        x.push_back(r);
        return x;
    }
    if (r == 1) throw Error(Errc::SecondUndefined, "second sequence undefined when r = 1");
    x.insert(x.end(), q - 1, delta);
    x.push_back(delta + 1);
    x.push_back(r - 1);
    return x;
}

} // namespace pw
