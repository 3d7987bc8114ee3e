#pragma once

#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include "deltaj/error.hpp"
#include "deltaj/report.hpp"

namespace deltaj {

struct IdealizationInfo;  // defined in idealize.hpp

// Finite commutative ring with identity, given by dense index tables.
// Elements are integers in [0, order); all arithmetic is table lookup.
// Immutable after construction; share via RingPtr.
struct FiniteRing {
    int order = 0;
    std::vector<int> add_table;  // order*order, row-major
    std::vector<int> mul_table;
    int zero = 0;
    int one = 0;
    std::string spec;  // construction expression (provenance)
    std::vector<std::string> element_names;
    std::vector<int> neg_table;  // additive inverse per element
    std::shared_ptr<const IdealizationInfo> idealization;  // set iff built by idealize()

    int add(int a, int b) const { return add_table[a * order + b]; }
    int mul(int a, int b) const { return mul_table[a * order + b]; }
    int neg(int a) const { return neg_table[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    const std::string& name(int a) const { return element_names[a]; }

    bool is_unit(int a) const {
        for (int b = 0; b < order; ++b)
            if (mul(a, b) == one) return true;
        return false;
    }
};

using RingPtr = std::shared_ptr<const FiniteRing>;

// Ring-order cap; DELTAJ_ORDER_CAP overrides the default of 256.
inline int order_cap() {
    static const int cap = [] {
        if (const char* env = std::getenv("DELTAJ_ORDER_CAP")) {
            int v = std::atoi(env);
            if (v >= 2) return v;
        }
        return 256;
    }();
    return cap;
}

inline void check_order_cap(long order, const std::string& spec) {
    if (order > order_cap())
        throw cap_error("ring order " + std::to_string(order) + " exceeds cap " +
                        std::to_string(order_cap()) + " for spec " + spec);
}

namespace detail {

inline std::vector<int> negatives(int order, const std::vector<int>& add, int zero) {
    std::vector<int> neg(order, -1);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            if (add[a * order + b] == zero) { neg[a] = b; break; }
    return neg;
}

inline RingPtr seal(FiniteRing r) {
    r.neg_table = negatives(r.order, r.add_table, r.zero);
    return std::make_shared<const FiniteRing>(std::move(r));
}

}  // namespace detail

// Z_n under addition and multiplication mod n. Requires n >= 2 (the ring
// must have a nonzero identity).
inline RingPtr make_zn(int n) {
    if (n < 2) throw domain_error("Z" + std::to_string(n) + ": a nonzero ring needs order >= 2");
    check_order_cap(n, "Z" + std::to_string(n));
    FiniteRing r;
    r.order = n;
    r.add_table.resize(n * n);
    r.mul_table.resize(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            r.add_table[a * n + b] = (a + b) % n;
            r.mul_table[a * n + b] = (a * b) % n;
        }
    r.zero = 0;
    r.one = 1;
    r.spec = "Z" + std::to_string(n);
    for (int a = 0; a < n; ++a) r.element_names.push_back(std::to_string(a));
    return detail::seal(std::move(r));
}

// Direct product A x B with componentwise operations; element (a,b) has
// index a*|B| + b.
inline RingPtr make_product(const RingPtr& A, const RingPtr& B) {
    long n = static_cast<long>(A->order) * B->order;
    check_order_cap(n, A->spec + "x" + B->spec);
    FiniteRing r;
    r.order = static_cast<int>(n);
    r.add_table.resize(n * n);
    r.mul_table.resize(n * n);
    auto idx = [&](int a, int b) { return a * B->order + b; };
    for (int a1 = 0; a1 < A->order; ++a1)
        for (int a2 = 0; a2 < B->order; ++a2)
            for (int b1 = 0; b1 < A->order; ++b1)
                for (int b2 = 0; b2 < B->order; ++b2) {
                    int x = idx(a1, a2), y = idx(b1, b2);
                    r.add_table[x * n + y] = idx(A->add(a1, b1), B->add(a2, b2));
                    r.mul_table[x * n + y] = idx(A->mul(a1, b1), B->mul(a2, b2));
                }
    r.zero = idx(A->zero, B->zero);
    r.one = idx(A->one, B->one);
    r.spec = A->spec + "x" + B->spec;
    for (int a = 0; a < A->order; ++a)
        for (int b = 0; b < B->order; ++b)
            r.element_names.push_back("(" + A->name(a) + "," + B->name(b) + ")");
    return detail::seal(std::move(r));
}

namespace detail {

inline bool is_prime_int(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Display name for a polynomial given coefficients low-to-high.
inline std::string poly_name(const std::vector<int>& coeffs) {
    std::string s;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
        int c = coeffs[k];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (k == 0) s += std::to_string(c);
        else {
            if (c != 1) s += std::to_string(c);
            s += "x";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace detail

// Z_p[x]/(f) for prime p and monic f (low-to-high coefficients, degree 1..3).
// Elements are residue polynomials of degree < deg f, indexed little-endian
// base p.
inline RingPtr make_poly_quotient(int p, const std::vector<int>& f) {
    std::string spec = "Z" + std::to_string(p) + "[x]/(" + detail::poly_name(f) + ")";
    if (!detail::is_prime_int(p))
        throw domain_error(spec + ": coefficient modulus must be prime");
    int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1 || deg > 3) throw domain_error(spec + ": modulus degree must be 1..3");
    if (f[deg] != 1) throw domain_error(spec + ": modulus must be monic");
    for (int c : f)
        if (c < 0 || c >= p) throw domain_error(spec + ": coefficients must lie in [0," + std::to_string(p) + ")");

    long n = 1;
    for (int k = 0; k < deg; ++k) n *= p;
    check_order_cap(n, spec);

    auto to_vec = [&](int i) {
        std::vector<int> v(deg);
        for (int k = 0; k < deg; ++k) { v[k] = i % p; i /= p; }
        return v;
    };
    auto to_idx = [&](const std::vector<int>& v) {
        int i = 0;
        for (int k = deg - 1; k >= 0; --k) i = i * p + v[k];
        return i;
    };

    FiniteRing r;
    r.order = static_cast<int>(n);
    r.add_table.resize(n * n);
    r.mul_table.resize(n * n);
    for (int a = 0; a < n; ++a) {
        auto u = to_vec(a);
        for (int b = 0; b < n; ++b) {
            auto v = to_vec(b);
            std::vector<int> s(deg);
            for (int k = 0; k < deg; ++k) s[k] = (u[k] + v[k]) % p;
            r.add_table[a * n + b] = to_idx(s);

            std::vector<int> prod(2 * deg - 1, 0);
            for (int i = 0; i < deg; ++i)
                for (int j = 0; j < deg; ++j)
                    prod[i + j] = (prod[i + j] + u[i] * v[j]) % p;
            // reduce mod the monic modulus
            for (int k = static_cast<int>(prod.size()) - 1; k >= deg; --k) {
                int c = prod[k];
                if (c == 0) continue;
                prod[k] = 0;
                for (int j = 0; j < deg; ++j)
                    prod[k - deg + j] = ((prod[k - deg + j] - c * f[j]) % p + p * p) % p;
            }
            prod.resize(deg);
            r.mul_table[a * n + b] = to_idx(prod);
        }
    }
    r.zero = 0;
    r.one = 1;
    r.spec = spec;
    for (int a = 0; a < n; ++a) r.element_names.push_back(detail::poly_name(to_vec(a)));
    return detail::seal(std::move(r));
}

// Exhaustive check of every ring axiom. Failures are report entries naming
// the axiom and a witness tuple, never exceptions.
inline CheckReport verify_ring_axioms(const FiniteRing& R) {
    CheckReport rep;
    rep.id = "ring-axioms";
    CheckPart part;
    part.id = "ring-axioms";
    part.what = "tables define a finite commutative ring with nonzero identity";
    CheckOutcome& out = part.gating;
    const int n = R.order;

    auto fail = [&](const std::string& axiom, std::vector<int> w) {
        json cex;
        cex["ring_spec"] = R.spec;
        cex["axiom"] = axiom;
        json names = json::array();
        for (int x : w) names.push_back(R.name(x));
        cex["witness"] = names;
        out.fail(std::move(cex));
    };

    out.count(true);
    if (static_cast<long>(R.add_table.size()) != static_cast<long>(n) * n ||
        static_cast<long>(R.mul_table.size()) != static_cast<long>(n) * n) {
        fail("table shape", {});
        out.finish();
        rep.parts.push_back(std::move(part));
        return rep;
    }
    if (R.zero == R.one) fail("nonzero identity", {R.zero});

    for (int a = 0; a < n && out.pass; ++a) {
        if (R.add(a, R.zero) != a) fail("additive identity", {a});
        if (R.mul(a, R.one) != a) fail("multiplicative identity", {a});
        bool has_neg = false;
        for (int b = 0; b < n; ++b)
            if (R.add(a, b) == R.zero) { has_neg = true; break; }
        if (!has_neg) fail("additive inverse", {a});
    }
    for (int a = 0; a < n && out.pass; ++a)
        for (int b = 0; b < n && out.pass; ++b) {
            if (R.add(a, b) != R.add(b, a)) fail("addition commutativity", {a, b});
            if (R.mul(a, b) != R.mul(b, a)) fail("multiplication commutativity", {a, b});
        }
    for (int a = 0; a < n && out.pass; ++a)
        for (int b = 0; b < n && out.pass; ++b)
            for (int c = 0; c < n && out.pass; ++c) {
                if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c)))
                    fail("addition associativity", {a, b, c});
                if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)))
                    fail("multiplication associativity", {a, b, c});
                if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)))
                    fail("distributivity", {a, b, c});
            }

    out.finish();
    rep.parts.push_back(std::move(part));
    return rep;
}

inline std::vector<int> units(const FiniteRing& R) {
    std::vector<int> us;
    for (int a = 0; a < R.order; ++a)
        if (R.is_unit(a)) us.push_back(a);
    return us;
}

inline std::vector<int> idempotents(const FiniteRing& R) {
    std::vector<int> es;
    for (int a = 0; a < R.order; ++a)
        if (R.mul(a, a) == a) es.push_back(a);
    return es;
}

// Multiplicative inverse; requires a to be a unit.
inline int inverse(const FiniteRing& R, int a) {
    for (int b = 0; b < R.order; ++b)
        if (R.mul(a, b) == R.one) return b;
    throw domain_error(R.spec + ": " + R.name(a) + " is not a unit");
}

}  // namespace deltaj
