#pragma once

// Exact coefficient rings. Every ring is a small value type carrying its
// own arithmetic; series and polynomials are parameterized over one of
// these. No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qseries {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct IntegerRing {
    using Value = BigInt;

    static constexpr const char* name() { return "integer"; }

    Value zero() const { return Value(0); }
    Value one() const { return Value(1); }
    Value from_int(long long v) const { return Value(v); }
    Value from_integer(const BigInt& v) const { return v; }

    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value neg(const Value& a) const { return -a; }

    bool is_zero(const Value& a) const { return a == 0; }
    bool equal(const Value& a, const Value& b) const { return a == b; }
    bool is_unit(const Value& a) const { return a == 1 || a == -1; }

    Value inv(const Value& a) const {
        if (!is_unit(a))
            throw std::domain_error("integer ring: " + to_string(a) + " is not a unit");
        return a;
    }

    bool compatible(const IntegerRing&) const { return true; }
    std::string to_string(const Value& a) const { return a.str(); }
};

struct RationalRing {
    using Value = BigRational;

    static constexpr const char* name() { return "rational"; }

    Value zero() const { return Value(0); }
    Value one() const { return Value(1); }
    Value from_int(long long v) const { return Value(v); }
    Value from_integer(const BigInt& v) const { return Value(v); }

    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value neg(const Value& a) const { return -a; }

    bool is_zero(const Value& a) const { return a == 0; }
    bool equal(const Value& a, const Value& b) const { return a == b; }
    bool is_unit(const Value& a) const { return a != 0; }

    Value inv(const Value& a) const {
        if (a == 0) throw std::domain_error("rational ring: division by zero");
        return 1 / a;
    }

    bool compatible(const RationalRing&) const { return true; }
    std::string to_string(const Value& a) const { return a.str(); }
};

// Integers modulo m, m >= 2. Values normalized to [0, m).
struct ModularRing {
    using Value = std::uint64_t;

    std::uint64_t modulus;

    explicit ModularRing(std::uint64_t m) : modulus(m) {
        if (m < 2) throw std::invalid_argument("modular ring: modulus must be >= 2");
    }

    static constexpr const char* name() { return "modular"; }

    Value zero() const { return 0; }
    Value one() const { return 1 % modulus; }

    Value from_int(long long v) const {
        long long r = v % static_cast<long long>(modulus);
        if (r < 0) r += static_cast<long long>(modulus);
        return static_cast<Value>(r);
    }

    Value from_integer(const BigInt& v) const {
        BigInt r = v % BigInt(modulus);
        if (r < 0) r += BigInt(modulus);
        return static_cast<Value>(r.convert_to<std::uint64_t>());
    }

    Value add(Value a, Value b) const {
        Value s = a + b;
        return s >= modulus ? s - modulus : s;
    }
    Value sub(Value a, Value b) const { return a >= b ? a - b : a + modulus - b; }
    Value mul(Value a, Value b) const {
        return static_cast<Value>((static_cast<unsigned __int128>(a) * b) % modulus);
    }
    Value neg(Value a) const { return a == 0 ? 0 : modulus - a; }

    bool is_zero(Value a) const { return a == 0; }
    bool equal(Value a, Value b) const { return a == b; }

    bool is_unit(Value a) const {
        std::uint64_t g = gcd_u64(a % modulus, modulus);
        return g == 1;
    }

    Value inv(Value a) const {
        a %= modulus;
        // extended Euclid on (a, m)
        std::int64_t t = 0, newt = 1;
        std::uint64_t r = modulus, newr = a;
        while (newr != 0) {
            std::uint64_t q = r / newr;
            std::int64_t tt = t - static_cast<std::int64_t>(q) * newt;
            t = newt; newt = tt;
            std::uint64_t rr = r - q * newr;
            r = newr; newr = rr;
        }
        if (r != 1)
            throw std::domain_error("modular ring: " + std::to_string(a) +
                                    " not invertible mod " + std::to_string(modulus));
        return t < 0 ? static_cast<Value>(t + static_cast<std::int64_t>(modulus))
                     : static_cast<Value>(t);
    }

    bool compatible(const ModularRing& other) const { return modulus == other.modulus; }
    std::string to_string(Value a) const { return std::to_string(a); }

private:
    static std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
        while (b) { std::uint64_t t = a % b; a = b; b = t; }
        return a;
    }
};

template <class R>
void require_same_ring(const R& a, const R& b) {
    if (!a.compatible(b))
        throw std::invalid_argument("ring mismatch");
}

} // namespace qseries
