#ifndef LOCLIB_FIELD_HPP
#define LOCLIB_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "loclib/errors.hpp"

namespace loclib {

// Elements are plain integers in [0, 2^m). Membership is checked at matrix
// boundaries, not per arithmetic call.
using FieldElement = unsigned;

/*
 * GF(2^m) for 2 <= m <= 16, defined by a primitive polynomial given as a
 * bitmask (bit i = coefficient of x^i). Multiplication and inversion go
 * through exp/log tables built once at construction; construction fails if
 * the polynomial is not primitive. Copies are cheap (shared immutable
 * tables) and all operations are pure, so a FieldSpec can be used from any
 * number of threads.
 */
class FieldSpec {
public:
    FieldSpec() = default;  // invalid until assigned from make_field

    int m() const { return t_->m; }
    unsigned poly() const { return t_->poly; }
    unsigned order() const { return 1u << t_->m; }

    bool contains(FieldElement a) const { return a < order(); }

    FieldElement add(FieldElement a, FieldElement b) const { return a ^ b; }
    FieldElement sub(FieldElement a, FieldElement b) const { return a ^ b; }  // characteristic 2

    FieldElement mul(FieldElement a, FieldElement b) const {
        if (a == 0 || b == 0) return 0;
        unsigned s = t_->log[a] + t_->log[b];
        unsigned period = order() - 1;
        if (s >= period) s -= period;
        return t_->exp[s];
    }

    FieldElement inv(FieldElement a) const {
        if (a == 0) throw DivideByZero("inv(0) in GF(2^m)");
        unsigned period = order() - 1;
        unsigned l = t_->log[a];
        return t_->exp[(period - l) % period];
    }

    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

    // exp(i) = x^i; log defined for nonzero elements only.
    FieldElement exp(unsigned i) const { return t_->exp[i % (order() - 1)]; }
    unsigned log(FieldElement a) const {
        if (a == 0) throw DivideByZero("log(0) in GF(2^m)");
        return t_->log[a];
    }

    bool operator==(const FieldSpec& o) const { return t_->m == o.t_->m && t_->poly == o.t_->poly; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

private:
    friend FieldSpec make_field(int m, unsigned poly);

    struct Tables {
        int m = 0;
        unsigned poly = 0;
        std::vector<FieldElement> exp;  // size q-1, exp[i] = x^i
        std::vector<unsigned> log;      // size q, log[exp[i]] = i
    };

    std::shared_ptr<const Tables> t_;
};

/*
 * Build GF(2^m) from a degree-m primitive polynomial.
 * Throws BadDegree if the bitmask degree is not exactly m (or m is out of
 * [2,16]), and NonPrimitivePolynomial if x does not generate all 2^m - 1
 * nonzero elements.
 */
FieldSpec make_field(int m, unsigned poly);

// Default field for code files and constructions: GF(2^8) with
// x^8 + x^4 + x^3 + x^2 + 1 (bitmask 0x11D).
inline constexpr int kDefaultFieldM = 8;
inline constexpr unsigned kDefaultFieldPoly = 0x11D;

FieldSpec default_field();

}  // namespace loclib

#endif
