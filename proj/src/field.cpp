#include "loclib/field.hpp"

#include <string>

namespace loclib {

static int degree_of(unsigned poly) {
    int d = -1;
    for (int i = 0; i < 32; i++)
        if (poly & (1u << i)) d = i;
    return d;
}

FieldSpec make_field(int m, unsigned poly) {
    if (m < 2 || m > 16)
        throw BadDegree("extension degree m must be in [2,16], got " + std::to_string(m));
    if (degree_of(poly) != m)
        throw BadDegree("polynomial degree " + std::to_string(degree_of(poly)) +
                        " does not match m = " + std::to_string(m));

    const unsigned q = 1u << m;

    auto tables = std::make_shared<FieldSpec::Tables>();
    tables->m = m;
    tables->poly = poly;
    tables->exp.assign(q - 1, 0);
    tables->log.assign(q, 0);

    // Walk the powers of x; a primitive polynomial yields all q-1 nonzero
    // elements before returning to 1.
    std::vector<bool> seen(q, false);
    unsigned v = 1;
    for (unsigned i = 0; i < q - 1; i++) {
        if (v == 0 || seen[v])
            throw NonPrimitivePolynomial("x^" + std::to_string(i) +
                                         " repeats or vanishes; polynomial is not primitive");
        seen[v] = true;
        tables->exp[i] = v;
        tables->log[v] = i;
        v <<= 1;
        if (v & q) v ^= poly;
    }
    if (v != 1)
        throw NonPrimitivePolynomial("power sequence does not close after 2^m - 1 steps");

    FieldSpec f;
    f.t_ = std::move(tables);
    return f;
}

FieldSpec default_field() {
    static const FieldSpec f = make_field(kDefaultFieldM, kDefaultFieldPoly);
    return f;
}

}  // namespace loclib
