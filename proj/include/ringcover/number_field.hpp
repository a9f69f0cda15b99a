#pragma once

#include "ringcover/integer.hpp"
#include "ringcover/poly_int.hpp"

namespace ringcover {

// Number field Q[x]/(f) for a monic irreducible integer polynomial f of
// degree >= 2.  Construction certifies irreducibility.
class NumberField {
    PolyInt poly_;
    Int disc_;

public:
    explicit NumberField(PolyInt f);

    const PolyInt& poly() const { return poly_; }
    int degree() const { return poly_.degree(); }
    const Int& discriminant() const { return disc_; }
};

} // namespace ringcover
