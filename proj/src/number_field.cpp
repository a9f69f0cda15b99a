#include "ringcover/number_field.hpp"

#include "ringcover/errors.hpp"
#include "ringcover/irreducibility.hpp"

namespace ringcover {

NumberField::NumberField(PolyInt f) : poly_(std::move(f)) {
    if (!poly_.is_monic())
        throw NonMonicError("number field polynomial must be monic: " + poly_.to_string());
    if (poly_.degree() < 2)
        throw ReducibleError("number field polynomial must have degree >= 2: " +
                             poly_.to_string());
    if (!certify_irreducible(poly_))
        throw ReducibleError("polynomial is reducible over the rationals: " + poly_.to_string());
    disc_ = ringcover::discriminant(poly_);
}

} // namespace ringcover
