#ifndef FADA_JSON_IO_HPP
#define FADA_JSON_IO_HPP

#include <json.hpp>

#include "fada/dual.hpp"
#include "fada/peterson.hpp"

namespace fada {

using Json = nlohmann::ordered_json;

// {"num": [[x-exponents, "coefficient"]...], "den": [[root, multiplicity]...]};
// hyperbolic values add "den_poly" in the numerator format.
Json scalar_json(const ScalarContext& ctx, const Scalar& s);
Json element_json(const RootDatum& d, const AffineWeylElement& u);
Json twisted_json(const Algebra& alg, const TwistedElement& z);
Json presentation_json(const ScalarContext& ctx, const PresentationElement& p);
Json dual_json(const Algebra& alg, const DualFunctional& f);
Json report_json(const Report& r);

}  // namespace fada

#endif  // FADA_JSON_IO_HPP
