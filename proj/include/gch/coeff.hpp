#ifndef GCH_COEFF_HPP
#define GCH_COEFF_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace gch {

/* Exact coefficient arithmetic for the whole algebra layer.  All structure
 * constants produced by the differentials and brackets are integers, but
 * rank computation and a few normalizations divide, so the working type is
 * a full rational.  No floating point appears anywhere below the CLI. */
using Coeff = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string coeff_to_string(const Coeff& c) {
    return c.str();
}

/* Parses "p" or "p/q"; throws std::runtime_error on malformed input. */
inline Coeff coeff_from_string(const std::string& s) {
    return Coeff(s);
}

} // namespace gch

#endif
