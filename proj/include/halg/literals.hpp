#pragma once

#include <string>
#include <string_view>

#include "halg/complex_elems.hpp"
#include "halg/matrix.hpp"
#include "halg/octonion.hpp"
#include "halg/quaternion.hpp"
#include "halg/zorn.hpp"

namespace halg {

// Element literals, exact-rational realization.
//
// Term form: coefficient terms joined by + / -, units e1..e7 (aliases
// i, j, ij, k, ik, jk, ijk), e.g. "1 + 2e1 - 3/4e3". Complex octonions
// and quaternions add an i* marker for the imaginary half: "i*e2",
// "(1 + e2) + i*(2e4)". Array form: JSON coefficient array [a0,...]
// with integers, "p/q" strings or floats.
Quaternion<Rational> parse_quaternion(std::string_view text, const QuatParams<Rational>& params);
Octonion<Rational> parse_octonion(std::string_view text, const OctParams<Rational>& params);
ComplexQuaternion<Rational> parse_complex_quaternion(std::string_view text);
ComplexOctonion<Rational> parse_complex_octonion(std::string_view text);
// Zorn elements use the flat array [a, b, u1, u2, u3, v1, v2, v3].
ZornElement<Rational> parse_zorn(std::string_view text);

QuatParams<Rational> parse_quat_params(std::string_view text);   // "b1,b2"
OctParams<Rational> parse_oct_params(std::string_view text);     // "a,b,g"

// JSON coefficient array (round-trips through the parsers above).
std::string print_json(const Quaternion<Rational>& q);
std::string print_json(const Octonion<Rational>& a);
std::string print_json(const ComplexQuaternion<Rational>& q);
std::string print_json(const ComplexOctonion<Rational>& a);
std::string print_json(const ZornElement<Rational>& z);

// Human form, e.g. "1 + 2e1 - e3" / "(e2) + i*(e4)".
std::string print_pretty(const Quaternion<Rational>& q);
std::string print_pretty(const Octonion<Rational>& a);
std::string print_pretty(const ComplexQuaternion<Rational>& q);
std::string print_pretty(const ComplexOctonion<Rational>& a);
std::string print_pretty(const ZornElement<Rational>& z);

// Matrix / vector output.
std::string matrix_csv(const RepMatrix<Rational>& m);   // row-major, trailing newline
std::string matrix_json(const RepMatrix<Rational>& m);  // array of arrays
std::string vec_json(const VecRep<Rational>& v);

}  // namespace halg
