#include "scalar.hpp"

#include <ostream>
#include <sstream>

#include "errors.hpp"

namespace hodgemc {

Scalar Scalar::of(long num, long den) {
    if (den == 0) throw input_error("scalar: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw input_error("scalar: division by zero");
    mpq_class n = re * re + im * im;
    return Scalar(re / n, -im / n);
}

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw input_error("scalar: empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw input_error("scalar: malformed rational '" + s + "'");
    if (sgn(q.get_den()) == 0) throw input_error("scalar: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string Scalar::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    if (sgn(s.im) == 0) return os << s.re;
    if (sgn(s.re) == 0) return os << s.im << "*i";
    return os << s.re << (sgn(s.im) > 0 ? "+" : "") << s.im << "*i";
}

}  // namespace hodgemc
