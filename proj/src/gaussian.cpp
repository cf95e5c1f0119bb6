#include "olines/gaussian.hpp"

namespace olines {

std::string to_string(const GaussianRational& z) {
    const Rational& re = z.re();
    const Rational& im = z.im();
    if (im == 0) return to_string(re);
    std::string out;
    if (re != 0) out = to_string(re);
    if (sgn(im) < 0) {
        out += "-";
    } else if (!out.empty()) {
        out += "+";
    }
    const Rational mag = abs(im);
    if (mag != 1) out += to_string(mag) + " ";
    out += "i";
    return out;
}

}  // namespace olines
