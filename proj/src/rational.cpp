#include "folcalc/rational.hpp"

namespace folcalc {

std::string rational_str(const mpq_class& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

std::string gaussian_str(const GaussianRational& g) {
    if (g.is_zero()) return "0";
    if (g.im == 0) return rational_str(g.re);
    std::string im_part = (g.im == 1)    ? "i"
                          : (g.im == -1) ? "-i"
                                         : rational_str(g.im) + "*i";
    if (g.re == 0) return im_part;
    std::string s = rational_str(g.re);
    if (im_part[0] == '-')
        s += "-" + im_part.substr(1);
    else
        s += "+" + im_part;
    return s;
}

}  // namespace folcalc
