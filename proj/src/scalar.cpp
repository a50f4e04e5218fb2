#include "forge/scalar.hpp"

#include <sstream>

namespace forge {

Scalar::Scalar(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    re_.canonicalize();
}

mpq_class Scalar::parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    mpq_class n2 = re_ * re_ + im_ * im_;
    return Scalar(re_ / n2, -im_ / n2);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar acc(1);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string Scalar::str() const {
    auto rat = [](const mpq_class& q) { return q.get_str(); };
    if (im_ == 0) return rat(re_);
    std::string istr = (im_ == 1) ? "i" : (im_ == -1) ? "-i" : rat(im_) + "*i";
    if (re_ == 0) return istr;
    std::ostringstream os;
    os << "(" << rat(re_);
    if (im_ > 0)
        os << " + " << ((im_ == 1) ? std::string("i") : rat(im_) + "*i");
    else
        os << " - " << ((im_ == -1) ? std::string("i") : rat(-im_) + "*i");
    os << ")";
    return os.str();
}

}  // namespace forge
