#include "mcf/rational.hpp"

#include <sstream>

namespace mcf {

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int rat_floor(const Rat& r) {
    return floor_div(r.get_num(), r.get_den());
}

Rat parse_rat(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw parse_error("parse_rat: empty string");
    try {
        Rat r(t);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("parse_rat: bad rational '" + s + "'");
    }
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r.get_num();
    if (r.get_den() != 1) os << "/" << r.get_den();
    return os.str();
}

double to_double(const Rat& r) { return r.get_d(); }

RatInterval RatInterval::operator*(const RatInterval& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    Rat mn = a, mx = a;
    for (const Rat* v : {&b, &c, &d}) {
        if (*v < mn) mn = *v;
        if (*v > mx) mx = *v;
    }
    return {mn, mx};
}

} // namespace mcf
