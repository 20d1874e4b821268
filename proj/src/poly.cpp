#include "wgc/poly.hpp"

namespace wgc {

std::string poly_to_comma(const BasePoly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (i) os << ',';
        os << a.c[i];
    }
    return os.str();
}

BasePoly poly_from_comma(const PrimeField& K, const std::string& text) {
    BasePoly p;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("poly_from_comma: bad coefficient '" + tok + "'");
        p.c.push_back(K.from_int(v));
    }
    poly_trim(K, p);
    return p;
}

std::string poly_to_pretty(const BasePoly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << a.c[i];
        } else {
            if (a.c[i] != 1) os << a.c[i] << '*';
            os << 'x';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

}  // namespace wgc
