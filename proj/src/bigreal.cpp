#include "zb/bigreal.hpp"

#include <cstdlib>
#include <stdexcept>

namespace zb {

std::string BigReal::str(int digits) const {
    if (digits < 1) digits = 1;
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    if (!s) throw std::runtime_error("mpfr_get_str failed");
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string dig = neg ? mant.substr(1) : mant;
    if (dig.empty()) dig = "0";
    // scientific form d.ddd...e<exp-1>
    std::string out = neg ? "-" : "";
    out += dig.substr(0, 1);
    if (dig.size() > 1) out += "." + dig.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

}  // namespace zb
