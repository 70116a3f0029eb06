#include "pcurve/mpoly.hpp"

#include <sstream>

namespace pcurve {

std::string to_text(const MPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending graded-lex
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << " + ";
        first = false;
        bool has_vars = false;
        for (u32 e : m)
            if (e) has_vars = true;
        if (!has_vars || c.value() != 1) {
            os << c.value();
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << f.vars()->name(v);
            if (m[v] > 1) os << "^" << m[v];
        }
    }
    return os.str();
}

}  // namespace pcurve
