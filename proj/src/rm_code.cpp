#include "rmpc/rm_code.hpp"

#include <stdexcept>
#include <string>

#include "rmpc/gf2.hpp"

namespace rmpc {

static void check_order(int r, int m) {
    if (r < 0 || m < 0 || r > m || m > 14)
        throw std::invalid_argument("order out of range: r=" + std::to_string(r) +
                                    " m=" + std::to_string(m));
}

CodeParams code_params(int r, int m) {
    check_order(r, m);
    int n = 1 << m;
    long long k = 0, c = 1; // c = C(m, i), updated incrementally
    for (int i = 0; i <= r; ++i) {
        k += c;
        c = c * (m - i) / (i + 1);
    }
    return {n, int(k), 1 << (m - r), 1 << (r + 1)};
}

// all degree-<=r monomial masks over m variables, graded by degree and
// lexicographic by variable index set within a degree
static std::vector<uint32_t> monomial_masks(int r, int m) {
    std::vector<uint32_t> masks;
    std::vector<int> vars;
    for (int deg = 0; deg <= r; ++deg) {
        vars.assign(deg, 0);
        for (int i = 0; i < deg; ++i) vars[i] = i;
        for (;;) {
            uint32_t mask = 0;
            for (int v : vars) mask |= 1u << v;
            masks.push_back(mask);
            if (deg == 0) break;
            int i = deg - 1;
            while (i >= 0 && vars[i] == m - deg + i) --i;
            if (i < 0) break;
            ++vars[i];
            for (int j = i + 1; j < deg; ++j) vars[j] = vars[j - 1] + 1;
        }
    }
    return masks;
}

static std::vector<BinaryWord> monomial_rows(int r, int m) {
    int n = 1 << m;
    std::vector<BinaryWord> rows;
    for (uint32_t mask : monomial_masks(r, m)) {
        BinaryWord row(n);
        for (int c = 0; c < n; ++c)
            if ((uint32_t(c) & mask) == mask) row.set(c, 1);
        rows.push_back(row);
    }
    return rows;
}

RmCode build_code(int r, int m) {
    CodeParams p = code_params(r, m);
    RmCode code;
    code.r = r;
    code.m = m;
    code.n = p.n;
    code.k = p.k;
    code.d_min = p.d_min;
    code.dual_d_min = p.dual_d_min;
    code.gen = monomial_rows(r, m);
    if (r < m) code.h_ref = gf2_rref(monomial_rows(m - r - 1, m));
    return code;
}

BinaryWord encode(const RmCode& code, const BinaryWord& u) {
    BinaryWord c(code.n);
    for (int i = 0; i < code.k; ++i)
        if (u.get(i)) c ^= code.gen[i];
    return c;
}

bool is_codeword(const RmCode& code, const BinaryWord& w) {
    for (const auto& h : code.h_ref)
        if (h.dot(w)) return false;
    return true;
}

} // namespace rmpc
