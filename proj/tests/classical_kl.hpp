#pragma once

// Test-only oracle: classical Kazhdan-Lusztig R-polynomials for S_n, as
// polynomials in q, computed by the textbook recursion on a right descent:
//
//     R_{x,y} = R_{xs,ys}                     if xs < x
//     R_{x,y} = (q-1) R_{x,ys} + q R_{xs,ys}  if xs > x
//
// with R_{y,y} = 1 and R_{x,y} = 0 unless x <= y in the Bruhat order.  This
// is deliberately independent of the library's recursion (different descent
// side, plain q-polynomials, no diagonal machinery).

#include "gha/group.hpp"
#include "gha/scalars.hpp"

#include <map>

namespace classical {

using QPoly = std::map<int, gha::BigInt>; // q-degree -> coefficient

inline void add_to(QPoly& f, const QPoly& g, const gha::BigInt& scale, int qshift) {
    for (const auto& [d, c] : g) {
        auto& slot = f[d + qshift];
        slot += c * scale;
        if (slot == 0) f.erase(d + qshift);
    }
}

class RTable {
public:
    explicit RTable(int n) : n_(n) {}

    const QPoly& r(const gha::Perm& x, const gha::Perm& y) {
        auto key = std::make_pair(x, y);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        QPoly result;
        if (x == y) {
            result[0] = 1;
        } else if (gha::bruhat_leq(x, y)) {
            int s = -1;
            for (int i = 0; i + 1 < n_; ++i)
                if (y[static_cast<std::size_t>(i)] > y[static_cast<std::size_t>(i + 1)]) {
                    s = i;
                    break;
                }
            gha::Perm sp = gha::Reflection(s, s + 1).as_perm(n_);
            gha::Perm ys = gha::perm_mult(y, sp);
            gha::Perm xs = gha::perm_mult(x, sp);
            if (gha::perm_length(xs) < gha::perm_length(x)) {
                result = r(xs, ys);
            } else {
                add_to(result, r(x, ys), -1, 0); // -R_{x,ys}
                add_to(result, r(x, ys), 1, 1);  // +q R_{x,ys}
                add_to(result, r(xs, ys), 1, 1); // +q R_{xs,ys}
            }
        }
        return memo_.emplace(std::move(key), std::move(result)).first->second;
    }

private:
    int n_;
    std::map<std::pair<gha::Perm, gha::Perm>, QPoly> memo_;
};

// The classical polynomial in q, reinterpreted over v with q = v^2.
inline gha::SpecializedScalar as_v_polynomial(const QPoly& f) {
    gha::SpecializedScalar out(1);
    for (const auto& [d, c] : f) out.add_term(2 * d, c, 0);
    return out;
}

// Classical Kazhdan-Lusztig polynomials by the original mu-correction
// recursion on a right descent s of y (v = ys, c = [xs < x]):
//
//   P_{x,y} = q^{1-c} P_{xs,v} + q^c P_{x,v}
//             - sum_{x <= z < v, zs < z} mu(z,v) q^{(l(y)-l(z))/2} P_{x,z}
//
// with mu(z,v) the coefficient of q^{(l(v)-l(z)-1)/2} in P_{z,v}.
class PTable {
public:
    explicit PTable(int n) : n_(n) {}

    const QPoly& p(const gha::Perm& x, const gha::Perm& y) {
        auto key = std::make_pair(x, y);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        QPoly result;
        if (x == y) {
            result[0] = 1;
        } else if (gha::bruhat_leq(x, y)) {
            int s = -1;
            for (int i = 0; i + 1 < n_; ++i)
                if (y[static_cast<std::size_t>(i)] > y[static_cast<std::size_t>(i + 1)]) {
                    s = i;
                    break;
                }
            gha::Perm sp = gha::Reflection(s, s + 1).as_perm(n_);
            gha::Perm v = gha::perm_mult(y, sp);
            gha::Perm xs = gha::perm_mult(x, sp);
            const int c = gha::perm_length(xs) < gha::perm_length(x) ? 1 : 0;
            add_to(result, p(xs, v), 1, 1 - c);
            add_to(result, p(x, v), 1, c);
            for (const gha::Perm& z : gha::all_permutations(n_)) {
                if (z == v || !gha::bruhat_leq(x, z) || !gha::bruhat_leq(z, v)) continue;
                if (gha::perm_length(gha::perm_mult(z, sp)) >= gha::perm_length(z)) continue;
                gha::BigInt m = mu(z, v);
                if (m == 0) continue;
                int shift = (gha::perm_length(y) - gha::perm_length(z)) / 2;
                add_to(result, p(x, z), -m, shift);
            }
        }
        return memo_.emplace(std::move(key), std::move(result)).first->second;
    }

    gha::BigInt mu(const gha::Perm& z, const gha::Perm& v) {
        int gap = gha::perm_length(v) - gha::perm_length(z);
        if (gap <= 0 || gap % 2 == 0) return 0;
        const QPoly& poly = p(z, v);
        auto it = poly.find((gap - 1) / 2);
        return it == poly.end() ? gha::BigInt(0) : it->second;
    }

private:
    int n_;
    std::map<std::pair<gha::Perm, gha::Perm>, QPoly> memo_;
};

} // namespace classical
