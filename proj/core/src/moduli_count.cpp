#include "wdparam/moduli_count.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace wdparam {

namespace {

using Mat = std::array<unsigned long, 4>;  // row-major, n<=2 (n=1 uses slot 0)

struct FlContext {
    unsigned n;
    unsigned long ell;

    Mat mul(const Mat& a, const Mat& b) const {
        Mat c{0, 0, 0, 0};
        if (n == 1) {
            c[0] = (a[0] * b[0]) % ell;
            return c;
        }
        c[0] = (a[0] * b[0] + a[1] * b[2]) % ell;
        c[1] = (a[0] * b[1] + a[1] * b[3]) % ell;
        c[2] = (a[2] * b[0] + a[3] * b[2]) % ell;
        c[3] = (a[2] * b[1] + a[3] * b[3]) % ell;
        return c;
    }
    Mat identity() const { return n == 1 ? Mat{1, 0, 0, 0} : Mat{1, 0, 0, 1}; }
    Mat pow(Mat a, unsigned long e) const {
        Mat r = identity();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    unsigned long order(const Mat& a) const {
        Mat x = a;
        unsigned long o = 1;
        Mat id = identity();
        while (x != id) {
            x = mul(x, a);
            ++o;
            if (o > ell * ell * ell * ell)
                throw std::runtime_error("order computation overflow");
        }
        return o;
    }
};

std::vector<Mat> general_linear_group(const FlContext& F) {
    std::vector<Mat> out;
    if (F.n == 1) {
        for (unsigned long a = 1; a < F.ell; ++a) out.push_back(Mat{a, 0, 0, 0});
        return out;
    }
    for (unsigned long a = 0; a < F.ell; ++a)
        for (unsigned long b = 0; b < F.ell; ++b)
            for (unsigned long c = 0; c < F.ell; ++c)
                for (unsigned long d = 0; d < F.ell; ++d) {
                    if (((a * d) % F.ell + F.ell - (b * c) % F.ell) % F.ell == 0) continue;
                    out.push_back(Mat{a, b, c, d});
                }
    return out;
}

unsigned long residue_char(unsigned long q) {
    for (unsigned long d = 2; d * d <= q; ++d)
        if (q % d == 0) return d;
    return q;
}

void validate(unsigned n, unsigned long q, unsigned long ell) {
    if (n == 0 || n > 2)
        throw std::invalid_argument("point counting supports n in {1, 2}");
    if (ell < 2 || residue_char(ell) != ell)
        throw std::invalid_argument("ell must be prime");
    if (q < 2) throw std::invalid_argument("q must be a prime power");
    if (ell == residue_char(q))
        throw std::invalid_argument("ell must differ from the residue characteristic");
}

std::uint64_t encode_pair(const FlContext& F, const Mat& a, const Mat& b) {
    std::uint64_t key = 0;
    for (int i = 0; i < 4; ++i) key = key * F.ell + a[i];
    for (int i = 0; i < 4; ++i) key = key * F.ell + b[i];
    return key;
}

}  // namespace

std::uint64_t count_points_pairs(unsigned n, unsigned long q, unsigned long ell) {
    validate(n, q, ell);
    FlContext F{n, ell};
    unsigned long p = residue_char(q);
    auto gl = general_linear_group(F);
    std::uint64_t total = 0;
    for (const auto& sigma : gl) {
        if (F.order(sigma) % p == 0) continue;
        Mat sq = F.pow(sigma, q);
        for (const auto& phi : gl)
            if (F.mul(phi, sigma) == F.mul(sq, phi)) ++total;
    }
    return total;
}

std::uint64_t count_points_centralizer(unsigned n, unsigned long q, unsigned long ell) {
    validate(n, q, ell);
    FlContext F{n, ell};
    unsigned long p = residue_char(q);
    auto gl = general_linear_group(F);
    std::uint64_t total = 0;
    for (const auto& sigma : gl) {
        if (F.order(sigma) % p == 0) continue;
        Mat sq = F.pow(sigma, q);
        // transporter nonempty iff sigma ~ sigma^q; then its size is the
        // centralizer order
        bool conjugate = false;
        for (const auto& g : gl) {
            if (F.mul(g, sigma) == F.mul(sq, g)) {
                conjugate = true;
                break;
            }
        }
        if (!conjugate) continue;
        std::uint64_t cent = 0;
        for (const auto& c : gl)
            if (F.mul(c, sigma) == F.mul(sigma, c)) ++cent;
        total += cent;
    }
    return total;
}

ModuliCountResult count_points(unsigned n, unsigned long q, unsigned long ell,
                               bool with_orbits) {
    validate(n, q, ell);
    FlContext F{n, ell};
    unsigned long p = residue_char(q);
    auto gl = general_linear_group(F);

    std::vector<std::pair<Mat, Mat>> pts;
    for (const auto& sigma : gl) {
        if (F.order(sigma) % p == 0) continue;
        Mat sq = F.pow(sigma, q);
        for (const auto& phi : gl)
            if (F.mul(phi, sigma) == F.mul(sq, phi)) pts.emplace_back(phi, sigma);
    }
    ModuliCountResult res;
    res.points = pts.size();
    if (!with_orbits) return res;

    // canonical representative under simultaneous conjugation
    std::map<std::uint64_t, bool> conj_seen, twist_seen;
    for (const auto& [phi, sigma] : pts) {
        std::uint64_t best = UINT64_MAX;
        for (const auto& g : gl) {
            // g (phi, sigma) g^{-1}: solve g X = Y g by direct products
            // using the inverse through enumeration-free adjugate
            Mat gi;
            if (F.n == 1) {
                // inverse by Fermat
                gi = F.pow(g, ell - 2);
            } else {
                unsigned long det =
                    ((g[0] * g[3]) % ell + ell - (g[1] * g[2]) % ell) % ell;
                unsigned long dinv = 1;
                // extended Fermat inverse of det
                unsigned long e = ell - 2, base = det;
                while (e) {
                    if (e & 1) dinv = (dinv * base) % ell;
                    base = (base * base) % ell;
                    e >>= 1;
                }
                gi = Mat{(g[3] * dinv) % ell, ((ell - g[1] % ell) % ell) * dinv % ell,
                         ((ell - g[2] % ell) % ell) * dinv % ell, (g[0] * dinv) % ell};
            }
            Mat cp = F.mul(F.mul(g, phi), gi);
            Mat cs = F.mul(F.mul(g, sigma), gi);
            best = std::min(best, encode_pair(F, cp, cs));
        }
        conj_seen[best] = true;

        std::uint64_t best_twist = UINT64_MAX;
        for (unsigned long c = 1; c < ell; ++c) {
            Mat cp = phi;
            for (auto& x : cp) x = (x * c) % ell;
            best_twist = std::min(best_twist, encode_pair(F, cp, sigma));
        }
        twist_seen[best_twist] = true;
    }
    res.conjugation_orbits = conj_seen.size();
    res.twist_orbits = twist_seen.size();
    return res;
}

std::uint64_t count_points_n1_closed_form(unsigned long q, unsigned long ell) {
    validate(1, q, ell);
    unsigned long p = residue_char(q);
    unsigned long g = std::gcd(q - 1, ell - 1);
    while (g % p == 0) g /= p;
    return (ell - 1) * g;
}

std::vector<DimensionProbeRow> dimension_probe(unsigned n, unsigned long q,
                                               const std::vector<unsigned long>& ells) {
    std::vector<DimensionProbeRow> rows;
    for (unsigned long ell : ells) {
        DimensionProbeRow row;
        row.ell = ell;
        row.count = count_points_pairs(n, q, ell);
        row.log_ell_count =
            row.count == 0 ? 0.0
                           : std::log(static_cast<double>(row.count)) /
                                 std::log(static_cast<double>(ell));
        row.dim_expected = n * n;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace wdparam
