#include "segre/multmap.hpp"

#include <map>
#include <tuple>

namespace segre {

namespace {

// Degree-t monomials z0^a z1^b z2^c, a+b+c = t, ordered lexicographically in (a,b).
std::vector<std::array<int, 3>> monomials(int t) {
    std::vector<std::array<int, 3>> out;
    if (t < 0) return out;
    for (int a = t; a >= 0; --a)
        for (int b = t - a; b >= 0; --b) out.push_back({a, b, t - a - b});
    return out;
}

std::size_t mono_index(const std::array<int, 3>& m, int t) {
    // position of (a,b,c) in the ordering above
    std::size_t idx = 0;
    for (int a = t; a > m[0]; --a) idx += static_cast<std::size_t>(t - a + 1);
    return idx + static_cast<std::size_t>(t - m[0] - m[1]);
}

}  // namespace

long long mono_dim(int t) { return t < 0 ? 0 : static_cast<long long>(t + 2) * (t + 1) / 2; }

MatQ mono_mult(int var, int t) {
    auto dom = monomials(t);
    MatQ out(static_cast<std::size_t>(mono_dim(t + 1)), dom.size());
    for (std::size_t j = 0; j < dom.size(); ++j) {
        auto m = dom[j];
        m[static_cast<std::size_t>(var)] += 1;
        out.at(mono_index(m, t + 1), j) = 1;
    }
    return out;
}

MatQ omega_h0_basis(int t) {
    // Euler contraction: (P0,P1,P2) in mono(t-1)^3 -> sum z_i P_i in mono(t)
    long long d = mono_dim(t - 1);
    if (d == 0) return MatQ(0, 0);
    std::vector<MatQ> rows;
    MatQ contraction(static_cast<std::size_t>(mono_dim(t)), static_cast<std::size_t>(3 * d));
    for (int i = 0; i < 3; ++i) {
        MatQ mi = mono_mult(i, t - 1);
        for (std::size_t r = 0; r < mi.rows(); ++r)
            for (std::size_t c = 0; c < mi.cols(); ++c)
                contraction.at(r, static_cast<std::size_t>(i) * static_cast<std::size_t>(d) + c) =
                    mi.at(r, c);
    }
    return kernel_basis(contraction);
}

MatQ s2omega_h0_basis(int t) {
    // Symmetric pairs (00,01,02,11,12,22) of mono(t-2); contraction_j = sum_i z_i T_{ij}
    static const int pair_of[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    long long d = mono_dim(t - 2);
    if (d == 0) return MatQ(0, 0);
    std::size_t dd = static_cast<std::size_t>(d);
    MatQ contraction(static_cast<std::size_t>(3 * mono_dim(t - 1)), 6 * dd);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) {
            MatQ mi = mono_mult(i, t - 2);
            std::size_t block = static_cast<std::size_t>(pair_of[i][j]);
            for (std::size_t r = 0; r < mi.rows(); ++r)
                for (std::size_t c = 0; c < mi.cols(); ++c)
                    contraction.at(static_cast<std::size_t>(j) * mi.rows() + r, block * dd + c) +=
                        mi.at(r, c);
        }
    return kernel_basis(contraction);
}

MatQ coords_in_basis(const MatQ& basis, const MatQ& vectors) {
    // Gaussian elimination on [basis | vectors]; basis has full column rank.
    std::size_t n = basis.cols(), m = vectors.cols();
    MatQ aug(basis.rows(), n + m);
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = basis.at(i, j);
        for (std::size_t j = 0; j < m; ++j) aug.at(i, n + j) = vectors.at(i, j);
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_row(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = row;
        while (p < aug.rows() && aug.at(p, col) == 0) ++p;
        if (p == aug.rows()) throw ContradictionError("basis not of full column rank");
        if (p != row)
            for (std::size_t j = col; j < aug.cols(); ++j) std::swap(aug.at(p, j), aug.at(row, j));
        Rat inv = aug.at(row, col);
        for (std::size_t j = col; j < aug.cols(); ++j) aug.at(row, j) /= inv;
        for (std::size_t i = 0; i < aug.rows(); ++i) {
            if (i == row || aug.at(i, col) == 0) continue;
            Rat f = aug.at(i, col);
            for (std::size_t j = col; j < aug.cols(); ++j) aug.at(i, j) -= f * aug.at(row, j);
        }
        pivot_row[col] = row;
        ++row;
    }
    for (std::size_t i = row; i < aug.rows(); ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (aug.at(i, n + j) != 0)
                throw ContradictionError("vector outside basis span");
    MatQ out(n, m);
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t j = 0; j < m; ++j) out.at(col, j) = aug.at(pivot_row[col], n + j);
    return out;
}

namespace {

// componentwise multiplication mono(s)^k -> mono(s+1)^k applied to columns
MatQ componentwise_mult(const MatQ& cols, int var, int s, int k) {
    MatQ mi = mono_mult(var, s);
    std::size_t din = static_cast<std::size_t>(mono_dim(s));
    std::size_t dout = static_cast<std::size_t>(mono_dim(s + 1));
    MatQ out(dout * static_cast<std::size_t>(k), cols.cols());
    for (std::size_t c = 0; c < cols.cols(); ++c)
        for (int comp = 0; comp < k; ++comp)
            for (std::size_t r = 0; r < mi.rows(); ++r) {
                Rat v;
                for (std::size_t q = 0; q < mi.cols(); ++q)
                    if (mi.at(r, q) != 0)
                        v += mi.at(r, q) * cols.at(static_cast<std::size_t>(comp) * din + q, c);
                out.at(static_cast<std::size_t>(comp) * dout + r, c) = v;
            }
    return out;
}

struct Key {
    int lam, t, p, var;
    bool operator<(const Key& o) const {
        return std::tie(lam, t, p, var) < std::tie(o.lam, o.t, o.p, o.var);
    }
};

MatQ h0_mult(int lam, int t, int var) {
    // H^0(S^lam Omega(t-1)) -> H^0(S^lam Omega(t)) in model coordinates
    switch (lam) {
        case 0: return mono_mult(var, t - 1);
        case 1: {
            MatQ bin = omega_h0_basis(t - 1);
            MatQ bout = omega_h0_basis(t);
            if (bin.cols() == 0 || bout.cols() == 0) return MatQ(bout.cols(), bin.cols());
            return coords_in_basis(bout, componentwise_mult(bin, var, t - 2, 3));
        }
        default: {
            MatQ bin = s2omega_h0_basis(t - 1);
            MatQ bout = s2omega_h0_basis(t);
            if (bin.cols() == 0 || bout.cols() == 0) return MatQ(bout.cols(), bin.cols());
            return coords_in_basis(bout, componentwise_mult(bin, var, t - 3, 6));
        }
    }
}

long long h1_dim(int lam, int t) {
    if (lam == 1) return t == 0 ? 1 : 0;
    if (lam == 2) return (t == 1 || t == 2) ? 3 : 0;
    return 0;
}

}  // namespace

long long factor_model_dim(int lam, int t, int p) {
    switch (p) {
        case 0:
            if (lam == 0) return mono_dim(t);
            return (lam == 1 ? omega_h0_basis(t) : s2omega_h0_basis(t)).cols();
        case 1: return h1_dim(lam, t);
        case 2: {
            // Serre-dual of H^0 of the (-3)-twisted dual factor
            int s = lam == 0 ? -t - 3 : lam == 1 ? -t : 3 - t;
            return factor_model_dim(lam, s, 0);
        }
        default: return 0;
    }
}

MatQ factor_mult(int lam, int t, int p, int var) {
    static std::map<Key, MatQ> cache;
    Key key{lam, t, p, var};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    MatQ out;
    if (p == 0) {
        out = h0_mult(lam, t, var);
    } else if (p == 1) {
        long long din = h1_dim(lam, t - 1), dout = h1_dim(lam, t);
        if (din != 0 && dout != 0)
            throw IndeterminateError(
                "multiplication map on H^1(S^2 Omega) between twists 1 and 2 is not modeled");
        out = MatQ(static_cast<std::size_t>(dout), static_cast<std::size_t>(din));
    } else if (p == 2) {
        // transpose of the H^0 multiplication between the Serre-dual twists
        int s = lam == 0 ? -t - 2 : lam == 1 ? -t + 1 : 4 - t;
        out = h0_mult(lam, s, var).transpose();
    } else {
        out = MatQ(0, 0);
    }
    cache.emplace(key, out);
    return out;
}

}  // namespace segre
