#include "qaff/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace qaff {

int AffineType::rank() const {
    switch (family) {
        case 'A':
            if (twist == 1) return index;
            if (twist == 2) return index % 2 == 0 ? index / 2 : (index + 1) / 2;
            break;
        case 'B':
        case 'C':
            if (twist == 1) return index;
            break;
        case 'D':
            if (twist == 1) return index;
            if (twist == 2) return index - 1;
            if (twist == 3) return 2;   // D4^3, finite part of rank 2
            break;
        case 'E':
            if (twist == 1) return index;
            if (twist == 2) return 4;   // E6^2, finite part of rank 4
            break;
        case 'F':
        case 'G':
            if (twist == 1) return index;
            break;
    }
    throw domain_error("unsupported affine type " + label());
}

std::string AffineType::label() const {
    return std::string(1, family) + std::to_string(index) + "^" + std::to_string(twist);
}

AffineType parse_affine_type(const std::string& s) {
    size_t pos = 0;
    auto fail = [&]() -> AffineType { throw domain_error("cannot parse affine type '" + s + "'"); };
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos]))) fail();
    AffineType t;
    t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[pos++])));
    if (t.family < 'A' || t.family > 'G') fail();
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) fail();
    t.index = std::stoi(s.substr(digits, pos - digits));
    if (pos >= s.size() || s[pos] != '^') fail();
    ++pos;
    digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) fail();
    t.twist = std::stoi(s.substr(digits, pos - digits));
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) fail();
    return t;
}

Weight Weight::operator+(const Weight& o) const {
    if (coeffs.size() != o.coeffs.size()) throw std::invalid_argument("Weight: size mismatch");
    Weight w(coeffs);
    for (size_t i = 0; i < coeffs.size(); ++i) w.coeffs[i] += o.coeffs[i];
    return w;
}

Weight Weight::operator-(const Weight& o) const {
    if (coeffs.size() != o.coeffs.size()) throw std::invalid_argument("Weight: size mismatch");
    Weight w(coeffs);
    for (size_t i = 0; i < coeffs.size(); ++i) w.coeffs[i] -= o.coeffs[i];
    return w;
}

bool Weight::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c == 0; });
}

long long CartanData::mur(int i) const {
    Rat v = r[static_cast<size_t>(i)] * Rat(mu[static_cast<size_t>(i)]);
    if (!v.is_integer() || v.num() <= 0) throw std::logic_error("mu_i r_i not a positive integer");
    return v.num();
}

namespace {

// Edge of the affine Dynkin diagram: C[i][j] = cij, C[j][i] = cji.
struct Edge {
    int i, j, cij, cji;
};

void validate_range(const AffineType& t) {
    const int ix = t.index;
    bool ok = false;
    if (t.twist == 1) {
        switch (t.family) {
            case 'A': ok = ix >= 1; break;
            case 'B': ok = ix >= 3; break;
            case 'C': ok = ix >= 2; break;
            case 'D': ok = ix >= 4; break;
            case 'E': ok = ix == 6 || ix == 7 || ix == 8; break;
            case 'F': ok = ix == 4; break;
            case 'G': ok = ix == 2; break;
        }
    } else if (t.twist == 2) {
        switch (t.family) {
            case 'A': ok = (ix % 2 == 0 && ix >= 2) || (ix % 2 == 1 && ix >= 5); break;
            case 'D': ok = ix >= 3; break;
            case 'E': ok = ix == 6; break;
            default: break;
        }
    } else if (t.twist == 3) {
        ok = t.family == 'D' && ix == 4;
    }
    if (!ok) throw domain_error("invalid rank for label " + t.label());
}

std::vector<Edge> diagram_edges(const AffineType& t, int n) {
    std::vector<Edge> e;
    auto single = [&](int i, int j) { e.push_back({i, j, -1, -1}); };
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i) single(i, i + 1);
    };
    if (t.twist == 1) {
        switch (t.family) {
            case 'A':
                if (n == 1) { e.push_back({0, 1, -2, -2}); break; }
                chain(0, n);
                single(n, 0);
                break;
            case 'B':
                single(0, 2); single(1, 2);
                chain(2, n - 1);
                e.push_back({n - 1, n, -1, -2});
                break;
            case 'C':
                e.push_back({0, 1, -1, -2});
                chain(1, n - 1);
                e.push_back({n - 1, n, -2, -1});
                break;
            case 'D':
                single(0, 2); single(1, 2);
                chain(2, n - 2);
                single(n - 2, n - 1); single(n - 2, n);
                break;
            case 'E':
                if (n == 6) { chain(1, 5); single(3, 6); single(0, 6); }
                if (n == 7) { chain(0, 6); single(3, 7); }
                if (n == 8) { chain(0, 7); single(5, 8); }
                break;
            case 'F':
                single(0, 1); single(1, 2);
                e.push_back({2, 3, -1, -2});
                single(3, 4);
                break;
            case 'G':
                single(0, 1);
                e.push_back({1, 2, -1, -3});
                break;
        }
    } else if (t.twist == 2) {
        if (t.family == 'A' && t.index % 2 == 0) {
            // reversed numbering: the exceptional node sits at position n
            if (n == 1) {
                e.push_back({0, 1, -1, -4});
            } else {
                e.push_back({0, 1, -1, -2});
                chain(1, n - 1);
                e.push_back({n - 1, n, -1, -2});
            }
        } else if (t.family == 'A') {
            single(0, 2); single(1, 2);
            chain(2, n - 1);
            e.push_back({n - 1, n, -2, -1});
        } else if (t.family == 'D') {
            e.push_back({0, 1, -2, -1});
            chain(1, n - 1);
            e.push_back({n - 1, n, -1, -2});
        } else { // E6^2
            single(0, 1); single(1, 2);
            e.push_back({2, 3, -2, -1});
            single(3, 4);
        }
    } else { // D4^3
        single(0, 1);
        e.push_back({1, 2, -3, -1});
    }
    return e;
}

long long rvee_hvee_of(const AffineType& t, int n) {
    if (t.twist == 1) {
        switch (t.family) {
            case 'A': return n + 1;
            case 'B': return 2 * (2 * n - 1);
            case 'C': return 2 * (n + 1);
            case 'D': return 2 * n - 2;
            case 'E': return n == 6 ? 12 : (n == 7 ? 18 : 30);
            case 'F': return 18;
            case 'G': return 12;
        }
    }
    // twisted types: numbers of the underlying simply-laced algebra
    if (t.family == 'A') return t.index + 1;       // A_m with m = 2n or 2n-1
    if (t.family == 'D' && t.twist == 2) return 2 * t.index - 2;
    if (t.family == 'E') return 12;
    return 6;                                      // D4^3
}

// Fraction-free determinant, exact for the small integer matrices here.
long long int_det(std::vector<std::vector<long long>> m) {
    const size_t k = m.size();
    if (k == 0) return 1;
    long long sign = 1, prev = 1;
    for (size_t c = 0; c < k; ++c) {
        size_t piv = c;
        while (piv < k && m[piv][c] == 0) ++piv;
        if (piv == k) return 0;
        if (piv != c) { std::swap(m[piv], m[c]); sign = -sign; }
        for (size_t rr = c + 1; rr < k; ++rr) {
            for (size_t cc = c + 1; cc < k; ++cc)
                m[rr][cc] = (m[rr][cc] * m[c][c] - m[rr][c] * m[c][cc]) / prev;
            m[rr][c] = 0;
        }
        prev = m[c][c];
    }
    return sign * m[k - 1][k - 1];
}

void affine_self_check(const std::vector<std::vector<int>>& C, const std::string& label) {
    const int sz = static_cast<int>(C.size());
    for (int i = 0; i < sz; ++i) {
        if (C[i][i] != 2) throw std::logic_error(label + ": diagonal entry not 2");
        for (int j = 0; j < sz; ++j) {
            if (i == j) continue;
            if (C[i][j] > 0) throw std::logic_error(label + ": positive off-diagonal entry");
            if ((C[i][j] == 0) != (C[j][i] == 0)) throw std::logic_error(label + ": asymmetric zero pattern");
        }
    }
    // affine criterion: proper principal minors strictly positive, det = 0
    for (unsigned mask = 1; mask + 1 < (1u << sz); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < sz; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        std::vector<std::vector<long long>> sub(idx.size(), std::vector<long long>(idx.size()));
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = 0; b < idx.size(); ++b)
                sub[a][b] = C[idx[a]][idx[b]];
        if (int_det(std::move(sub)) <= 0)
            throw std::logic_error(label + ": proper principal minor not positive");
    }
    std::vector<std::vector<long long>> full(sz, std::vector<long long>(sz));
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) full[i][j] = C[i][j];
    if (int_det(std::move(full)) != 0)
        throw std::logic_error(label + ": determinant of affine matrix is nonzero");
}

} // namespace

CartanData build_cartan(const AffineType& t) {
    validate_range(t);
    CartanData cd;
    cd.type = t;
    cd.n = t.rank();
    cd.twist = t.twist;
    const int sz = cd.n + 1;

    cd.C.assign(sz, std::vector<int>(sz, 0));
    for (int i = 0; i < sz; ++i) cd.C[i][i] = 2;
    for (const Edge& e : diagram_edges(t, cd.n)) {
        cd.C[e.i][e.j] = e.cij;
        cd.C[e.j][e.i] = e.cji;
    }
    affine_self_check(cd.C, t.label());

    cd.mu.assign(sz, 1);
    if (t.is_a_even_twisted()) cd.mu[cd.n] = 2;

    // symmetrizers: propagate r_j = r_i * C_ij / C_ji along the diagram,
    // then rescale to the unique normalization with integral mu_i r_i of gcd 1
    cd.r.assign(sz, Rat(0));
    cd.r[0] = Rat(1);
    std::vector<int> todo{0};
    while (!todo.empty()) {
        int i = todo.back();
        todo.pop_back();
        for (int j = 0; j < sz; ++j) {
            if (j == i || cd.C[i][j] == 0 || !cd.r[j].is_zero()) continue;
            cd.r[j] = cd.r[i] * Rat(cd.C[i][j], cd.C[j][i]);
            todo.push_back(j);
        }
    }
    long long den_lcm = 1, num_gcd = 0;
    for (int i = 0; i < sz; ++i) {
        Rat mr = cd.r[i] * Rat(cd.mu[i]);
        den_lcm = std::lcm(den_lcm, mr.den());
    }
    for (int i = 0; i < sz; ++i) {
        Rat mr = cd.r[i] * Rat(cd.mu[i]) * Rat(den_lcm);
        num_gcd = std::gcd(num_gcd, mr.num());
    }
    for (int i = 0; i < sz; ++i) cd.r[i] = cd.r[i] * Rat(den_lcm, num_gcd);
    for (int i = 0; i < sz; ++i) {
        for (int j = 0; j < sz; ++j) {
            if (cd.r[i] * Rat(cd.C[i][j]) != cd.r[j] * Rat(cd.C[j][i]))
                throw std::logic_error(t.label() + ": symmetrizer table inconsistent");
        }
        (void)cd.mur(i);
    }

    cd.d.assign(sz, 1);
    for (int i = 1; i <= cd.n; ++i)
        if (cd.twist > 1 && cd.r[i] == Rat(cd.twist)) cd.d[i] = cd.twist;

    cd.bar_node.assign(sz, 0);
    for (int i = 1; i <= cd.n; ++i) cd.bar_node[i] = i;
    if (t.twist == 1) {
        if (t.family == 'A') {
            for (int i = 1; i <= cd.n; ++i) cd.bar_node[i] = cd.n + 1 - i;
        } else if (t.family == 'D' && cd.n % 2 == 1) {
            cd.bar_node[cd.n - 1] = cd.n;
            cd.bar_node[cd.n] = cd.n - 1;
        } else if (t.family == 'E' && cd.n == 6) {
            cd.bar_node[1] = 5; cd.bar_node[5] = 1;
            cd.bar_node[2] = 4; cd.bar_node[4] = 2;
        }
    }

    cd.rvee_hvee = rvee_hvee_of(t, cd.n);
    return cd;
}

CartanData build_cartan(const std::string& label) {
    return build_cartan(parse_affine_type(label));
}

bool weight_leq(const Weight& w1, const Weight& w2, const CartanData& cd) {
    const size_t n = static_cast<size_t>(cd.n);
    if (w1.coeffs.size() != n || w2.coeffs.size() != n)
        throw std::invalid_argument("weight_leq: weight size does not match rank");
    // solve C_fin * c = w2 - w1 exactly; answer yes iff c is a
    // nonnegative integer vector
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m[i][j] = Rat(cd.C[i + 1][j + 1]);
        m[i][n] = Rat(w2.coeffs[i] - w1.coeffs[i]);
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::logic_error("finite Cartan matrix singular");
        std::swap(m[piv], m[col]);
        Rat inv = Rat(1) / m[col][col];
        for (size_t c = col; c <= n; ++c) m[col][c] *= inv;
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            Rat f = m[row][col];
            for (size_t c = col; c <= n; ++c) m[row][c] -= f * m[col][c];
        }
    }
    for (size_t i = 0; i < n; ++i) {
        const Rat& c = m[i][n];
        if (!c.is_integer() || c.num() < 0) return false;
    }
    return true;
}

} // namespace qaff
